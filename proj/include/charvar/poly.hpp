#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace charvar {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Canonical form is maintained at all times: no trailing zero coefficient,
/// the zero polynomial is the empty coefficient vector and reports degree -1.
/// Values are immutable in spirit: every operation returns a fresh polynomial
/// and no method mutates shared state, so instances can be shared freely
/// across threads.
class Poly {
public:
    Poly() = default;
    Poly(long constant);  // NOLINT(google-explicit-constructor)
    explicit Poly(const mpz_class& constant);

    /// The variable q itself.
    static Poly var();

    /// Builds a polynomial from little-endian coefficients (index = degree),
    /// trimming trailing zeros into canonical form.
    static Poly from_coeffs(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, with -1 as the distinguished marker for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^i (zero beyond the degree).
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class leading_coeff() const;

    /// Horner evaluation at an integer point.
    mpz_class eval(const mpz_class& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

    /// Human-readable rendering, e.g. "q^4 + q^3 - q^2 - q".
    std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& base, unsigned long exponent);

/// Exact division in Z[q]. Thrown when the division leaves a remainder; the
/// remainder rides along so callers can report which identity broke.
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(const Poly& dividend, const Poly& divisor, Poly remainder);
    const Poly& remainder() const { return remainder_; }

private:
    Poly remainder_;
};

/// Returns s with s * divisor == dividend, or throws NotDivisibleError.
Poly exact_div(const Poly& dividend, const Poly& divisor);

/// A staged rational expression failed to clear its denominators.
class NotIntegralError : public std::runtime_error {
public:
    explicit NotIntegralError(const std::string& what);
};

/// Univariate polynomial over arbitrary-precision rationals, kept in lowest
/// terms and canonical (trimmed) form. Staging type only: it hosts the
/// half-integer intermediate expressions of the closed forms, and every
/// public result is collapsed back to a Poly via to_integral/halve.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Poly& p);  // NOLINT(google-explicit-constructor)
    explicit RatPoly(const mpq_class& constant);
    static RatPoly from_coeffs(std::vector<mpq_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(const mpq_class& scalar, const RatPoly& p);
    friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const RatPoly& lhs, const RatPoly& rhs) { return !(lhs == rhs); }

    /// Succeeds iff every reduced coefficient has denominator 1.
    Poly to_integral() const;

    std::string to_string() const;

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

/// Collapses a staged rational expression (which already carries its 1/2
/// factors) to an integer polynomial. Throws NotIntegralError when the
/// expression failed to clear denominators — a correctness alarm, since the
/// closed forms in scope are integral.
Poly halve(const RatPoly& staged);

/// A divisibility or sum constraint on a derived quantity failed; signals a
/// transcription bug rather than a recoverable condition.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what);
};

}  // namespace charvar
