#include "charvar/poly.hpp"

#include <sstream>
#include <utility>

namespace charvar {

namespace {

const mpz_class kZero = 0;

void append_term(std::ostream& os, const mpz_class& c, int deg, bool first) {
    mpz_class a = abs(c);
    if (first) {
        if (sgn(c) < 0) os << "-";
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (deg == 0 || a != 1) os << a.get_str();
    if (deg >= 1) {
        if (deg == 0 || a != 1) os << "*";
        os << "q";
        if (deg >= 2) os << "^" << deg;
    }
}

}  // namespace

Poly::Poly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

Poly::Poly(const mpz_class& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::var() {
    Poly p;
    p.coeffs_ = {0, 1};
    return p;
}

Poly Poly::from_coeffs(std::vector<mpz_class> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

mpz_class Poly::leading_coeff() const {
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

mpz_class Poly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        append_term(os, c, d, first);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly pow(const Poly& base, unsigned long exponent) {
    Poly result(1);
    Poly square = base;
    while (exponent > 0) {
        if (exponent & 1UL) result *= square;
        exponent >>= 1UL;
        if (exponent > 0) square *= square;
    }
    return result;
}

NotDivisibleError::NotDivisibleError(const Poly& dividend, const Poly& divisor, Poly remainder)
    : std::runtime_error("not divisible: (" + dividend.to_string() + ") / (" + divisor.to_string() +
                         ") leaves remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (dividend.is_zero()) return Poly();

    std::vector<mpz_class> rem(dividend.coeffs().begin(), dividend.coeffs().end());
    const auto& d = divisor.coeffs();
    const int dd = divisor.degree();
    int rd = dividend.degree();
    if (rd < dd) throw NotDivisibleError(dividend, divisor, dividend);

    std::vector<mpz_class> quot(static_cast<std::size_t>(rd - dd) + 1);
    for (; rd >= dd; --rd) {
        mpz_class& lead = rem[static_cast<std::size_t>(rd)];
        if (lead == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), d.back().get_mpz_t());
        if (r != 0)
            throw NotDivisibleError(dividend, divisor,
                                    Poly::from_coeffs({rem.begin(), rem.begin() + rd + 1}));
        const std::size_t shift = static_cast<std::size_t>(rd - dd);
        quot[shift] = q;
        for (int i = 0; i <= dd; ++i) rem[shift + static_cast<std::size_t>(i)] -= q * d[static_cast<std::size_t>(i)];
    }
    Poly remainder = Poly::from_coeffs(std::move(rem));
    if (!remainder.is_zero()) throw NotDivisibleError(dividend, divisor, std::move(remainder));
    return Poly::from_coeffs(std::move(quot));
}

NotIntegralError::NotIntegralError(const std::string& what) : std::runtime_error(what) {}

RatPoly::RatPoly(const Poly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly::RatPoly(const mpq_class& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
        coeffs_.back().canonicalize();
    }
}

RatPoly RatPoly::from_coeffs(std::vector<mpq_class> coeffs) {
    RatPoly p;
    p.coeffs_ = std::move(coeffs);
    for (auto& c : p.coeffs_) c.canonicalize();
    p.trim();
    return p;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::operator-() const {
    RatPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return RatPoly();
    std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RatPoly::from_coeffs(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

RatPoly operator*(const mpq_class& scalar, const RatPoly& p) {
    if (scalar == 0) return RatPoly();
    RatPoly out(p);
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

Poly RatPoly::to_integral() const {
    std::vector<mpz_class> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1)
            throw NotIntegralError("non-integral coefficient " + coeffs_[i].get_str() +
                                   " at q^" + std::to_string(i) + " in " + to_string());
        out.push_back(coeffs_[i].get_num());
    }
    return Poly::from_coeffs(std::move(out));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpq_class& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (d == 0 || a != 1) os << a.get_str();
        if (d >= 1) {
            if (a != 1) os << "*";
            os << "q";
            if (d >= 2) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

Poly halve(const RatPoly& staged) { return staged.to_integral(); }

InvariantViolation::InvariantViolation(const std::string& what) : std::runtime_error(what) {}

}  // namespace charvar
