// Test-only oracles, kept independent of the library's arithmetic path:
// a schoolbook int64 polynomial type for freezing small expansions, and a
// fraction-free integer determinant for cross-checking the 6x6 matrices by
// point evaluation.
#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

#include "charvar/poly.hpp"

namespace oracle {

struct SmallPoly {
    std::vector<std::int64_t> c;  // little-endian, index = degree

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline SmallPoly sp(std::vector<std::int64_t> coeffs) {
    SmallPoly p{std::move(coeffs)};
    p.trim();
    return p;
}

inline SmallPoly add(const SmallPoly& a, const SmallPoly& b) {
    SmallPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
}

inline SmallPoly sub(const SmallPoly& a, const SmallPoly& b) {
    SmallPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
}

inline SmallPoly mul(const SmallPoly& a, const SmallPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    SmallPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

inline SmallPoly pow(SmallPoly base, unsigned n) {
    SmallPoly out = sp({1});
    while (n > 0) {
        if (n & 1U) out = mul(out, base);
        n >>= 1U;
        if (n > 0) base = mul(base, base);
    }
    return out;
}

// Exact halving; asserts every coefficient is even.
inline SmallPoly half(const SmallPoly& a) {
    SmallPoly out = a;
    for (auto& v : out.c) {
        assert(v % 2 == 0);
        v /= 2;
    }
    return out;
}

inline charvar::Poly to_poly(const SmallPoly& a) {
    std::vector<mpz_class> coeffs;
    coeffs.reserve(a.c.size());
    for (auto v : a.c) coeffs.emplace_back(static_cast<long>(v));
    return charvar::Poly::from_coeffs(std::move(coeffs));
}

// Fraction-free (Bareiss) determinant of an integer matrix.
inline mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                assert(r == 0);
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline charvar::Poly random_poly(std::mt19937& rng, int max_degree, long max_abs) {
    std::uniform_int_distribution<int> deg_dist(-1, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-max_abs, max_abs);
    const int deg = deg_dist(rng);
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(coeff_dist(rng));
    return charvar::Poly::from_coeffs(std::move(coeffs));
}

}  // namespace oracle
