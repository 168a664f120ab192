// Test-side oracles, independent of the library's series kernel.
//
// Expected values marked as derived in the test comments come from these:
// Bernoulli numbers give the Todd and L coefficients in closed form, and a
// plain dense polynomial toolkit expands the small products the tests
// freeze. Nothing here touches eqclass/templates.hpp.
#ifndef EQCLASS_TEST_ORACLES_HPP
#define EQCLASS_TEST_ORACLES_HPP

#include <vector>

#include "eqclass/rational.hpp"

namespace oracles {

using eqclass::Rational;

inline Rational binomial(long n, long k) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

// Bernoulli numbers, B1 = -1/2 convention, from the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0
inline std::vector<Rational> bernoulli(size_t order) {
    std::vector<Rational> b(order + 1, Rational(0));
    b[0] = 1;
    for (size_t m = 1; m <= order; ++m) {
        Rational acc(0);
        for (size_t j = 0; j < m; ++j)
            acc += binomial(static_cast<long>(m) + 1, static_cast<long>(j)) *
                   b[j];
        b[m] = -acc / Rational(static_cast<long>(m) + 1);
    }
    return b;
}

inline Rational factorial(size_t n) {
    Rational f(1);
    for (size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
    return f;
}

// alpha/(1 - e^{-alpha}) = sum B+_k alpha^k / k!  with B+_1 = +1/2
inline std::vector<Rational> todd_coefficients(size_t order) {
    std::vector<Rational> b = bernoulli(order);
    std::vector<Rational> t(order + 1);
    for (size_t k = 0; k <= order; ++k) {
        Rational bp = (k % 2 == 1) ? -b[k] : b[k];
        t[k] = bp / factorial(k);
    }
    return t;
}

// alpha/tanh(alpha) = sum 2^{2k} B_{2k} alpha^{2k} / (2k)!
inline std::vector<Rational> lclass_coefficients(size_t order) {
    std::vector<Rational> b = bernoulli(order);
    std::vector<Rational> l(order + 1, Rational(0));
    for (size_t k = 0; 2 * k <= order; ++k)
        l[2 * k] = pow_rational(Rational(2), static_cast<long>(2 * k)) *
                   b[2 * k] / factorial(2 * k);
    return l;
}

// dense truncated polynomial helpers (degree <= cap)
inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b,
                                      size_t cap) {
    std::vector<Rational> r(cap + 1, Rational(0));
    for (size_t i = 0; i < a.size() && i <= cap; ++i)
        for (size_t j = 0; j < b.size() && i + j <= cap; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline std::vector<Rational> poly_pow(std::vector<Rational> a, int e,
                                      size_t cap) {
    std::vector<Rational> r(cap + 1, Rational(0));
    r[0] = 1;
    for (int i = 0; i < e; ++i) r = poly_mul(r, a, cap);
    return r;
}

} // namespace oracles

#endif
