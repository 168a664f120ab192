// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1},
// fully reduced modulo the N-th cyclotomic polynomial Phi_N, so equality is
// coefficient-wise. Phi_N comes from the recursive product formula
// Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d, and inverses from the extended
// Euclidean algorithm against Phi_N (irreducible over Q, so any nonzero
// element of smaller degree is coprime to it).
//
// Phi_N is monic, so reduction needs no divisions; the rows x^k mod Phi_N
// are precomputed per conductor and multiplication reduces by back-
// substitution against them.
//
// Values of different conductors mix by lifting both to lcm(M,N) via
// zeta_M = zeta_N^{N/M}; the lift is capped by EQCLASS_CONDUCTOR_MAX
// (default 64) to catch accidental blowup.
#ifndef EQCLASS_CYCLOTOMIC_HPP
#define EQCLASS_CYCLOTOMIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "eqclass/rational.hpp"

namespace eqclass {

namespace detail {

// Dense univariate polynomials over Q, coefficient of x^i at index i.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == Rational(0)) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Rational(0)) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qpoly_trim(r);
    return r;
}

inline void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    qpoly_trim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
    const Rational lead = b.back();
    const bool monic = lead == Rational(1);
    while (r.size() >= b.size() && !r.empty()) {
        Rational c = monic ? r.back() : r.back() / lead;
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        qpoly_trim(r);
    }
    qpoly_trim(q);
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline long conductor_cap() {
    static const long cap = [] {
        if (const char* s = std::getenv("EQCLASS_CONDUCTOR_MAX")) {
            long v = std::atol(s);
            if (v > 0) return v;
        }
        return 64L;
    }();
    return cap;
}

struct FieldData {
    long phi = 1;
    QPoly minimal;                       // Phi_N, monic
    std::vector<QPoly> reduction_rows;   // x^{phi+j} mod Phi_N
};

// per-conductor tables; node addresses are stable, inserts are serialized
inline const FieldData& field_data(long n) {
    static std::map<long, std::unique_ptr<FieldData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    // Phi_m bottom-up over divisors so nothing re-enters the lock
    std::map<long, QPoly> phi_polys;
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        if (auto cit = cache.find(m); cit != cache.end()) {
            phi_polys.emplace(m, cit->second->minimal);
            continue;
        }
        QPoly num(static_cast<size_t>(m) + 1, Rational(0));
        num[0] = Rational(-1);
        num[static_cast<size_t>(m)] = Rational(1); // x^m - 1
        QPoly den{Rational(1)};
        for (auto& [d, p] : phi_polys)
            if (m % d == 0 && d < m) den = qpoly_mul(den, p);
        QPoly q, r;
        qpoly_divmod(num, den, q, r);
        phi_polys.emplace(m, std::move(q));
    }
    auto data = std::make_unique<FieldData>();
    data->minimal = phi_polys.at(n);
    data->phi = static_cast<long>(data->minimal.size()) - 1;
    // x^{phi} = -sum_{i<phi} Phi[i] x^i, then climb degree by degree
    size_t phi = static_cast<size_t>(data->phi);
    size_t top = std::max<size_t>(static_cast<size_t>(n) > 0 ? n - 1 : 0,
                                  phi > 0 ? 2 * phi - 2 : 0);
    for (size_t k = phi; k <= top; ++k) {
        QPoly row(phi, Rational(0));
        if (k == phi) {
            for (size_t i = 0; i < phi; ++i) row[i] = -data->minimal[i];
        } else {
            const QPoly& prev = data->reduction_rows.back(); // x^{k-1}
            // x * prev, reducing the overflow through the first row
            for (size_t i = 0; i + 1 < phi; ++i) row[i + 1] = prev[i];
            if (!(prev[phi - 1] == Rational(0))) {
                const QPoly& base = data->reduction_rows.front();
                for (size_t i = 0; i < phi; ++i)
                    row[i] += prev[phi - 1] * base[i];
            }
        }
        data->reduction_rows.push_back(std::move(row));
    }
    return *cache.emplace(n, std::move(data)).first->second;
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

    explicit Cyclotomic(Rational r)
        : conductor_(1), coeffs_{std::move(r)} {}

    Cyclotomic(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {
        check_conductor(conductor_);
        coeffs_.resize(
            static_cast<size_t>(detail::field_data(conductor_).phi),
            Rational(0));
    }

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }
    static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }

    // zeta_N^{t*N}; requires den(t) | N.
    static Cyclotomic root_of_unity(const Angle& t, long n) {
        check_conductor(n);
        long d = t.denominator_long();
        if (n % d != 0)
            throw conductor_mismatch("angle " + t.str() +
                                     " does not fit conductor " +
                                     std::to_string(n));
        BigInt k = t.turns().numerator() * (n / d);
        long power = mpz_class(k % n).get_si();
        detail::QPoly x(static_cast<size_t>(power) + 1, Rational(0));
        x[static_cast<size_t>(power)] = Rational(1);
        return from_poly(n, std::move(x));
    }

    static Cyclotomic root_of_unity(const Angle& t) {
        return root_of_unity(t, t.denominator_long());
    }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != Rational(0)) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != Rational(0)) return false;
        return true;
    }

    // only valid when is_rational()
    const Rational& rational_value() const { return coeffs_[0]; }

    Cyclotomic lift_to(long n) const {
        if (n == conductor_) return *this;
        check_conductor(n);
        if (n % conductor_ != 0)
            throw conductor_mismatch("cannot lift conductor " +
                                     std::to_string(conductor_) + " into " +
                                     std::to_string(n));
        long stride = n / conductor_;
        detail::QPoly p;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == Rational(0)) continue;
            size_t pos = i * static_cast<size_t>(stride);
            if (p.size() <= pos) p.resize(pos + 1, Rational(0));
            p[pos] = coeffs_[i];
        }
        return from_poly(n, std::move(p));
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) return lifted(a, b, '+');
        Cyclotomic r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] += b.coeffs_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) return lifted(a, b, '-');
        Cyclotomic r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) return lifted(a, b, '*');
        const size_t phi = a.coeffs_.size();
        detail::QPoly p(2 * phi - 1, Rational(0));
        for (size_t i = 0; i < phi; ++i) {
            if (a.coeffs_[i] == Rational(0)) continue;
            for (size_t j = 0; j < phi; ++j) {
                if (b.coeffs_[j] == Rational(0)) continue;
                p[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_poly(a.conductor_, std::move(p));
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        if (conductor_ == o.conductor_) {
            for (size_t i = 0; i < coeffs_.size(); ++i)
                coeffs_[i] += o.coeffs_[i];
            return *this;
        }
        return *this = *this + o;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        if (conductor_ == o.conductor_) {
            for (size_t i = 0; i < coeffs_.size(); ++i)
                coeffs_[i] -= o.coeffs_[i];
            return *this;
        }
        return *this = *this - o;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        return a * s;
    }

    Cyclotomic invert() const {
        if (is_zero()) throw division_by_zero("inverting zero cyclotomic");
        if (is_rational()) {
            Cyclotomic r = *this;
            r.coeffs_[0] = Rational(1) / r.coeffs_[0];
            return r;
        }
        // extended Euclid: u*f + v*Phi = gcd = const, so f^{-1} = u/gcd
        detail::QPoly f = as_poly();
        detail::QPoly g = detail::field_data(conductor_).minimal;
        detail::QPoly r0 = g, r1 = f;
        detail::QPoly u0{}, u1{Rational(1)}; // coefficients of f in r0, r1
        while (true) {
            detail::QPoly q, rem;
            detail::qpoly_divmod(r0, r1, q, rem);
            if (rem.empty())
                break; // r1 is the gcd (a nonzero constant: Phi irreducible)
            detail::QPoly qu = detail::qpoly_mul(q, u1);
            detail::QPoly nu = u0;
            if (nu.size() < qu.size()) nu.resize(qu.size(), Rational(0));
            for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
            detail::qpoly_trim(nu);
            r0 = std::move(r1);
            r1 = std::move(rem);
            u0 = std::move(u1);
            u1 = std::move(nu);
        }
        const Rational c = r1[0];
        for (auto& x : u1) x /= c;
        return from_poly(conductor_, std::move(u1));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.invert();
    }

    // complex conjugation: zeta -> zeta^{N-1}
    Cyclotomic conjugate() const {
        if (conductor_ <= 2) return *this;
        detail::QPoly acc;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == Rational(0)) continue;
            size_t pos = (i * static_cast<size_t>(conductor_ - 1)) %
                         static_cast<size_t>(conductor_);
            if (acc.size() <= pos) acc.resize(pos + 1, Rational(0));
            acc[pos] += coeffs_[i];
        }
        return from_poly(conductor_, std::move(acc));
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return invert().pow(-e);
        Cyclotomic acc = one(), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        long n = std::lcm(a.conductor_, b.conductor_);
        return a.lift_to(n).coeffs_ == b.lift_to(n).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
        return !(a == b);
    }

    // floating approximation, display only
    std::complex<double> embed() const {
        std::complex<double> z(0.0, 0.0);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == Rational(0)) continue;
            double arg = 2.0 * M_PI * static_cast<double>(k) /
                         static_cast<double>(conductor_);
            z += coeffs_[k].to_double() *
                 std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return z;
    }

private:
    static void check_conductor(long n) {
        if (n < 1)
            throw conductor_mismatch("conductor must be positive");
        if (n > detail::conductor_cap())
            throw conductor_too_large(
                "conductor " + std::to_string(n) + " exceeds cap " +
                std::to_string(detail::conductor_cap()) +
                " (EQCLASS_CONDUCTOR_MAX)");
    }

    detail::QPoly as_poly() const {
        detail::QPoly p = coeffs_;
        detail::qpoly_trim(p);
        return p;
    }

    static Cyclotomic from_poly(long n, detail::QPoly p) {
        const detail::FieldData& fd = detail::field_data(n);
        const size_t phi = static_cast<size_t>(fd.phi);
        // back-substitute overflowing powers through the reduction rows
        for (size_t k = p.size(); k-- > phi;) {
            if (p[k] == Rational(0)) continue;
            const detail::QPoly& row = fd.reduction_rows[k - phi];
            for (size_t i = 0; i < phi; ++i)
                if (row[i] != Rational(0)) p[i] += p[k] * row[i];
            p[k] = Rational(0);
        }
        p.resize(phi, Rational(0));
        Cyclotomic c;
        c.conductor_ = n;
        c.coeffs_ = std::move(p);
        return c;
    }

    static Cyclotomic lifted(const Cyclotomic& a, const Cyclotomic& b,
                             char op) {
        long n = std::lcm(a.conductor_, b.conductor_);
        Cyclotomic x = a.lift_to(n), y = b.lift_to(n);
        switch (op) {
            case '+': return x + y;
            case '-': return x - y;
            default: return x * y;
        }
    }

    long conductor_;
    std::vector<Rational> coeffs_;
};

} // namespace eqclass

#endif
