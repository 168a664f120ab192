// Exact rationals and rational angles.
//
// Rational keeps a canonical fraction (reduced, positive denominator) in
// machine words and falls back to a GMP mpq only when a value leaves the
// int64 range; intermediates run in 128-bit so the fit check is exact.
// Values that fit are always stored small, so equality never has to compare
// across representations. Computations in this library are dominated by
// tiny fractions (template coefficients, cyclotomic coordinates), which
// makes the small path the one that matters.
//
// An Angle t is a fraction of a full turn, reduced into [0,1); it stands
// for the rotation e^{2*pi*i*t}.
#ifndef EQCLASS_RATIONAL_HPP
#define EQCLASS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>

#include "eqclass/errors.hpp"

namespace eqclass {

using BigInt = mpz_class;

namespace detail {

using I128 = __int128;

inline I128 abs128(I128 v) { return v < 0 ? -v : v; }

inline I128 gcd128(I128 a, I128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool fits_i64(I128 v) {
    return v >= std::numeric_limits<int64_t>::min() &&
           v <= std::numeric_limits<int64_t>::max();
}

inline BigInt mpz_from_i128(I128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(u >> 64));
    BigInt lo(static_cast<unsigned long>(u));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

} // namespace detail

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long n, long d) : num_(0), den_(1) {
        if (d == 0) throw division_by_zero("rational with zero denominator");
        assign128(n, d);
    }
    Rational(const BigInt& n, const BigInt& d) : num_(0), den_(1) {
        if (d == 0) throw division_by_zero("rational with zero denominator");
        mpq_class q(n);
        q /= mpq_class(d);
        assign_mpq(std::move(q));
    }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational parse(const std::string& s) {
        if (s.empty()) throw parse_error("empty rational");
        try {
            mpq_class v(s);
            if (v.get_den() == 0)
                throw division_by_zero("rational with zero denominator");
            v.canonicalize();
            Rational r;
            r.assign_mpq(std::move(v));
            return r;
        } catch (const std::invalid_argument&) {
            throw parse_error("not a rational: '" + s + "'");
        }
    }

    bool is_small() const { return big_ == nullptr; }

    BigInt numerator() const {
        return big_ ? BigInt(big_->get_num()) : BigInt(num_);
    }
    BigInt denominator() const {
        return big_ ? BigInt(big_->get_den()) : BigInt(den_);
    }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

    std::string str() const {
        if (big_) return big_->get_str();
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    double to_double() const {
        if (big_) return big_->get_d();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return from_mpq(a.to_mpq() + b.to_mpq());
        detail::I128 n = static_cast<detail::I128>(a.num_) * b.den_ +
                         static_cast<detail::I128>(b.num_) * a.den_;
        detail::I128 d = static_cast<detail::I128>(a.den_) * b.den_;
        return from128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return from_mpq(a.to_mpq() - b.to_mpq());
        detail::I128 n = static_cast<detail::I128>(a.num_) * b.den_ -
                         static_cast<detail::I128>(b.num_) * a.den_;
        detail::I128 d = static_cast<detail::I128>(a.den_) * b.den_;
        return from128(n, d);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_ || a.num_ == std::numeric_limits<int64_t>::min() ||
            b.num_ == std::numeric_limits<int64_t>::min())
            return from_mpq(a.to_mpq() * b.to_mpq());
        // cross-reduce first: the product of canonical fractions reduced
        // crosswise is canonical
        int64_t g1 = std::gcd(a.num_, b.den_);
        int64_t g2 = std::gcd(b.num_, a.den_);
        detail::I128 n = static_cast<detail::I128>(a.num_ / g1) * (b.num_ / g2);
        detail::I128 d = static_cast<detail::I128>(a.den_ / g2) * (b.den_ / g1);
        Rational r;
        if (detail::fits_i64(n) && detail::fits_i64(d)) {
            r.num_ = static_cast<int64_t>(n);
            r.den_ = static_cast<int64_t>(d);
        } else {
            r.big_ = std::make_unique<mpq_class>(
                mpq_class(detail::mpz_from_i128(n)) /
                mpq_class(detail::mpz_from_i128(d)));
        }
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b == Rational(0))
            throw division_by_zero("rational division by zero");
        if (a.big_ || b.big_ || b.num_ == std::numeric_limits<int64_t>::min())
            return from_mpq(a.to_mpq() / b.to_mpq());
        Rational flipped;
        flipped.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        flipped.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * flipped;
    }

    Rational operator-() const {
        if (big_) return from_mpq(mpq_class(-*big_));
        return from128(-static_cast<detail::I128>(num_), den_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false; // values that fit are always stored small
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_)
            return static_cast<detail::I128>(a.num_) * b.den_ <
                   static_cast<detail::I128>(b.num_) * a.den_;
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return b < a;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

private:
    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
        return q; // already canonical
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.assign_mpq(std::move(q));
        return r;
    }

    static Rational from128(detail::I128 n, detail::I128 d) {
        Rational r;
        r.assign128(n, d);
        return r;
    }

    void assign128(detail::I128 n, detail::I128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        detail::I128 g = detail::gcd128(n, d);
        n /= g;
        d /= g;
        if (detail::fits_i64(n) && detail::fits_i64(d)) {
            num_ = static_cast<int64_t>(n);
            den_ = static_cast<int64_t>(d);
            big_.reset();
        } else {
            big_ = std::make_unique<mpq_class>(
                mpq_class(detail::mpz_from_i128(n)) /
                mpq_class(detail::mpz_from_i128(d)));
        }
    }

    // q must be canonical
    void assign_mpq(mpq_class q) {
        if (mpz_fits_slong_p(q.get_num().get_mpz_t()) &&
            mpz_fits_slong_p(q.get_den().get_mpz_t())) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_unique<mpq_class>(std::move(q));
            num_ = 0;
            den_ = 1;
        }
    }

    int64_t num_, den_; // canonical when big_ is null
    std::unique_ptr<mpq_class> big_;
};

inline Rational parse_rational(const std::string& s) {
    return Rational::parse(s);
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == Rational(0)) {
        if (e < 0) throw division_by_zero("0^negative");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    long n = e < 0 ? -e : e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Fraction of a full turn, reduced, in [0,1).
class Angle {
public:
    Angle() : turns_(0) {}
    explicit Angle(Rational t) : turns_(normalize(std::move(t))) {}
    Angle(long num, long den) : Angle(Rational(num, den)) {}

    static Angle zero() { return Angle(); }

    const Rational& turns() const { return turns_; }
    bool is_zero() const { return turns_ == Rational(0); }

    // Smallest conductor whose roots of unity contain this rotation.
    long denominator_long() const { return turns_.denominator().get_si(); }

    Angle operator+(const Angle& o) const { return Angle(turns_ + o.turns_); }
    Angle operator-() const { return Angle(-turns_); }
    Angle operator-(const Angle& o) const { return Angle(turns_ - o.turns_); }
    Angle operator*(long k) const { return Angle(turns_ * Rational(k)); }

    bool operator==(const Angle& o) const { return turns_ == o.turns_; }
    bool operator!=(const Angle& o) const { return turns_ != o.turns_; }
    bool operator<(const Angle& o) const { return turns_ < o.turns_; }

    std::string str() const { return turns_.str(); }

    static Angle parse(const std::string& s) {
        return Angle(parse_rational(s));
    }

private:
    static Rational normalize(Rational t) {
        // reduce mod 1 into [0,1)
        BigInt n = t.numerator(), d = t.denominator();
        BigInt m = n % d;
        if (m < 0) m += d;
        return Rational(m, d);
    }
    Rational turns_;
};

} // namespace eqclass

#endif
