// The coefficient ring C[y^{+-1}, (1+y)^{-1}] with cyclotomic coefficients.
//
// A value is a sparse Laurent polynomial in y (degree -> Cyclotomic, no zero
// entries) together with an explicit denominator exponent e standing for
// division by (1+y)^e. Canonical form: if e > 0 then (1+y) does not divide
// the numerator, so the y = -1 pole check of specialize_y is exact.
#ifndef EQCLASS_YCOEFF_HPP
#define EQCLASS_YCOEFF_HPP

#include <map>
#include <sstream>
#include <utility>

#include "eqclass/cyclotomic.hpp"

namespace eqclass {

class YCoeff {
public:
    using Terms = std::map<long, Cyclotomic>;

    YCoeff() : denom_power_(0) {}

    static YCoeff zero() { return YCoeff(); }
    static YCoeff one() { return from_rational(Rational(1)); }

    static YCoeff from_rational(const Rational& r) {
        return from_cyclotomic(Cyclotomic(r));
    }

    static YCoeff from_cyclotomic(Cyclotomic c) {
        YCoeff v;
        if (!c.is_zero()) v.terms_.emplace(0, std::move(c));
        return v;
    }

    // c * y^degree
    static YCoeff monomial(long degree, Cyclotomic c) {
        YCoeff v;
        if (!c.is_zero()) v.terms_.emplace(degree, std::move(c));
        return v;
    }

    // (-y)^p, p may be negative
    static YCoeff minus_y_power(long p) {
        Cyclotomic c((p % 2 == 0) ? Rational(1) : Rational(-1));
        return monomial(p, std::move(c));
    }

    // (1+y)^k for k >= 0
    static YCoeff one_plus_y_power(long k) {
        YCoeff v = one();
        Rational binom(1);
        Terms t;
        for (long i = 0; i <= k; ++i) {
            t.emplace(i, Cyclotomic(binom));
            binom = binom * (k - i) / (i + 1);
        }
        v.terms_ = std::move(t);
        return v;
    }

    static YCoeff make(Terms terms, long denom_power) {
        YCoeff v;
        v.terms_ = std::move(terms);
        v.denom_power_ = denom_power;
        v.canonicalize();
        return v;
    }

    const Terms& terms() const { return terms_; }
    long denom_power() const { return denom_power_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == one(); }

    bool is_rational() const {
        if (denom_power_ != 0) return false;
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second.is_rational();
    }

    friend YCoeff operator+(const YCoeff& a, const YCoeff& b) {
        long e = std::max(a.denom_power_, b.denom_power_);
        Terms t = scaled_numerator(a, e - a.denom_power_);
        Terms tb = scaled_numerator(b, e - b.denom_power_);
        for (auto& [d, c] : tb) {
            auto it = t.find(d);
            if (it == t.end())
                t.emplace(d, std::move(c));
            else
                it->second += c;
        }
        return make(std::move(t), e);
    }

    YCoeff operator-() const {
        YCoeff r = *this;
        for (auto& [d, c] : r.terms_) c = -c;
        return r;
    }

    friend YCoeff operator-(const YCoeff& a, const YCoeff& b) {
        return a + (-b);
    }

    friend YCoeff operator*(const YCoeff& a, const YCoeff& b) {
        Terms t;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                Cyclotomic prod = ca * cb;
                if (prod.is_zero()) continue;
                auto it = t.find(da + db);
                if (it == t.end())
                    t.emplace(da + db, std::move(prod));
                else
                    it->second += prod;
            }
        return make(std::move(t), a.denom_power_ + b.denom_power_);
    }

    YCoeff& operator+=(const YCoeff& o) { return *this = *this + o; }
    YCoeff& operator-=(const YCoeff& o) { return *this = *this - o; }
    YCoeff& operator*=(const YCoeff& o) { return *this = *this * o; }

    friend YCoeff operator*(const YCoeff& a, const Rational& s) {
        if (s == 0) return zero();
        YCoeff r = a;
        for (auto& [d, c] : r.terms_) c = c * s;
        return r;
    }
    friend YCoeff operator*(const Rational& s, const YCoeff& a) { return a * s; }

    friend YCoeff operator*(const YCoeff& a, const Cyclotomic& s) {
        return a * from_cyclotomic(s);
    }

    YCoeff divide_by_1py() const {
        YCoeff r = *this;
        r.denom_power_ += 1;
        r.canonicalize();
        return r;
    }

    // multiply by (1+y)^k, k of either sign
    YCoeff mul_1py_power(long k) const {
        if (k == 0 || is_zero()) return *this;
        if (k > 0) return *this * one_plus_y_power(k);
        YCoeff r = *this;
        r.denom_power_ += -k;
        r.canonicalize();
        return r;
    }

    friend bool operator==(const YCoeff& a, const YCoeff& b) {
        return a.denom_power_ == b.denom_power_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const YCoeff& a, const YCoeff& b) {
        return !(a == b);
    }

    // exact evaluation at y = v
    Cyclotomic specialize(const Cyclotomic& v) const {
        static const Cyclotomic minus_one(Rational(-1));
        if (v == minus_one && denom_power_ > 0)
            throw pole_at_minus_one("genuine (1+y) pole at y=-1");
        if (terms_.empty()) return Cyclotomic::zero();
        if (v.is_zero() && terms_.begin()->first < 0)
            throw pole_at_zero("negative y-degree at y=0");
        Cyclotomic acc = Cyclotomic::zero();
        Cyclotomic vinv;
        bool have_vinv = false;
        for (const auto& [d, c] : terms_) {
            if (d >= 0) {
                acc += c * v.pow(d);
            } else {
                if (!have_vinv) {
                    vinv = v.invert();
                    have_vinv = true;
                }
                acc += c * vinv.pow(-d);
            }
        }
        if (denom_power_ > 0) {
            Cyclotomic base = Cyclotomic::one() + v;
            acc = acc * base.invert().pow(denom_power_);
        }
        return acc;
    }

    Cyclotomic specialize(const Rational& v) const {
        return specialize(Cyclotomic(v));
    }

    // inverse of a unit c*y^a*(1+y)^b; throws non_unit_constant otherwise
    YCoeff invert_unit() const {
        if (terms_.empty())
            throw non_unit_constant("zero is not a unit");
        long a = terms_.begin()->first;
        // shifted numerator with min degree 0
        Terms f;
        for (const auto& [d, c] : terms_) f.emplace(d - a, c);
        long k = 0;
        while (divisible_by_1py(f)) {
            f = quotient_by_1py(f);
            ++k;
        }
        if (f.size() != 1 || f.begin()->first != 0)
            throw non_unit_constant("constant term is not a unit of "
                                    "C[y^{+-1},(1+y)^{-1}]");
        Cyclotomic c0inv = f.begin()->second.invert();
        YCoeff r = monomial(-a, std::move(c0inv));
        return r.mul_1py_power(denom_power_ - k);
    }

    long min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    // compact rendering for diagnostics; exact, not for machine consumption
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c.is_rational())
                os << to_string(c.rational_value());
            else {
                os << "(";
                for (size_t i = 0; i < c.coeffs().size(); ++i) {
                    if (i) os << ",";
                    os << to_string(c.coeffs()[i]);
                }
                os << ")_" << c.conductor();
            }
            if (d != 0) os << "*y^" << d;
        }
        if (denom_power_ > 0) os << " / (1+y)^" << denom_power_;
        return os.str();
    }

private:
    static bool divisible_by_1py(const Terms& t) {
        if (t.empty()) return false;
        Cyclotomic acc = Cyclotomic::zero();
        for (const auto& [d, c] : t)
            acc += (d % 2 == 0) ? c : -c; // evaluate at y = -1
        return acc.is_zero();
    }

    static Terms quotient_by_1py(const Terms& t) {
        // exact division of the numerator by (1+y); caller checked
        // divisibility
        long m = t.begin()->first;
        long top = t.rbegin()->first;
        std::vector<Cyclotomic> a(static_cast<size_t>(top - m) + 1,
                                  Cyclotomic::zero());
        for (const auto& [d, c] : t) a[static_cast<size_t>(d - m)] = c;
        // a(y) = (1+y) q(y); synthetic division from the top
        std::vector<Cyclotomic> q(a.size() > 1 ? a.size() - 1 : 0,
                                  Cyclotomic::zero());
        Cyclotomic carry = Cyclotomic::zero();
        for (size_t i = a.size(); i-- > 1;) {
            Cyclotomic qi = a[i] - carry;
            q[i - 1] = qi;
            carry = qi;
        }
        Terms r;
        for (size_t i = 0; i < q.size(); ++i)
            if (!q[i].is_zero()) r.emplace(m + static_cast<long>(i), q[i]);
        return r;
    }

    static Terms scaled_numerator(const YCoeff& v, long k) {
        if (k == 0) return v.terms_;
        YCoeff s = v;
        s.denom_power_ = 0;
        s = s * one_plus_y_power(k);
        return s.terms_;
    }

    void canonicalize() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        if (terms_.empty()) {
            denom_power_ = 0;
            return;
        }
        while (denom_power_ > 0 && divisible_by_1py(terms_)) {
            terms_ = quotient_by_1py(terms_);
            --denom_power_;
        }
    }

    Terms terms_;
    long denom_power_;
};

} // namespace eqclass

#endif
