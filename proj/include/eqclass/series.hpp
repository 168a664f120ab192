// Truncated multivariate polynomials modelling H^{ev} of a smooth compact
// component.
//
// A RingModel is a monomial quotient: named degree-2 generators x_i with
// per-variable caps (x_i^{cap_i+1} = 0), a total-degree cap D equal to the
// complex dimension, and an explicit integral map sending the top
// monomial(s) to rationals — the evaluation pairing against the fundamental
// class. That covers P^n, products of projective spaces, and points (no
// variables, D = 0).
//
// Homology classes on such a component are represented by their
// Poincare-dual cohomology series; capping with the fundamental class is
// the identity and integration reads the top coefficients through the
// integral map.
#ifndef EQCLASS_SERIES_HPP
#define EQCLASS_SERIES_HPP

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "eqclass/ycoeff.hpp"

namespace eqclass {

using Exponents = std::vector<int>;

struct RingModel {
    std::vector<std::string> vars;
    std::vector<int> caps;
    int total_cap = 0;
    std::map<Exponents, Rational> integral;

    bool admits(const Exponents& e) const {
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] > caps[i]) return false;
            total += e[i];
        }
        return total <= total_cap;
    }

    friend bool operator==(const RingModel& a, const RingModel& b) {
        return a.vars == b.vars && a.caps == b.caps &&
               a.total_cap == b.total_cap && a.integral == b.integral;
    }
};

using RingPtr = std::shared_ptr<const RingModel>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<int> caps,
                         int total_cap,
                         std::map<Exponents, Rational> integral) {
    if (vars.size() != caps.size())
        throw ring_mismatch("vars/caps size mismatch");
    auto r = std::make_shared<RingModel>();
    r->vars = std::move(vars);
    r->caps = std::move(caps);
    r->total_cap = total_cap;
    r->integral = std::move(integral);
    for (const auto& [mono, val] : r->integral) {
        (void)val;
        if (mono.size() != r->vars.size())
            throw ring_mismatch("integral monomial arity mismatch");
        int total = std::accumulate(mono.begin(), mono.end(), 0);
        if (total != r->total_cap || !r->admits(mono))
            throw ring_mismatch(
                "integral monomials must be admissible of top degree");
    }
    return r;
}

// H^*(pt): no generators, dimension 0, <1,[pt]> = 1
inline RingPtr point_ring() {
    return make_ring({}, {}, 0, {{Exponents{}, Rational(1)}});
}

// H^*(P^n) = Q[x]/(x^{n+1}), <x^n,[P^n]> = 1
inline RingPtr projective_ring(int n, const std::string& var = "x") {
    return make_ring({var}, {n}, n, {{Exponents{n}, Rational(1)}});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

class TruncSeries {
public:
    using Terms = std::map<Exponents, YCoeff>;

    explicit TruncSeries(RingPtr ring) : ring_(std::move(ring)) {}

    static TruncSeries zero(RingPtr ring) { return TruncSeries(std::move(ring)); }

    static TruncSeries constant(RingPtr ring, YCoeff c) {
        TruncSeries s(std::move(ring));
        s.add_term(Exponents(s.ring_->vars.size(), 0), std::move(c));
        return s;
    }

    static TruncSeries one(RingPtr ring) {
        return constant(std::move(ring), YCoeff::one());
    }

    static TruncSeries monomial(RingPtr ring, Exponents e, YCoeff c) {
        TruncSeries s(std::move(ring));
        if (e.size() != s.ring_->vars.size())
            throw ring_mismatch("monomial arity mismatch");
        s.add_term(std::move(e), std::move(c));
        return s;
    }

    // the generator x_i
    static TruncSeries variable(RingPtr ring, size_t i) {
        Exponents e(ring->vars.size(), 0);
        if (i >= e.size()) throw ring_mismatch("variable index out of range");
        e[i] = 1;
        return monomial(std::move(ring), std::move(e), YCoeff::one());
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    YCoeff constant_term() const {
        Exponents zero_exp(ring_->vars.size(), 0);
        auto it = terms_.find(zero_exp);
        return it == terms_.end() ? YCoeff::zero() : it->second;
    }

    bool has_zero_constant_term() const { return constant_term().is_zero(); }

    YCoeff coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? YCoeff::zero() : it->second;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        require_same(a, b);
        TruncSeries r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        return a + (-b);
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same(a, b);
        TruncSeries r(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                if (!a.ring_->admits(e)) continue;
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator*(const TruncSeries& a, const YCoeff& s) {
        TruncSeries r(a.ring_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
        return r;
    }
    friend TruncSeries operator*(const YCoeff& s, const TruncSeries& a) {
        return a * s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const Rational& s) {
        return a * YCoeff::from_rational(s);
    }

    TruncSeries pow(long k) const {
        if (k < 0) return invert().pow(-k);
        if (k == 0) return one(ring_);
        if (k == 1) return *this;
        TruncSeries acc = one(ring_), b = *this;
        while (k > 0) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }

    // inverse of a series whose constant term is a unit of the coefficient
    // ring; geometric series in the nilpotent part
    TruncSeries invert() const {
        YCoeff c0inv = constant_term().invert_unit();
        TruncSeries n = one(ring_) - (*this * c0inv); // nilpotent
        TruncSeries acc = one(ring_);
        TruncSeries p = one(ring_);
        for (int k = 1; k <= ring_->total_cap; ++k) {
            p *= n;
            if (p.is_zero()) break;
            acc += p;
        }
        return acc * c0inv;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
        return !(a == b);
    }

    // <s, [X]> through the integral map
    YCoeff integrate() const {
        YCoeff acc = YCoeff::zero();
        for (const auto& [e, c] : terms_) {
            auto it = ring_->integral.find(e);
            if (it != ring_->integral.end()) acc += c * it->second;
        }
        return acc;
    }

    // apply f(total_degree, coeff) to every term
    template <typename F>
    TruncSeries map_degreewise(F&& f) const {
        TruncSeries r(ring_);
        for (const auto& [e, c] : terms_) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            r.add_term(e, f(d, c));
        }
        return r;
    }

    // push the series into a larger ring along a variable embedding;
    // var_map[i] is the index of this ring's i-th variable in dst
    TruncSeries reindex(RingPtr dst, const std::vector<size_t>& var_map) const {
        if (var_map.size() != ring_->vars.size())
            throw ring_mismatch("reindex map arity mismatch");
        TruncSeries r(std::move(dst));
        for (const auto& [e, c] : terms_) {
            Exponents ne(r.ring_->vars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[var_map[i]] = e[i];
            if (!r.ring_->admits(ne))
                throw ring_mismatch("reindexed monomial not admissible");
            r.add_term(std::move(ne), c);
        }
        return r;
    }

private:
    static void require_same(const TruncSeries& a, const TruncSeries& b) {
        if (!same_ring(a.ring_, b.ring_))
            throw ring_mismatch("series live in different ring models");
    }

    void add_term(Exponents e, YCoeff c) {
        if (c.is_zero()) return;
        if (!ring_->admits(e)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RingPtr ring_;
    Terms terms_;
};

// tensor model of a product component; varables are prefixed when names
// collide, and the integral is the product pairing
struct TensorRing {
    RingPtr ring;
    std::vector<size_t> left_map;  // left factor var index -> product index
    std::vector<size_t> right_map; // right factor var index -> product index
};

inline TensorRing tensor_ring(const RingPtr& a, const RingPtr& b,
                              const std::string& left_prefix = "",
                              const std::string& right_prefix = "") {
    std::vector<std::string> vars;
    std::vector<int> caps;
    TensorRing t;
    auto push = [&](const std::string& name, int cap) {
        vars.push_back(name);
        caps.push_back(cap);
        return vars.size() - 1;
    };
    std::vector<std::string> taken;
    for (size_t i = 0; i < a->vars.size(); ++i) {
        std::string name = left_prefix + a->vars[i];
        t.left_map.push_back(push(name, a->caps[i]));
    }
    for (size_t i = 0; i < b->vars.size(); ++i) {
        std::string name = right_prefix + b->vars[i];
        while (std::find(vars.begin(), vars.end(), name) != vars.end())
            name += "'";
        t.right_map.push_back(push(name, b->caps[i]));
    }
    std::map<Exponents, Rational> integral;
    for (const auto& [ma, va] : a->integral)
        for (const auto& [mb, vb] : b->integral) {
            Exponents m(vars.size(), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[t.left_map[i]] = ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[t.right_map[i]] = mb[i];
            integral.emplace(std::move(m), va * vb);
        }
    t.ring = make_ring(std::move(vars), std::move(caps),
                       a->total_cap + b->total_cap, std::move(integral));
    return t;
}

} // namespace eqclass

#endif
