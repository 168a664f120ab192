// The characteristic-class power series and their exact Taylor expansion.
//
// Multiplicative classes are generated by a one-variable series f(alpha); a
// bundle with Chern roots alpha_i gets the class prod f(alpha_i). The
// library ships:
//
//   Chern            f = 1 + alpha
//   LClass           f = alpha / tanh(alpha)
//   Todd             f = alpha / (1 - e^{-alpha})
//   NormalizedTy     f = alpha(1+y)/(1 - e^{-alpha(1+y)}) - alpha*y
//   UnnormalizedTy   f = alpha(1 + y e^{-alpha}) / (1 - e^{-alpha})
//   UTheta(t)        f = (1 - zbar e^{-alpha})^{-1}
//   TyTheta(t)       f = (1 + y zbar e^{-alpha(1+y)}) / (1 - zbar e^{-alpha(1+y)})
//   UnnormTyTheta(t) f = (1 + y zbar e^{-alpha}) / (1 - zbar e^{-alpha})
//   Exp              f = e^{alpha}            (additive: Chern character)
//   ExpOnePlusY      f = e^{(1+y)alpha}
//
// where zbar = e^{-2 pi i t} for the rotation angle t (in turns, t != 0 so
// 1 - zbar is invertible). NormalizedTy specializes to Chern/Todd/LClass at
// y = -1/0/1; both Ty-theta variants specialize to UTheta at y = 0.
//
// Coefficients are computed lazily to the requested order by exact series
// manipulation (exponential expansion, multiplication, inversion against a
// unit constant term) and memoized per (template, order).
#ifndef EQCLASS_TEMPLATES_HPP
#define EQCLASS_TEMPLATES_HPP

#include <mutex>
#include <vector>

#include "eqclass/series.hpp"

namespace eqclass {

enum class TemplateKind {
    Chern,
    Todd,
    LClass,
    NormalizedTy,
    UnnormalizedTy,
    UTheta,
    TyTheta,
    UnnormTyTheta,
    Exp,
    ExpOnePlusY,
};

inline bool is_theta_template(TemplateKind k) {
    return k == TemplateKind::UTheta || k == TemplateKind::TyTheta ||
           k == TemplateKind::UnnormTyTheta;
}

inline const char* template_name(TemplateKind k) {
    switch (k) {
        case TemplateKind::Chern: return "Chern";
        case TemplateKind::Todd: return "Todd";
        case TemplateKind::LClass: return "LClass";
        case TemplateKind::NormalizedTy: return "NormalizedTy";
        case TemplateKind::UnnormalizedTy: return "UnnormalizedTy";
        case TemplateKind::UTheta: return "UTheta";
        case TemplateKind::TyTheta: return "TyTheta";
        case TemplateKind::UnnormTyTheta: return "UnnormTyTheta";
        case TemplateKind::Exp: return "Exp";
        case TemplateKind::ExpOnePlusY: return "ExpOnePlusY";
    }
    return "?";
}

struct TemplateId {
    TemplateKind kind;
    Angle theta; // meaningful for the theta-parameterized kinds only

    static TemplateId plain(TemplateKind k) { return {k, Angle::zero()}; }
    static TemplateId with_theta(TemplateKind k, Angle t) { return {k, t}; }
};

namespace detail {

using USeries = std::vector<YCoeff>; // coefficient of alpha^k at index k

inline USeries useries_mul(const USeries& a, const USeries& b, size_t order) {
    USeries r(order + 1, YCoeff::zero());
    for (size_t i = 0; i < a.size() && i <= order; ++i)
        for (size_t j = 0; j < b.size() && i + j <= order; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// inverse of a series whose constant term is a unit
inline USeries useries_invert(const USeries& a, size_t order) {
    USeries b(order + 1, YCoeff::zero());
    YCoeff inv0 = a[0].invert_unit();
    b[0] = inv0;
    for (size_t n = 1; n <= order; ++n) {
        YCoeff acc = YCoeff::zero();
        for (size_t j = 1; j <= n; ++j)
            if (j < a.size()) acc += a[j] * b[n - j];
        b[n] = -(inv0 * acc);
    }
    return b;
}

inline Rational factorial(size_t n) {
    Rational f(1);
    for (size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
    return f;
}

// e^{s*alpha} with an arbitrary coefficient s
inline USeries exp_series(const YCoeff& s, size_t order) {
    USeries r(order + 1, YCoeff::zero());
    YCoeff p = YCoeff::one();
    for (size_t k = 0; k <= order; ++k) {
        r[k] = p * (Rational(1) / factorial(k));
        p = p * s;
    }
    return r;
}

inline USeries todd_series(size_t order) {
    // invert (1 - e^{-alpha})/alpha = sum (-1)^k alpha^k / (k+1)!
    USeries u(order + 1, YCoeff::zero());
    for (size_t k = 0; k <= order; ++k) {
        Rational c = Rational(1) / factorial(k + 1);
        if (k % 2) c = -c;
        u[k] = YCoeff::from_rational(c);
    }
    return useries_invert(u, order);
}

inline USeries compute_template(const TemplateId& id, size_t order) {
    const YCoeff one = YCoeff::one();
    const YCoeff y = YCoeff::monomial(1, Cyclotomic::one());
    const YCoeff one_plus_y = YCoeff::one_plus_y_power(1);

    switch (id.kind) {
        case TemplateKind::Chern: {
            USeries r(order + 1, YCoeff::zero());
            r[0] = one;
            if (order >= 1) r[1] = one;
            return r;
        }
        case TemplateKind::Todd:
            return todd_series(order);
        case TemplateKind::LClass: {
            // alpha/tanh(alpha) = cosh(alpha) * (sinh(alpha)/alpha)^{-1}
            USeries sh(order + 1, YCoeff::zero());
            USeries ch(order + 1, YCoeff::zero());
            for (size_t k = 0; k <= order; ++k) {
                if (k % 2 == 0) {
                    sh[k] = YCoeff::from_rational(Rational(1) / factorial(k + 1));
                    ch[k] = YCoeff::from_rational(Rational(1) / factorial(k));
                }
            }
            return useries_mul(ch, useries_invert(sh, order), order);
        }
        case TemplateKind::NormalizedTy: {
            // Todd in beta = alpha(1+y), minus alpha*y
            USeries t = todd_series(order);
            YCoeff p = one;
            for (size_t k = 0; k <= order; ++k) {
                t[k] = t[k] * p;
                p = p * one_plus_y;
            }
            if (order >= 1) t[1] -= y;
            return t;
        }
        case TemplateKind::UnnormalizedTy: {
            // Todd * (1 + y e^{-alpha})
            USeries n(order + 1, YCoeff::zero());
            for (size_t k = 0; k <= order; ++k) {
                Rational c = Rational(1) / factorial(k);
                if (k % 2) c = -c;
                n[k] = y * YCoeff::from_rational(c);
            }
            n[0] += one;
            return useries_mul(todd_series(order), n, order);
        }
        case TemplateKind::UTheta:
        case TemplateKind::TyTheta:
        case TemplateKind::UnnormTyTheta: {
            if (id.theta.is_zero())
                throw theta_zero(std::string(template_name(id.kind)) +
                                 " requires theta != 0");
            YCoeff zbar = YCoeff::from_cyclotomic(
                Cyclotomic::root_of_unity(-id.theta));
            // e^{-alpha} or e^{-(1+y)alpha} inside the theta series
            YCoeff scale = (id.kind == TemplateKind::TyTheta)
                               ? -one_plus_y
                               : -one;
            USeries e = exp_series(scale, order);
            USeries den(order + 1, YCoeff::zero());
            for (size_t k = 0; k <= order; ++k) den[k] = -(zbar * e[k]);
            den[0] += one;
            USeries deninv = useries_invert(den, order);
            if (id.kind == TemplateKind::UTheta) return deninv;
            USeries num(order + 1, YCoeff::zero());
            for (size_t k = 0; k <= order; ++k) num[k] = y * zbar * e[k];
            num[0] += one;
            return useries_mul(num, deninv, order);
        }
        case TemplateKind::Exp:
            return exp_series(one, order);
        case TemplateKind::ExpOnePlusY:
            return exp_series(one_plus_y, order);
    }
    throw error("Internal", "unhandled template kind");
}

} // namespace detail

// Exact Taylor coefficients of the template about alpha = 0, length
// order+1. Memoized; concurrent lookups are linearizable (a race may
// compute the same table twice, the first insert wins).
inline const std::vector<YCoeff>& template_coefficients(const TemplateId& id,
                                                        size_t order) {
    using Key = std::tuple<int, size_t, long, long>; // kind, order, theta
    static std::map<Key, detail::USeries> cache;
    static std::mutex mu;
    const bool uses_theta = is_theta_template(id.kind);
    Key key{static_cast<int>(id.kind), order,
            uses_theta ? id.theta.turns().numerator().get_si() : 0,
            uses_theta ? id.theta.denominator_long() : 1};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    detail::USeries s = detail::compute_template(id, order);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(s)).first->second;
}

inline const std::vector<YCoeff>& template_coefficients(TemplateKind kind,
                                                        size_t order) {
    return template_coefficients(TemplateId::plain(kind), order);
}

// f(arg) for a nilpotent argument, exact to the ring's truncation
inline TruncSeries compose_template(const TemplateId& id,
                                    const TruncSeries& arg) {
    if (!arg.has_zero_constant_term())
        throw non_nilpotent_argument(
            "template argument must have zero constant term");
    size_t order = static_cast<size_t>(arg.ring()->total_cap);
    const std::vector<YCoeff>& c = template_coefficients(id, order);
    TruncSeries acc = TruncSeries::constant(arg.ring(), c[0]);
    TruncSeries p = TruncSeries::one(arg.ring());
    for (size_t k = 1; k <= order; ++k) {
        p *= arg;
        if (p.is_zero()) break;
        acc += p * c[k];
    }
    return acc;
}

inline TruncSeries compose_template(TemplateKind kind, const TruncSeries& arg) {
    return compose_template(TemplateId::plain(kind), arg);
}

} // namespace eqclass

#endif
