// Quotient-space invariants of global orbifolds.
//
// Genus level: chi_y(X/G) = (1/|G|) sum_g chi_y(X;g).
//
// Class level, for the weighted projective family P^n(w) = P^n/G(w): the
// pulled-back un-normalized class satisfies
//
//   (1+y) pi^* T~_y(P^n(w))
//     = (deg pi/|G|) sum_alpha prod_j  w_j x (1+y e^{-w_j(x+i alpha)})
//                                            / (1 - e^{-w_j(x+i alpha)})
//
// with x the hyperplane class, x^{n+1} = 0. Only angles alpha with some
// w_j alpha integral (in turns) contribute: every other summand lands in
// x^{n+1} Z[[x]] and truncates away. The alpha = 0 factor is exactly the
// UnnormalizedTy template at argument w_j x; a nonzero phase theta = w_j
// alpha contributes w_j x times the UnnormTyTheta(theta) template at w_j x.
//
// The class is reported in pulled-back form on P^n (the paper's own model
// of H^*(P^n(w)): the G(w)-invariant classes). Integrating a pulled-back
// class over P^n overcounts degrees on the quotient by deg(pi), so the
// genus read off the class divides by deg(pi).
#ifndef EQCLASS_QUOTIENT_HPP
#define EQCLASS_QUOTIENT_HPP

#include <set>

#include "eqclass/localization.hpp"

namespace eqclass {

struct WeightVector {
    std::vector<long> w;

    explicit WeightVector(std::vector<long> weights) : w(std::move(weights)) {
        if (w.empty()) throw invalid_weights("empty weight vector");
        for (long wj : w)
            if (wj < 1) throw invalid_weights("weights must be positive");
    }

    int dim() const { return static_cast<int>(w.size()) - 1; }

    long lcm() const {
        long l = 1;
        for (long wj : w) l = std::lcm(l, wj);
        return l;
    }

    long gcd() const {
        long g = 0;
        for (long wj : w) g = std::gcd(g, wj);
        return g;
    }

    BigInt group_order() const {
        BigInt o = 1;
        for (long wj : w) o *= wj;
        return o;
    }

    BigInt covering_degree() const { return group_order() / gcd(); }

    // the finitely many rotation angles with some w_j alpha integral
    std::vector<Angle> contributing_angles() const {
        std::set<Angle> s;
        for (long wj : w)
            for (long k = 0; k < wj; ++k) s.insert(Angle(k, wj));
        return {s.begin(), s.end()};
    }
};

// prod_j w_j x (1+y e^{-w_j(x+i alpha)})/(1-e^{-w_j(x+i alpha)}) in the
// given P^n model; vanishes identically unless some w_j alpha is integral
inline TruncSeries wproj_alpha_term(const WeightVector& w, const Angle& alpha,
                                    const RingPtr& ring) {
    TruncSeries x = TruncSeries::variable(ring, 0);
    TruncSeries prod = TruncSeries::one(ring);
    for (long wj : w.w) {
        TruncSeries wx = x * Rational(wj);
        Angle theta = alpha * wj;
        if (theta.is_zero()) {
            prod *= compose_template(TemplateKind::UnnormalizedTy, wx);
        } else {
            prod *= wx * compose_template(
                             TemplateId::with_theta(
                                 TemplateKind::UnnormTyTheta, theta),
                             wx);
        }
    }
    return prod;
}

// pi^* T~_y(P^n(w)) or pi^* T_y(P^n(w)) on the P^n model
inline TruncSeries wproj_class(const WeightVector& w, bool normalized) {
    RingPtr ring = projective_ring(w.dim());
    TruncSeries sum = TruncSeries::zero(ring);
    for (const Angle& alpha : w.contributing_angles())
        sum += wproj_alpha_term(w, alpha, ring);
    // deg(pi)/|G| = 1/gcd(w), and one global (1+y)^{-1}
    sum = sum * Rational(1, w.gcd());
    TruncSeries unnorm = sum.map_degreewise(
        [](int, const YCoeff& c) { return c.divide_by_1py(); });
    if (!normalized) return unnorm;
    int n = w.dim();
    return unnorm.map_degreewise([&](int d, const YCoeff& c) {
        return c.mul_1py_power(-(n - d)); // T_{y,i} = (1+y)^{-i} T~_{y,i}
    });
}

// degree of the quotient class: integrate the pullback and divide by the
// covering degree
inline YCoeff wproj_genus(const WeightVector& w) {
    YCoeff deg = wproj_class(w, /*normalized=*/true).integrate();
    return deg * Rational(BigInt(1), w.covering_degree());
}

// chi_y(X/G) = (1/|G|) sum_g chi_y(X;g)
inline YCoeff chi_y_quotient(const LocalizationDatum& d) {
    YCoeff acc = YCoeff::zero();
    for (const auto& g : d.group.elements) acc += equivariant_chi_y(d, g);
    return acc * Rational(1, d.group.order);
}

// isolated-fixed-point defect data: per non-identity element, the fixed
// points inside the singular locus with their tangent angles and the two
// stalk chi_y-values
struct DefectPoint {
    std::vector<Angle> angles; // all nonzero
    YCoeff chi_g;              // chi_y(L_x; g)
    YCoeff chi_plain;          // chi_y(L_x)
};

struct IsolatedDefectDatum {
    std::map<std::string, std::vector<DefectPoint>> points; // element -> pts
};

// (1/|G|) sum_{g != id} sum_x (chi_y(L_x;g) - chi_y(L_x)) *
//   prod_theta (1+y e^{-i theta})/(1-e^{-i theta})
inline YCoeff defect_sum(const IsolatedDefectDatum& d, long group_order) {
    YCoeff acc = YCoeff::zero();
    for (const auto& [el, pts] : d.points) {
        if (el == "id") continue;
        for (const DefectPoint& p : pts) {
            YCoeff diff = p.chi_g - p.chi_plain;
            if (diff.is_zero()) continue;
            YCoeff factor = YCoeff::one();
            for (const Angle& theta : p.angles)
                factor *= template_coefficients(
                    TemplateId::with_theta(TemplateKind::UnnormTyTheta,
                                           theta),
                    0)[0];
            acc += diff * factor;
        }
    }
    return acc * Rational(1, group_order);
}

// genus-level shadow of the orbifold Atiyah-Meyer identity: for a twist
// pulled back from the quotient (g acts trivially on it over every fixed
// set), averaging the twisted genera equals pairing the untwisted average
// with the twist's character. The twist is given per element and component.
inline bool orbifold_twisted_check(
    const LocalizationDatum& d,
    const std::map<std::string, TwistData>& twist) {
    for (const auto& g : d.group.elements) {
        auto eit = twist.find(g);
        if (eit == twist.end())
            throw unknown_element("twist data missing element '" + g + "'");
        for (const FixedComponent& c : d.components(g)) {
            auto cit = eit->second.find(c.label);
            if (cit == eit->second.end())
                throw unknown_element("twist data missing component '" +
                                      c.label + "'");
            for (const auto& t : cit->second.terms())
                if (!t.angle.is_zero())
                    throw nontrivial_angle(
                        "twist is not pulled back from the quotient: "
                        "nonzero angle on '" + c.label + "'");
        }
    }
    YCoeff lhs = YCoeff::zero(), rhs = YCoeff::zero();
    for (const auto& g : d.group.elements) {
        for (const FixedComponent& c : d.components(g)) {
            const SplitBundle& v = twist.at(g).at(c.label);
            TruncSeries cls = atiyah_singer_class(c, true);
            lhs += (v.character(true, /*use_angle=*/true, true) * cls)
                       .integrate();
            rhs += (v.character(true, /*use_angle=*/false, true) * cls)
                       .integrate();
        }
    }
    Rational inv(1, d.group.order);
    return lhs * inv == rhs * inv;
}

} // namespace eqclass

#endif
