// Fixed-point data of a finite-order action and the localized classes
// living on it.
//
// A FixedComponent models one connected component F of a fixed set X^g: its
// cohomology ring (truncation = dim_C F with the evaluation pairing), the
// tangent bundle T_F (angles all zero), and the normal bundle decomposed
// into eigenbundles N_theta with angles strictly inside (0,1) turns.
//
// The classes:
//   atiyah_singer_class   T_y(F) * prod_theta Ty^theta(N_theta), or the
//                         un-normalized variant
//   td_star_class         td(F) * prod_theta U_theta(N_theta)
//   equivariant_chi_y     sum over components of the integral of the class,
//                         optionally against a twisted Chern character
// plus twisted classes, the Lefschetz-Riemann-Roch smooth normalization,
// fibration pushforwards, exterior products and conjugation covariance.
#ifndef EQCLASS_LOCALIZATION_HPP
#define EQCLASS_LOCALIZATION_HPP

#include <optional>

#include "eqclass/bundle.hpp"

namespace eqclass {

struct FixedComponent {
    std::string label;
    RingPtr ring;
    SplitBundle tangent;
    SplitBundle normal;

    FixedComponent(std::string lbl, RingPtr r)
        : label(std::move(lbl)), ring(r), tangent(r), normal(std::move(r)) {}

    void validate() const {
        if (!same_ring(tangent.ring(), ring) || !same_ring(normal.ring(), ring))
            throw ring_mismatch("component bundles live in a different ring");
        if (tangent.rank() != ring->total_cap)
            throw ring_mismatch("tangent rank must equal the component "
                                "dimension on '" + label + "'");
        for (const auto& t : tangent.terms())
            if (!t.angle.is_zero())
                throw ring_mismatch("tangent angles must vanish on '" +
                                    label + "'");
        for (const auto& t : normal.terms())
            if (t.angle.is_zero())
                throw theta_zero("normal angles must be nonzero on '" +
                                 label + "'");
    }
};

struct GroupTable {
    std::vector<std::string> elements; // includes "id"
    long order = 0;
    // mul[i][j] = index of elements[i]*elements[j]
    std::optional<std::vector<std::vector<size_t>>> mul;

    size_t index(const std::string& label) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == label) return i;
        throw unknown_element("no group element '" + label + "'");
    }

    size_t multiply(size_t i, size_t j) const {
        if (!mul) throw missing_table("group has no multiplication table");
        return (*mul)[i][j];
    }

    size_t inverse(size_t i) const {
        size_t id = index("id");
        for (size_t j = 0; j < elements.size(); ++j)
            if (multiply(i, j) == id) return j;
        throw missing_table("element '" + elements[i] + "' has no inverse");
    }
};

struct LocalizationDatum {
    long conductor = 1;
    GroupTable group;
    std::map<std::string, std::vector<FixedComponent>> fixed_data;

    const std::vector<FixedComponent>& components(const std::string& g) const {
        group.index(g); // element must exist
        static const std::vector<FixedComponent> empty;
        auto it = fixed_data.find(g);
        return it == fixed_data.end() ? empty : it->second;
    }

    void validate() const {
        for (const auto& g : group.elements) {
            auto it = fixed_data.find(g);
            if (it == fixed_data.end())
                throw unknown_element("fixed_data missing element '" + g +
                                      "'");
            for (const auto& c : it->second) {
                c.validate();
                if (g == "id" && !c.normal.empty())
                    throw ring_mismatch(
                        "the identity fixes everything: no normal part");
            }
        }
    }
};

// per group element: Poincare-dual series on each fixed component
using ComponentSeries = std::vector<std::pair<std::string, TruncSeries>>;
using DelocalizedClass = std::map<std::string, ComponentSeries>;

// optional per-component twisting bundle, keyed by component label
using TwistData = std::map<std::string, SplitBundle>;

inline TruncSeries atiyah_singer_class(const FixedComponent& c,
                                       bool normalized = true) {
    TemplateKind tangent_kind = normalized ? TemplateKind::NormalizedTy
                                           : TemplateKind::UnnormalizedTy;
    TemplateKind theta_kind = normalized ? TemplateKind::TyTheta
                                         : TemplateKind::UnnormTyTheta;
    TruncSeries cls = c.tangent.total_class(tangent_kind);
    for (const Angle& theta : c.normal.distinct_angles())
        cls *= c.normal.restrict_angle(theta).total_class(
            TemplateId::with_theta(theta_kind, theta));
    return cls;
}

inline TruncSeries td_star_class(const FixedComponent& c) {
    TruncSeries cls = c.tangent.total_class(TemplateKind::Todd);
    for (const Angle& theta : c.normal.distinct_angles())
        cls *= c.normal.restrict_angle(theta).total_class(
            TemplateId::with_theta(TemplateKind::UTheta, theta));
    return cls;
}

// ch_{(1+y)}(chi_y(V))(g) . T_y*(X;g) — or the un-normalized pairing with
// the plain Chern character
inline TruncSeries twisted_class(const FixedComponent& c, const SplitBundle& v,
                                 bool normalized = true) {
    if (!same_ring(v.ring(), c.ring))
        throw ring_mismatch("twist bundle lives in a different ring");
    TruncSeries ch = v.character(/*scale_one_plus_y=*/normalized,
                                 /*use_angle=*/true, /*use_hodge=*/true);
    return ch * atiyah_singer_class(c, normalized);
}

// ch(E)(g) . td*(X;g) — the smooth Lefschetz-Riemann-Roch normalization
inline TruncSeries lrr_td_class(const FixedComponent& c, const SplitBundle& e) {
    if (!same_ring(e.ring(), c.ring))
        throw ring_mismatch("sheaf bundle lives in a different ring");
    TruncSeries ch = e.character(/*scale_one_plus_y=*/false,
                                 /*use_angle=*/true, /*use_hodge=*/false);
    return ch * td_star_class(c);
}

// chi_y(X, twist; g) by the holomorphic Lefschetz theorem: the sum over
// fixed components of the degree of the (possibly twisted) class
inline YCoeff equivariant_chi_y(const LocalizationDatum& d,
                                const std::string& g,
                                const TwistData* twist = nullptr) {
    YCoeff acc = YCoeff::zero();
    for (const FixedComponent& c : d.components(g)) {
        TruncSeries cls(c.ring);
        if (twist) {
            auto it = twist->find(c.label);
            if (it == twist->end())
                throw unknown_element("twist data missing component '" +
                                      c.label + "'");
            cls = twisted_class(c, it->second, /*normalized=*/true);
        } else {
            cls = atiyah_singer_class(c, /*normalized=*/true);
        }
        acc += cls.integrate();
    }
    return acc;
}

struct SpecializedInvariants {
    Cyclotomic euler;     // chi_{-1}: Lefschetz number = chi(X^g)
    Cyclotomic todd;      // chi_0
    Cyclotomic signature; // chi_1: equivariant signature
};

inline SpecializedInvariants specialized_invariants(const LocalizationDatum& d,
                                                    const std::string& g) {
    YCoeff genus = equivariant_chi_y(d, g);
    return SpecializedInvariants{genus.specialize(Rational(-1)),
                                 genus.specialize(Rational(0)),
                                 genus.specialize(Rational(1))};
}

// f^g_* T_y*(Y;g) computed on the base: per-component twisted class against
// the chi_y-characteristic of the fiber variation
inline ComponentSeries fibration_pushforward(const LocalizationDatum& base,
                                             const std::string& g,
                                             const TwistData& chi_y_f) {
    ComponentSeries out;
    for (const FixedComponent& c : base.components(g)) {
        auto it = chi_y_f.find(c.label);
        if (it == chi_y_f.end())
            throw unknown_element("chi_y(f) data missing component '" +
                                  c.label + "'");
        out.emplace_back(c.label, twisted_class(c, it->second, true));
    }
    return out;
}

// T~_{y,i} = (1+y)^i T_{y,i} degree-wise: homological degree 2i on a
// component of dimension D corresponds to cohomological degree 2(D-i)
inline bool unnorm_norm_check(const FixedComponent& c) {
    TruncSeries norm = atiyah_singer_class(c, true);
    TruncSeries unnorm = atiyah_singer_class(c, false);
    int dim = c.ring->total_cap;
    TruncSeries expected = norm.map_degreewise([&](int d, const YCoeff& v) {
        return v.mul_1py_power(dim - d);
    });
    return expected == unnorm;
}

namespace detail {

inline std::string pair_label(const std::string& a, const std::string& b) {
    if (a == "id" && b == "id") return "id";
    return a + "|" + b;
}

} // namespace detail

struct ProductComponentMaps {
    FixedComponent component;
    std::vector<size_t> left_map;
    std::vector<size_t> right_map;
};

inline ProductComponentMaps exterior_component(const FixedComponent& a,
                                               const FixedComponent& b) {
    TensorRing t = tensor_ring(a.ring, b.ring);
    FixedComponent c(detail::pair_label(a.label, b.label), t.ring);
    c.tangent = a.tangent.reindex(t.ring, t.left_map) +
                b.tangent.reindex(t.ring, t.right_map);
    c.normal = a.normal.reindex(t.ring, t.left_map) +
               b.normal.reindex(t.ring, t.right_map);
    return ProductComponentMaps{std::move(c), t.left_map, t.right_map};
}

// (X x X'; (g,g')) with fixed sets the pairwise products
inline LocalizationDatum exterior_product(const LocalizationDatum& a,
                                          const LocalizationDatum& b) {
    LocalizationDatum r;
    r.conductor = std::lcm(a.conductor, b.conductor);
    r.group.order = a.group.order * b.group.order;
    for (const auto& ga : a.group.elements)
        for (const auto& gb : b.group.elements)
            r.group.elements.push_back(detail::pair_label(ga, gb));
    if (a.group.mul && b.group.mul) {
        size_t nb = b.group.elements.size();
        size_t n = r.group.elements.size();
        std::vector<std::vector<size_t>> mul(n, std::vector<size_t>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                size_t ia = i / nb, ib = i % nb;
                size_t ja = j / nb, jb = j % nb;
                mul[i][j] = a.group.multiply(ia, ja) * nb +
                            b.group.multiply(ib, jb);
            }
        r.group.mul = std::move(mul);
    }
    for (const auto& ga : a.group.elements)
        for (const auto& gb : b.group.elements) {
            std::vector<FixedComponent> comps;
            for (const auto& ca : a.components(ga))
                for (const auto& cb : b.components(gb))
                    comps.push_back(exterior_component(ca, cb).component);
            r.fixed_data.emplace(detail::pair_label(ga, gb), std::move(comps));
        }
    return r;
}

// relabeling of fixed components under conjugation: key (h, g), value maps
// labels of X^g to labels of X^{hgh^{-1}}; a missing entry means labels
// match up identically
using ConjugationRelabel =
    std::map<std::pair<std::string, std::string>,
             std::map<std::string, std::string>>;

// h_* T_y*(g) = T_y*(hgh^{-1}): classes must agree under the relabeling,
// and in particular the genera of conjugate elements coincide
inline bool check_conjugation(const LocalizationDatum& d,
                              const ConjugationRelabel& relabel = {}) {
    if (!d.group.mul) throw missing_table("conjugation needs a mul table");
    const auto& els = d.group.elements;
    for (size_t hi = 0; hi < els.size(); ++hi) {
        size_t hinv = d.group.inverse(hi);
        for (size_t gi = 0; gi < els.size(); ++gi) {
            size_t ci = d.group.multiply(d.group.multiply(hi, gi), hinv);
            const std::string& g = els[gi];
            const std::string& gc = els[ci];
            const auto& src = d.components(g);
            const auto& dst = d.components(gc);
            if (src.size() != dst.size()) return false;
            auto rl = relabel.find({els[hi], g});
            for (const FixedComponent& c : src) {
                std::string target = c.label;
                if (rl != relabel.end()) {
                    auto it = rl->second.find(c.label);
                    if (it != rl->second.end()) target = it->second;
                }
                const FixedComponent* match = nullptr;
                for (const FixedComponent& cc : dst)
                    if (cc.label == target) match = &cc;
                if (!match) return false;
                if (!same_ring(c.ring, match->ring)) return false;
                if (atiyah_singer_class(c, true) !=
                    atiyah_singer_class(*match, true))
                    return false;
            }
            if (equivariant_chi_y(d, g) != equivariant_chi_y(d, gc))
                return false;
        }
    }
    return true;
}

} // namespace eqclass

#endif
