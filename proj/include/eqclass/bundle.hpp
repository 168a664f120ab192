// Split equivariant bundles on a fixed component.
//
// Everything the localization formulas consume restricts to a fixed set of
// a diagonalizable finite-order action, where bundles split into
// eigen-lines; a SplitBundle is the resulting formal sum of lines. Each
// line carries its Chern root (a nilpotent series), the rotation angle of
// the group element on it, a Hodge-filtration degree, and an integer
// multiplicity (negative for virtual summands).
#ifndef EQCLASS_BUNDLE_HPP
#define EQCLASS_BUNDLE_HPP

#include <set>

#include "eqclass/templates.hpp"

namespace eqclass {

struct LineTerm {
    TruncSeries root;
    Angle angle;
    long hodge = 0;
    long mult = 1;
};

class SplitBundle {
public:
    explicit SplitBundle(RingPtr ring) : ring_(std::move(ring)) {}

    static SplitBundle empty(RingPtr ring) { return SplitBundle(std::move(ring)); }

    SplitBundle& add_line(TruncSeries root, Angle angle = Angle::zero(),
                          long hodge = 0, long mult = 1) {
        if (!same_ring(root.ring(), ring_))
            throw ring_mismatch("line root lives in a different ring");
        if (!root.has_zero_constant_term())
            throw ring_mismatch("Chern root must have zero constant term");
        if (mult != 0)
            terms_.push_back(LineTerm{std::move(root), angle, hodge, mult});
        return *this;
    }

    SplitBundle& add_trivial_line(Angle angle = Angle::zero(), long hodge = 0,
                                  long mult = 1) {
        return add_line(TruncSeries::zero(ring_), angle, hodge, mult);
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<LineTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    long rank() const {
        long r = 0;
        for (const auto& t : terms_) r += t.mult;
        return r;
    }

    // direct sum
    friend SplitBundle operator+(const SplitBundle& a, const SplitBundle& b) {
        if (!same_ring(a.ring_, b.ring_))
            throw ring_mismatch("summands live in different rings");
        SplitBundle r = a;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        return r;
    }

    // tensor by the line (root_shift, angle_shift): shifts every term
    SplitBundle tensor_line(const TruncSeries& root_shift,
                            const Angle& angle_shift) const {
        if (!same_ring(root_shift.ring(), ring_))
            throw ring_mismatch("line root lives in a different ring");
        SplitBundle r(ring_);
        for (const auto& t : terms_)
            r.terms_.push_back(LineTerm{t.root + root_shift,
                                        t.angle + angle_shift, t.hodge,
                                        t.mult});
        return r;
    }

    std::vector<Angle> distinct_angles() const {
        std::set<Angle> s;
        for (const auto& t : terms_) s.insert(t.angle);
        return {s.begin(), s.end()};
    }

    SplitBundle restrict_angle(const Angle& a) const {
        SplitBundle r(ring_);
        for (const auto& t : terms_)
            if (t.angle == a) r.terms_.push_back(t);
        return r;
    }

    SplitBundle reindex(RingPtr dst, const std::vector<size_t>& var_map) const {
        SplitBundle r(dst);
        for (const auto& t : terms_)
            r.terms_.push_back(LineTerm{t.root.reindex(dst, var_map), t.angle,
                                        t.hodge, t.mult});
        return r;
    }

    // prod over lines f(root)^mult for a multiplicative class template;
    // angles and Hodge degrees are ignored here — theta-templates are
    // applied to angle-grouped sub-bundles by the caller
    TruncSeries total_class(const TemplateId& id) const {
        TruncSeries acc = TruncSeries::one(ring_);
        for (const auto& t : terms_)
            acc *= compose_template(id, t.root).pow(t.mult);
        return acc;
    }

    TruncSeries total_class(TemplateKind kind) const {
        return total_class(TemplateId::plain(kind));
    }

    // sum over lines mult * zeta^angle * (-y)^hodge * e^{scale*root}; with
    // both flags on and scale 1+y this is the equivariant twisted Chern
    // character ch_{(1+y)}(chi_y(-))(g) of the Hodge-graded bundle
    TruncSeries character(bool scale_one_plus_y, bool use_angle,
                          bool use_hodge) const {
        TemplateKind exp_kind = scale_one_plus_y ? TemplateKind::ExpOnePlusY
                                                 : TemplateKind::Exp;
        TruncSeries acc = TruncSeries::zero(ring_);
        for (const auto& t : terms_) {
            YCoeff c = YCoeff::from_rational(Rational(t.mult));
            if (use_angle && !t.angle.is_zero())
                c = c * Cyclotomic::root_of_unity(t.angle);
            if (use_hodge && t.hodge != 0)
                c = c * YCoeff::minus_y_power(t.hodge);
            acc += compose_template(exp_kind, t.root) * c;
        }
        return acc;
    }

private:
    RingPtr ring_;
    std::vector<LineTerm> terms_;
};

} // namespace eqclass

#endif
