// Independent genus oracle by scissor-relation additivity.
//
// A finite-order linear automorphism of an affine cell C^k lies in the
// connected group GL_k(C), so it acts trivially on the one-dimensional
// compactly supported cohomology H^{2k}_c and the cell contributes (-y)^k
// regardless of the action. Summing over an invariant cell stratification
// gives chi^c_y, and additivity under compactification reads
// chi^c_y(X) = chi_y(Xbar) - chi_y(boundary).
#ifndef EQCLASS_MOTIVIC_HPP
#define EQCLASS_MOTIVIC_HPP

#include "eqclass/ycoeff.hpp"

namespace eqclass {

struct Stratum {
    long cell_dim = 0; // complex dimension
    long count = 1;
};

struct Stratification {
    std::vector<Stratum> strata;
};

inline YCoeff chi_c_y_cells(const Stratification& s) {
    YCoeff acc = YCoeff::zero();
    for (const Stratum& st : s.strata) {
        if (st.cell_dim < 0)
            throw parse_error("cell dimensions must be non-negative");
        acc += YCoeff::minus_y_power(st.cell_dim) * Rational(st.count);
    }
    return acc;
}

// standard invariant cell decomposition of P^n: one cell per dimension
inline Stratification projective_cells(int n) {
    Stratification s;
    for (int k = 0; k <= n; ++k) s.strata.push_back(Stratum{k, 1});
    return s;
}

inline bool compactification_check(const YCoeff& chi_c_open,
                                   const YCoeff& chi_compact,
                                   const YCoeff& chi_boundary) {
    return chi_c_open == chi_compact - chi_boundary;
}

} // namespace eqclass

#endif
