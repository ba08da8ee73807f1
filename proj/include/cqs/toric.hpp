#ifndef CQS_TORIC_HPP
#define CQS_TORIC_HPP

#include <vector>

#include "cqs/cf.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

struct LatticePoint {
    Int x;
    Int y;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// Lattice points p_0..p_{t+1} on the bounded hull boundary of
/// sigma_dual = cone((1,0),(q,n)), from p_0 = (1,0) through p_1 = (1,1)
/// to p_{t+1} = (q,n). Generated by the three-term recursion
/// p_{j-1} + p_{j+1} = d_j p_j with [d_1..d_t] = hj_expand(n, n-q).
std::vector<LatticePoint> boundary_points_dual_cone(const CyclicType& t);

/// Lattice points e_0..e_{s+1} on the bounded hull boundary of
/// sigma = cone((n,-q),(0,1)): e_0 = (0,1), e_1 = (1,0), ...,
/// e_{s+1} = (n,-q), satisfying e_{v-1} + e_{v+1} = k_v e_v.
std::vector<LatticePoint> boundary_points_cone(const CyclicType& t);

/// <p_j, e_v>: the vanishing order m^j_v of the invariant monomial g_j
/// along the divisor indexed by v (v = 0 is the strict transform of x = 0,
/// v = s+1 that of y = 0).
Int multiplicity_by_pairing(const CyclicType& t, int j, int v);

}  // namespace cqs

#endif  // CQS_TORIC_HPP
