#ifndef CQS_RESOLUTION_HPP
#define CQS_RESOLUTION_HPP

#include <utility>
#include <vector>

#include "cqs/cf.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

/// The minimal resolution bamboo of X(n,q): s vertices in a chain, vertex v
/// carrying Euler number -k_v.
struct ResolutionGraph {
    CyclicType type;
    std::vector<Int> k;    // k_1..k_s, all >= 2
    std::vector<int> val;  // valencies: 1 at chain ends, 2 inside, 0 if s == 1

    int s() const { return static_cast<int>(k.size()); }
};

ResolutionGraph build_graph(const CyclicType& t);

/// Intersection matrix I: I_vv = -k_v, I_{v,v+-1} = 1, 0 elsewhere.
RatMat intersection_matrix(const ResolutionGraph& g);

/// Dual cycles E*_v: v-th column of -I^{-1}, so (E*_v, E_w) = -delta_vw.
/// The defining pairing identity is re-verified before returning.
std::vector<RatVec> dual_cycles(const ResolutionGraph& g);

/// Fundamental cycle by Laufer's increment procedure; for a bamboo this is
/// always the reduced cycle E = (1,...,1), and the procedure's result is
/// asserted against it.
IntVec fundamental_cycle(const ResolutionGraph& g);

/// (multiplicity, embedding dimension) = (-Z_min^2, -Z_min^2 + 1).
std::pair<Int, Int> mult_and_embdim(const ResolutionGraph& g);

/// Class of a rational cycle in H = L'/L = Z_n, normalized so that
/// [E*_s] = 1: the unique a in [0,n) with cycle - a*E*_s in L.
/// Rejects inputs outside L'.
Int class_of(const ResolutionGraph& g, const RatVec& cycle);

/// Class of the nonnegative combination sum_v a_v E*_v.
Int class_of_combination(const ResolutionGraph& g, const std::vector<Int>& a);

}  // namespace cqs

#endif  // CQS_RESOLUTION_HPP
