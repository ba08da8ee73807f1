#ifndef CQS_HCYCLES_HPP
#define CQS_HCYCLES_HPP

#include <vector>

#include "cqs/resolution.hpp"

namespace cqs {

/// Coefficients of the minimal Lipman-cone representative
/// s_h = sum_v a_v E*_v of the class h = a*[E*_s].
struct ShTuple {
    std::vector<Int> a;
    Int h;
};

/// The n tuples for h = (n-1)*[E*_s] down to 0, in the order the inductive
/// decrement algorithm produces them. Each tuple's class is re-verified.
std::vector<ShTuple> sh_sequence(const CyclicType& t);

/// Brute-force minimality: true iff sum a_v E*_v is coefficient-wise <= every
/// sum b_v E*_v with b_v >= 0, sum b <= sum a + n, in the same class.
/// Guarded by a size bound; intended as a desk-scale oracle.
bool verify_minimality(const CyclicType& t, const ShTuple& tup, const Int& max_n = Int(64));

}  // namespace cqs

#endif  // CQS_HCYCLES_HPP
