#ifndef CQS_CF_HPP
#define CQS_CF_HPP

#include <vector>

#include "cqs/errors.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

/// The pair (n,q) defining the cyclic quotient singularity X(n,q):
/// C^2 / Z_n with the action xi*(z1,z2) = (xi z1, xi^q z2).
struct CyclicType {
    Int n;
    Int q;

    CyclicType(Int n_, Int q_);
};

/// Negative-regular (Hirzebruch-Jung) continued fraction
/// n/q = k_1 - 1/(k_2 - 1/(...)), all entries >= 2.
struct HJExpansion {
    std::vector<Int> entries;

    explicit HJExpansion(std::vector<Int> e);
    int length() const { return static_cast<int>(entries.size()); }
};

HJExpansion hj_expand(const CyclicType& t);

/// Inverse of hj_expand: the unique (n,q) whose expansion is e.
CyclicType hj_evaluate(const HJExpansion& e);

/// The unique q' with 0 < q' < n and q*q' == 1 (mod n).
Int mod_inverse(const CyclicType& t);

}  // namespace cqs

#endif  // CQS_CF_HPP
