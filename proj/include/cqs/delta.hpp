#ifndef CQS_DELTA_HPP
#define CQS_DELTA_HPP

#include <vector>

#include "cqs/criterion.hpp"
#include "cqs/jets.hpp"

namespace cqs {

struct DeltaOptions {
    int start = 8;     // first truncation order tried
    int ceiling = 512; // give up (InconclusiveTruncation) beyond this
};

/// Codimension at truncation order N of the coordinate-function algebra
/// inside prod_branches C[t]/(t^{N+1}): N-jets of the pulled-back coordinate
/// functions (and 1) are closed into a span under multiplication, exactly.
long delta_at(const std::vector<BranchParam>& branches, int N);

/// Delta invariant of the union of the branches. delta_at is stabilized by
/// doubling from opts.start: N is accepted once delta_at(N) == delta_at(2N)
/// and N >= 2*delta_at(N) + max vanishing order of any coordinate. Throws
/// InconclusiveTruncation if no N up to min(opts.ceiling, order caps) passes.
long delta(const std::vector<BranchParam>& branches, const DeltaOptions& opts = {});

/// Hironaka's intersection number of two curves with disjoint branch sets:
/// delta(union) - delta(first) - delta(second).
long hironaka_intersection(const std::vector<BranchParam>& c1,
                           const std::vector<BranchParam>& c2,
                           const DeltaOptions& opts = {});

/// delta == r - 1: smooth branches with pairwise distinct tangents.
bool is_ordinary_tuple(const std::vector<BranchParam>& branches,
                       const DeltaOptions& opts = {});

/// The branches of a cut configuration with positions, via branch_from_cut.
std::vector<BranchParam> branches_from_config(const GeneratorTable& tab,
                                              const CutConfiguration& cfg);

}  // namespace cqs

#endif  // CQS_DELTA_HPP
