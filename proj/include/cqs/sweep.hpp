#ifndef CQS_SWEEP_HPP
#define CQS_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cqs/criterion.hpp"

namespace cqs {

/// One three-way comparison that failed to agree: the inequality verdict,
/// full column rank of the tangent matrix, and delta = total - 1.
struct SweepDisagreement {
    CyclicType type;
    std::vector<Int> r;
    std::vector<std::vector<GaussRat>> positions;
    std::string assignment;  // "seed <S>" or "adversarial"
    bool inequality_pass;
    bool rank_full;
    bool delta_ordinary;
};

struct SweepReport {
    long cases = 0;  // (config, assignment) pairs compared
    std::vector<SweepDisagreement> disagreements;
};

/// For every coprime (n,q) with 2 <= n <= max_n, every configuration with
/// 1 <= sum r_v <= max_r, and every listed assignment (per-seed sampled
/// positions, plus the adversarial set when requested), checks
///   check_inequality PASS  <=>  tangent_rank = sum r_v  <=>  delta = sum r_v - 1
/// and records every disagreement with full reproduction data. The empty
/// configuration is excluded: it has no curve to take delta of.
SweepReport keystone_sweep(const Int& max_n, const Int& max_r,
                           const std::vector<std::uint64_t>& seeds, bool adversarial);

std::string render_report(const SweepReport& rep);

}  // namespace cqs

#endif  // CQS_SWEEP_HPP
