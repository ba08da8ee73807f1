#ifndef CQS_CRITERION_HPP
#define CQS_CRITERION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cqs/generators.hpp"
#include "cqs/resolution.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

/// r_v transversal discs on each E_v, optionally with exact positions
/// c_{v,i} (nonzero, pairwise distinct within a vertex). Positions live in
/// the chart coordinate beta_v, so c = 0 (the point E_v cap E_{v+1}) is
/// excluded; cuts through edge points are not modeled.
struct CutConfiguration {
    std::vector<Int> r;
    std::optional<std::vector<std::vector<GaussRat>>> positions;

    Int total() const {
        Int sum(0);
        for (const Int& rv : r) sum += rv;
        return sum;
    }
};

struct IntervalWitness {
    int v1;  // 1-based
    int v2;
};

struct Verdict {
    bool pass;
    std::optional<IntervalWitness> witness;  // first violating interval on FAIL
};

/// The main inequality: PASS iff for every interval [v1,v2],
/// sum r_v <= 1 + sum (k_v - val_v). O(s^2) via prefix sums; the witness is
/// the lexicographically first violating interval.
Verdict check_inequality(const ResolutionGraph& g, const CutConfiguration& cfg);

/// Tangent matrix of the disc images under the minimal embedding: rows are
/// generators g_j, columns discs (v,i); entry c_{v,i}^{m^j_{v+1}} when
/// m^j_v = 1, zero otherwise.
GaussMat tangent_matrix(const GeneratorTable& tab, const CutConfiguration& cfg);

/// Exact rank by fraction-free elimination.
int tangent_rank(const GaussMat& m);

/// All r-vectors with sum <= r_max passing check_inequality, in
/// lexicographic order; with maximal_only, only those where incrementing
/// any single r_v breaks the inequality.
std::vector<CutConfiguration> enumerate_admissible(const ResolutionGraph& g, const Int& r_max,
                                                   bool maximal_only);

/// Fills pairwise-distinct nonzero rational positions per vertex,
/// deterministically from the seed. Requires positions to be absent.
CutConfiguration sample_positions(const CutConfiguration& cfg, std::uint64_t seed);

/// Deliberately nasty exact positions (large, reciprocal, near-coincident)
/// exercising the theorem's bare "different positions" hypothesis.
CutConfiguration adversarial_positions(const CutConfiguration& cfg);

}  // namespace cqs

#endif  // CQS_CRITERION_HPP
