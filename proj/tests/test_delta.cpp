#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cqs/delta.hpp"

using namespace cqs;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

BranchParam branch(std::initializer_list<const char*> coords, int cap = INT_MAX) {
    BranchParam b;
    for (const char* c : coords) b.coords.push_back(parse_jet(c));
    b.order_cap = cap;
    return b;
}

// p(u(t)) truncated at degree cap; exact when p and u are exact polynomials.
Jet jet_compose(const Jet& p, const Jet& u, int cap) {
    Jet out{GaussRat(0)};
    Jet power{GaussRat(1)};
    for (size_t k = 0; k < p.size(); ++k) {
        if (k > 0) power = jet_mul(power, u, cap);
        for (size_t d = 0; d < power.size(); ++d) {
            if (out.size() <= d) out.resize(d + 1, GaussRat(0));
            out[d] += p[k] * power[d];
        }
    }
    return out;
}

// Coefficients of (1 + a t)^(1/2) up to degree `deg`.
Jet sqrt_series(const GaussRat& a, int deg) {
    Jet out(deg + 1, GaussRat(0));
    GaussRat b(1);
    out[0] = b;
    for (int k = 1; k <= deg; ++k) {
        b = b * (GaussRat(Rat(1) / 2) - GaussRat(k - 1)) / GaussRat(k) * a;
        out[k] = b;
    }
    return out;
}

std::vector<BranchParam> cut_branches(const CyclicType& t, std::initializer_list<long> r,
                                      std::uint64_t seed) {
    GeneratorTable tab = generator_table(t);
    CutConfiguration cfg = sample_positions(CutConfiguration{ints(r), std::nullopt}, seed);
    return branches_from_config(tab, cfg);
}

}  // namespace

TEST_CASE("coordinate axes form ordinary tuples") {
    std::vector<BranchParam> two{branch({"t", "0"}), branch({"0", "t"})};
    CHECK(delta(two) == 1);
    CHECK(is_ordinary_tuple(two));

    std::vector<BranchParam> three{branch({"t", "0", "0"}), branch({"0", "t", "0"}),
                                   branch({"0", "0", "t"})};
    CHECK(delta(three) == 2);
    CHECK(is_ordinary_tuple(three));

    std::vector<BranchParam> one{branch({"t", "0"})};
    CHECK(delta(one) == 0);
    CHECK(is_ordinary_tuple(one));
}

TEST_CASE("classical plane curve values") {
    // Cusp t -> (t^2, t^3).
    CHECK(delta({branch({"t^2", "t^3"})}) == 1);
    // E6 singularity t -> (t^3, t^4).
    CHECK(delta({branch({"t^3", "t^4"})}) == 3);
    // Tacnode: two smooth branches with second-order contact.
    std::vector<BranchParam> tac{branch({"t", "t^2"}), branch({"t", "-t^2"})};
    CHECK(delta(tac) == 2);
    CHECK_FALSE(is_ordinary_tuple(tac));
    CHECK(hironaka_intersection({tac[0]}, {tac[1]}) == 2);
}

TEST_CASE("A_4 cut facts") {
    CyclicType t(5, 4);
    auto mid = cut_branches(t, {0, 1, 1, 0}, 1);
    CHECK(delta(mid) == 2);
    CHECK_FALSE(is_ordinary_tuple(mid));
    CHECK(hironaka_intersection({mid[0]}, {mid[1]}) == 2);

    auto far = cut_branches(t, {1, 0, 0, 1}, 1);
    CHECK(delta(far) == 1);
    CHECK(is_ordinary_tuple(far));
    CHECK(hironaka_intersection({far[0]}, {far[1]}) == 1);

    auto triple = cut_branches(t, {1, 0, 1, 1}, 1);
    CHECK(delta(triple) == 2);
    CHECK(is_ordinary_tuple(triple));
}

TEST_CASE("a single transversal cut is smooth") {
    GeneratorTable tab = generator_table(CyclicType(15, 11));
    CHECK(delta({branch_from_cut(tab, 3, GaussRat(1))}) == 0);
}

TEST_CASE("the two-branch curve x^2 + y^3 + z^7 = 0") {
    // C1: (t^3 sqrt(1-t), -t^2, t), C2: (i t^3 sqrt(1+t), t^2, t), as exact
    // degree-16 polynomial truncations of the Puiseux parametrizations.
    const int deg = 16;
    Jet x1 = jet_mul(parse_jet("t^3"), sqrt_series(GaussRat(-1), deg), deg);
    Jet x2 = jet_mul(parse_jet("i*t^3"), sqrt_series(GaussRat(1), deg), deg);
    BranchParam c1{{x1, parse_jet("-t^2"), parse_jet("t")}, INT_MAX};
    BranchParam c2{{x2, parse_jet("t^2"), parse_jet("t")}, INT_MAX};

    // The defining equation vanishes up to the stored degree.
    Jet lhs1 = jet_mul(x1, x1, deg);
    Jet y13 = jet_mul(jet_mul(c1.coords[1], c1.coords[1], deg), c1.coords[1], deg);
    Jet z17 = parse_jet("t^7");
    for (size_t d = 0; d < lhs1.size() && d <= static_cast<size_t>(deg); ++d) {
        GaussRat v = lhs1[d];
        if (d < y13.size()) v += y13[d];
        if (d < z17.size()) v += z17[d];
        CHECK(v == GaussRat(0));
    }

    std::vector<BranchParam> curve{c1, c2};
    CHECK(delta(curve) == 2);
    CHECK(hironaka_intersection({c1}, {c2}) == 2);
    // Both branches are smooth, so the whole delta is the contact term.
    CHECK(delta({c1}) == 0);
    CHECK(delta({c2}) == 0);
    // Truncation-order stability.
    for (int N = 4; N <= 16; ++N) CHECK(delta_at(curve, N) == 2);
}

TEST_CASE("delta is invariant under coordinate permutation") {
    auto branches = cut_branches(CyclicType(7, 3), {1, 0, 1}, 2);
    long d = delta(branches);
    std::vector<BranchParam> permuted = branches;
    for (BranchParam& b : permuted) std::rotate(b.coords.begin(), b.coords.begin() + 1, b.coords.end());
    CHECK(delta(permuted) == d);
}

TEST_CASE("delta is invariant under reparametrization") {
    Jet u = parse_jet("t + t^2");  // a unit reparametrization of (C,0)
    std::vector<std::vector<BranchParam>> cases{
        {branch({"t^2", "t^3"})},
        {branch({"t", "t^2"}), branch({"t", "-t^2"})},
        cut_branches(CyclicType(5, 4), {0, 1, 1, 0}, 3),
    };
    for (const auto& branches : cases) {
        long d = delta(branches);
        std::vector<BranchParam> re = branches;
        for (Jet& p : re[0].coords) p = jet_compose(p, u, 64);
        CHECK(delta(re) == d);
    }
}

TEST_CASE("Hironaka additivity on a three-branch union") {
    auto branches = cut_branches(CyclicType(5, 4), {1, 1, 1, 0}, 4);
    REQUIRE(branches.size() == 3);
    long total = delta(branches);
    for (int mask = 1; mask < 4; ++mask) {  // the three 2-partitions
        std::vector<BranchParam> a, b;
        for (int i = 0; i < 3; ++i) ((mask >> i) & 1 ? a : b).push_back(branches[i]);
        if (a.empty() || b.empty()) continue;
        long hir = hironaka_intersection(a, b);
        CHECK(hir >= 1);
        CHECK(total == delta(a) + delta(b) + hir);
    }
}

TEST_CASE("truncation caps are honored, never silently wrong") {
    // delta = 9 needs N >= 19, but only 10 coefficients are known.
    std::vector<BranchParam> capped{branch({"t", "t^9"}, 10), branch({"t", "2*t^9"}, 10)};
    CHECK_THROWS_AS(delta(capped), InconclusiveTruncation);
    // With full polynomials the same pair is fine.
    std::vector<BranchParam> full{branch({"t", "t^9"}), branch({"t", "2*t^9"})};
    CHECK(delta(full) == 9);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(delta({}), InvalidInput);
    // Branch not through the origin.
    CHECK_THROWS_AS(delta({branch({"1 + t", "t"})}), InvalidInput);
    // The zero branch.
    CHECK_THROWS_AS(delta({branch({"0", "0"})}), InvalidInput);
    // Mismatched ambient spaces.
    CHECK_THROWS_AS(delta({branch({"t", "0"}), branch({"0", "t", "0"})}), InvalidInput);
    // Coincident branches.
    CHECK_THROWS_AS(delta({branch({"t", "t^2"}), branch({"t", "t^2"})}), InvalidInput);
    CHECK_THROWS_AS(hironaka_intersection({}, {branch({"t", "0"})}), InvalidInput);
}
