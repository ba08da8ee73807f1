// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion re-derives its facts from scratch so a regression
// anywhere in the library surfaces here.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqs/cf.hpp"
#include "cqs/criterion.hpp"
#include "cqs/delta.hpp"
#include "cqs/generators.hpp"
#include "cqs/hcycles.hpp"
#include "cqs/resolution.hpp"
#include "cqs/sweep.hpp"
#include "cqs/toric.hpp"
#include "oracles.hpp"

using namespace cqs;

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
    throw std::runtime_error(what + " (acceptance.cpp:" + std::to_string(line) + ")");
}

#define EXPECT(cond)                                 \
    do {                                             \
        if (!(cond)) fail("expected: " #cond, __LINE__); \
    } while (0)

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

CutConfiguration with_seed(std::initializer_list<long> r, std::uint64_t seed) {
    return sample_positions(CutConfiguration{ints(r), std::nullopt}, seed);
}

// ---- criterion bodies ------------------------------------------------------

void c1_continued_fractions() {
    EXPECT(hj_expand(CyclicType(15, 11)).entries == ints({2, 2, 3, 2, 2}));
    EXPECT(hj_expand(CyclicType(15, 4)).entries == ints({4, 4}));
    for (int n = 2; n <= 200; ++n) {
        for (int q = 1; q < n; ++q) {
            if (gcd(Int(n), Int(q)) != 1) continue;
            CyclicType t(n, q);
            CyclicType back = hj_evaluate(hj_expand(t));
            EXPECT(back.n == n && back.q == q);
        }
    }
}

void c2_generator_table_15_11() {
    GeneratorTable tab = generator_table(CyclicType(15, 11));
    const std::string expected =
        "z1^15     0 <-  [1]    2    3    7   11  -> 15\n"
        "z1^4*z2   1 <-  [1]  [1]  [1]    2    3  ->  4\n"
        "z1*z2^4   4 <-    3    2  [1]  [1]  [1]  ->  1\n"
        "z2^15    15 <-   11    7    3    2  [1]  ->  0\n";
    if (render_table(tab) != expected) {
        std::cerr << "rendered table:\n" << render_table(tab);
        fail("generator table text mismatch", __LINE__);
    }
}

void c3_sh_sequence() {
    const std::vector<std::vector<Int>> expected = {
        ints({1, 0, 1, 0, 0}), ints({1, 0, 0, 1, 0}), ints({1, 0, 0, 0, 1}),
        ints({1, 0, 0, 0, 0}), ints({0, 1, 1, 0, 0}), ints({0, 1, 0, 1, 0}),
        ints({0, 1, 0, 0, 1}), ints({0, 1, 0, 0, 0}), ints({0, 0, 2, 0, 0}),
        ints({0, 0, 1, 1, 0}), ints({0, 0, 1, 0, 1}), ints({0, 0, 1, 0, 0}),
        ints({0, 0, 0, 1, 0}), ints({0, 0, 0, 0, 1}), ints({0, 0, 0, 0, 0}),
    };
    CyclicType t(15, 11);
    ResolutionGraph g = build_graph(t);
    std::vector<ShTuple> seq = sh_sequence(t);
    EXPECT(seq.size() == expected.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        EXPECT(seq[i].a == expected[i]);
        if (seq[i].h > 0)
            EXPECT(check_inequality(g, CutConfiguration{seq[i].a, std::nullopt}).pass);
    }
    for (const CyclicType& small : cqs_test::all_types(12)) {
        for (const ShTuple& tup : sh_sequence(small)) {
            EXPECT(verify_minimality(small, tup));
        }
    }
}

void c4_a4_facts() {
    CyclicType t(5, 4);
    ResolutionGraph g = build_graph(t);
    GeneratorTable tab = generator_table(t);

    CutConfiguration good = with_seed({1, 0, 0, 1}, 1);
    EXPECT(check_inequality(g, good).pass);
    EXPECT(tangent_rank(tangent_matrix(tab, good)) == 2);
    EXPECT(delta(branches_from_config(tab, good)) == 1);

    CutConfiguration bad = with_seed({0, 1, 1, 0}, 1);
    Verdict v = check_inequality(g, bad);
    EXPECT(!v.pass);
    EXPECT(v.witness && v.witness->v1 == 2 && v.witness->v2 == 3);
    EXPECT(tangent_rank(tangent_matrix(tab, bad)) == 1);
    EXPECT(delta(branches_from_config(tab, bad)) == 2);

    CutConfiguration triple = with_seed({1, 0, 1, 1}, 1);
    EXPECT(check_inequality(g, triple).pass);
    auto branches = branches_from_config(tab, triple);
    EXPECT(delta(branches) == 2);
    EXPECT(is_ordinary_tuple(branches));
}

std::string c5_keystone() {
    SweepReport rep = keystone_sweep(12, 4, {1, 2, 3}, true);
    if (!rep.disagreements.empty()) {
        std::cerr << render_report(rep);
        fail("keystone sweep found disagreements", __LINE__);
    }
    return std::to_string(rep.cases) + " cases";
}

void c6_dimension_proposition() {
    for (const CyclicType& t : cqs_test::all_types(50)) {
        GeneratorTable tab = generator_table(t);
        const ResolutionGraph& g = tab.graph;
        for (int u = 1; u <= g.s(); ++u) {
            EXPECT(Int(dim_count(tab, u)) == g.k[u - 1] - g.val[u - 1] + 1);
        }
    }
}

void c7_toric_cross_check() {
    for (const CyclicType& t : cqs_test::all_types(50)) {
        GeneratorTable tab = generator_table(t);
        const int s = tab.graph.s();
        for (int j = 0; j < static_cast<int>(tab.rows.size()); ++j)
            for (int v = 0; v <= s + 1; ++v)
                EXPECT(multiplicity_by_pairing(t, j, v) == tab.rows[j][v]);

        auto p = boundary_points_dual_cone(t);
        auto e = boundary_points_cone(t);
        HJExpansion dual = hj_expand(CyclicType(t.n, t.n - t.q));
        for (int j = 1; j + 1 < static_cast<int>(p.size()); ++j) {
            EXPECT(p[j - 1].x + p[j + 1].x == dual.entries[j - 1] * p[j].x);
            EXPECT(p[j - 1].y + p[j + 1].y == dual.entries[j - 1] * p[j].y);
        }
        HJExpansion prim = hj_expand(t);
        for (int v = 1; v + 1 < static_cast<int>(e.size()); ++v) {
            EXPECT(e[v - 1].x + e[v + 1].x == prim.entries[v - 1] * e[v].x);
            EXPECT(e[v - 1].y + e[v + 1].y == prim.entries[v - 1] * e[v].y);
        }
        for (size_t j = 0; j + 1 < p.size(); ++j) {
            Int c = p[j].x * p[j + 1].y - p[j].y * p[j + 1].x;
            EXPECT(c == 1 || c == -1);
        }
        for (size_t v = 0; v + 1 < e.size(); ++v) {
            Int c = e[v].x * e[v + 1].y - e[v].y * e[v + 1].x;
            EXPECT(c == 1 || c == -1);
        }
    }
    for (const CyclicType& t : cqs_test::all_types(20)) {
        EXPECT(cqs_test::to_set(boundary_points_dual_cone(t)) ==
               cqs_test::hilbert_basis_dual_cone(t));
        EXPECT(cqs_test::to_set(boundary_points_cone(t)) == cqs_test::hilbert_basis_cone(t));
    }
}

void c8_equation_identities() {
    for (const CyclicType& t : cqs_test::all_types(50)) {
        GeneratorTable tab = generator_table(t);
        EXPECT(dual_recursion_check(tab));
        EXPECT(xy_identity_check(tab));
        for (int j = 1; j <= tab.t(); ++j)
            for (int k = j; k <= tab.t(); ++k) EXPECT(equation_exponent_check(tab, j, k));
    }
}

void c9_counting_identities() {
    for (const CyclicType& t : cqs_test::all_types(50)) {
        ResolutionGraph g = build_graph(t);
        GeneratorTable tab = generator_table(t);
        auto [mult, embdim] = mult_and_embdim(g);

        // Generator count = t + 2 = 3 + sum(k_v - 2) = -Z_min^2 + 1 = embdim.
        Int count(3);
        for (const Int& k : g.k) count += k - 2;
        EXPECT(Int(static_cast<long>(tab.rows.size())) == count);
        EXPECT(Int(tab.t()) + 2 == count);
        EXPECT(count == embdim);
        EXPECT(embdim == mult + 1);

        IntVec z = fundamental_cycle(g);
        for (int v = 0; v < g.s(); ++v) EXPECT(z(v) == 1);

        for (const CutConfiguration& cfg : enumerate_admissible(g, embdim + 2, false)) {
            EXPECT(cfg.total() <= embdim);
        }
    }
}

// (1 + a t)^(1/2) up to degree deg.
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

void c10_plane_curve_example() {
    // x^2 + y^3 + z^7 = 0: branches (t^3 sqrt(1-t), -t^2, t) and
    // (i t^3 sqrt(1+t), t^2, t), stored as exact degree-16 polynomials.
    const int deg = 16;
    BranchParam c1{{jet_mul(parse_jet("t^3"), sqrt_series(GaussRat(-1), deg), deg),
                    parse_jet("-t^2"), parse_jet("t")},
                   INT_MAX};
    BranchParam c2{{jet_mul(parse_jet("i*t^3"), sqrt_series(GaussRat(1), deg), deg),
                    parse_jet("t^2"), parse_jet("t")},
                   INT_MAX};
    std::vector<BranchParam> curve{c1, c2};
    EXPECT(delta_at(curve, 8) == 2);
    EXPECT(delta(curve) == 2);
    EXPECT(hironaka_intersection({c1}, {c2}) == 2);
    for (int N = 4; N <= 16; ++N) EXPECT(delta_at(curve, N) == 2);
}

std::string c11_additivity() {
    auto types = cqs_test::all_types(12);
    std::mt19937_64 rng(20260823);
    const std::vector<GaussRat> pool{GaussRat(1),          GaussRat(-1),
                                     GaussRat(2),          GaussRat(-2),
                                     GaussRat(3),          GaussRat(-3),
                                     GaussRat(Rat(1) / 2), GaussRat(Rat(-1) / 2)};
    long partitions_checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const CyclicType& t = types[rng() % types.size()];
        GeneratorTable tab = generator_table(t);
        const int s = tab.graph.s();
        const int count = 2 + static_cast<int>(rng() % 2);  // 2 or 3 branches

        std::set<std::pair<int, size_t>> used;
        std::vector<BranchParam> branches;
        while (static_cast<int>(branches.size()) < count) {
            int v = 1 + static_cast<int>(rng() % s);
            size_t c = rng() % pool.size();
            if (!used.insert({v, c}).second) continue;
            branches.push_back(branch_from_cut(tab, v, pool[c]));
        }

        long total = delta(branches);
        for (int mask = 1; mask < (1 << count) - 1; ++mask) {
            if ((mask & 1) == 0) continue;  // each unordered partition once
            std::vector<BranchParam> a, b;
            for (int i = 0; i < count; ++i)
                ((mask >> i) & 1 ? a : b).push_back(branches[i]);
            long hir = hironaka_intersection(a, b);  // throws if < 1
            EXPECT(hir >= 1);
            EXPECT(total == delta(a) + delta(b) + hir);
            ++partitions_checked;
        }
    }
    return "100 branch sets, " + std::to_string(partitions_checked) + " partitions";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<std::string()> body;
    };
    auto plain = [](void (*f)()) {
        return [f]() -> std::string {
            f();
            return "";
        };
    };
    const std::vector<Criterion> criteria = {
        {1, "continued fractions: known expansions, round trip n <= 200", plain(c1_continued_fractions)},
        {2, "generator table (15,11) byte-exact", plain(c2_generator_table_15_11)},
        {3, "s_h sequence (15,11); inequality; minimality n <= 12", plain(c3_sh_sequence)},
        {4, "A_4 facts: (1,0,0,1), (0,1,1,0), (1,0,1,1)", plain(c4_a4_facts)},
        {5, "keystone equivalence sweep n <= 12, sum r <= 4", c5_keystone},
        {6, "dimension proposition n <= 50", plain(c6_dimension_proposition)},
        {7, "toric cross-check n <= 50, Hilbert bases n <= 20", plain(c7_toric_cross_check)},
        {8, "equation identities n <= 50", plain(c8_equation_identities)},
        {9, "counting identities and admissible bound n <= 50", plain(c9_counting_identities)},
        {10, "two-branch curve x^2 + y^3 + z^7, stable orders 4-16", plain(c10_plane_curve_example)},
        {11, "Hironaka additivity on random branch sets", c11_additivity},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string note;
        std::string error;
        try {
            note = c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (error.empty() ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name;
        if (!note.empty()) line << " [" << note << "]";
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << secs << " s)";
        if (!error.empty()) line << "\n       " << error;
        std::cout << line.str() << std::endl;
        if (!error.empty()) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) FAILED" << std::endl;
        return 1;
    }
    std::cout << "all 11 criteria PASSED" << std::endl;
    return 0;
}
