#include "cqs/criterion.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cqs/errors.hpp"
#include "cqs/linalg.hpp"

namespace cqs {

Verdict check_inequality(const ResolutionGraph& g, const CutConfiguration& cfg) {
    const int s = g.s();
    if (static_cast<int>(cfg.r.size()) != s)
        throw InvalidInput("check_inequality: config length != s");
    // prefix_r[v] = sum of r_1..r_v, prefix_c[v] = sum of (k-val)_1..v.
    std::vector<Int> prefix_r(s + 1, Int(0)), prefix_c(s + 1, Int(0));
    for (int v = 1; v <= s; ++v) {
        prefix_r[v] = prefix_r[v - 1] + cfg.r[v - 1];
        prefix_c[v] = prefix_c[v - 1] + g.k[v - 1] - g.val[v - 1];
    }
    for (int v1 = 1; v1 <= s; ++v1) {
        for (int v2 = v1; v2 <= s; ++v2) {
            if (prefix_r[v2] - prefix_r[v1 - 1] > 1 + prefix_c[v2] - prefix_c[v1 - 1])
                return Verdict{false, IntervalWitness{v1, v2}};
        }
    }
    return Verdict{true, std::nullopt};
}

GaussMat tangent_matrix(const GeneratorTable& tab, const CutConfiguration& cfg) {
    const ResolutionGraph& g = tab.graph;
    const int s = g.s();
    if (static_cast<int>(cfg.r.size()) != s)
        throw InvalidInput("tangent_matrix: config length != s");
    if (!cfg.positions) throw InvalidInput("tangent_matrix: positions missing");
    const auto& pos = *cfg.positions;
    if (static_cast<int>(pos.size()) != s)
        throw InvalidInput("tangent_matrix: positions length != s");

    long cols = 0;
    for (int v = 0; v < s; ++v) {
        if (Int(static_cast<long>(pos[v].size())) != cfg.r[v])
            throw InvalidInput("tangent_matrix: position count != r_v");
        std::set<std::pair<Rat, Rat>> distinct;
        for (const GaussRat& c : pos[v]) {
            if (c.is_zero()) throw InvalidInput("tangent_matrix: zero position");
            if (!distinct.insert({c.re, c.im}).second)
                throw InvalidInput("tangent_matrix: duplicate position on one vertex");
        }
        cols += static_cast<long>(pos[v].size());
    }

    const int rows = static_cast<int>(tab.rows.size());
    GaussMat m = GaussMat::Constant(rows, cols, GaussRat(0));
    long col = 0;
    for (int v = 1; v <= s; ++v) {
        for (const GaussRat& c : pos[v - 1]) {
            for (int j = 0; j < rows; ++j) {
                if (tab.rows[j][v] == 1)
                    m(j, col) = pow_gauss(c, tab.rows[j][v + 1].convert_to<long>());
            }
            ++col;
        }
    }
    return m;
}

int tangent_rank(const GaussMat& m) {
    return fraction_free_rank<GaussRat>(m);
}

std::vector<CutConfiguration> enumerate_admissible(const ResolutionGraph& g, const Int& r_max,
                                                   bool maximal_only) {
    if (r_max < 0) throw InvalidInput("enumerate_admissible: r_max < 0");
    const int s = g.s();
    std::vector<Int> bound(s);  // k_v - val_v per vertex
    for (int v = 0; v < s; ++v) bound[v] = g.k[v] - g.val[v];

    std::vector<CutConfiguration> out;
    std::vector<Int> r(s, Int(0));

    // Lexicographic DFS; at depth v we know all intervals ending at v, so a
    // violated interval prunes every extension (r only grows to the right).
    auto violated_ending_at = [&](int v) {
        Int sum_r(0), sum_c(0);
        for (int v1 = v; v1 >= 0; --v1) {
            sum_r += r[v1];
            sum_c += bound[v1];
            if (sum_r > 1 + sum_c) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, int v, const Int& used) -> void {
        if (v == s) {
            CutConfiguration cfg{r, std::nullopt};
            if (maximal_only) {
                for (int w = 0; w < s; ++w) {
                    ++r[w];
                    bool still_ok = check_inequality(g, CutConfiguration{r, std::nullopt}).pass;
                    --r[w];
                    if (still_ok) return;
                }
            }
            out.push_back(std::move(cfg));
            return;
        }
        for (Int c = 0; used + c <= r_max; ++c) {
            r[v] = c;
            if (violated_ending_at(v)) break;  // larger c only violates harder
            self(self, v + 1, used + c);
        }
        r[v] = 0;
    };
    rec(rec, 0, Int(0));
    return out;
}

namespace {

std::vector<GaussRat> position_pool() {
    // Small magnitudes keep the exact coefficients c^m compact downstream.
    std::vector<GaussRat> pool;
    for (int i = 1; i <= 4; ++i) {
        pool.emplace_back(Rat(i));
        pool.emplace_back(Rat(-i));
    }
    return pool;
}

}  // namespace

CutConfiguration sample_positions(const CutConfiguration& cfg, std::uint64_t seed) {
    if (cfg.positions) throw InvalidInput("sample_positions: positions already present");
    const int s = static_cast<int>(cfg.r.size());
    std::vector<std::vector<GaussRat>> pos(s);
    for (int v = 0; v < s; ++v) {
        long rv = cfg.r[v].convert_to<long>();
        std::vector<GaussRat> pool = position_pool();
        if (rv > static_cast<long>(pool.size()))
            throw InvalidInput("sample_positions: r_v exceeds the position pool");
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(v) + 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        pos[v].assign(pool.begin(), pool.begin() + rv);
    }
    return CutConfiguration{cfg.r, std::move(pos)};
}

CutConfiguration adversarial_positions(const CutConfiguration& cfg) {
    if (cfg.positions) throw InvalidInput("adversarial_positions: positions already present");
    const int s = static_cast<int>(cfg.r.size());
    // Large, reciprocal, and a near-coincident pair; distinct within a vertex.
    const std::vector<GaussRat> pool{
        GaussRat(Rat(13)),       GaussRat(Rat(1) / 13), GaussRat(Rat(1)),
        GaussRat(Rat(14) / 13),  GaussRat(Rat(-13)),    GaussRat(Rat(-1) / 13),
        GaussRat(Rat(-1)),       GaussRat(Rat(-14) / 13)};
    std::vector<std::vector<GaussRat>> pos(s);
    for (int v = 0; v < s; ++v) {
        long rv = cfg.r[v].convert_to<long>();
        if (rv > static_cast<long>(pool.size()))
            throw InvalidInput("adversarial_positions: r_v exceeds the position pool");
        pos[v].assign(pool.begin(), pool.begin() + rv);
    }
    return CutConfiguration{cfg.r, std::move(pos)};
}

}  // namespace cqs
