#include "cqs/delta.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <utility>

#include "cqs/errors.hpp"

namespace cqs {

namespace {

bool is_zero_s(const Rat& v) { return v == 0; }
bool is_zero_s(const GaussRat& v) { return v.is_zero(); }

/// Exact incremental span closure in prod_b C[t]/(t^{N+1}), S = Rat or
/// GaussRat. Vectors are sparse, sorted by pos = branch*(N+1) + degree;
/// stored rows are reduced with leading coefficient 1.
template <class S>
struct SpanEngine {
    int r, N, L;
    // gens[g][b]: nonzero terms (degree <= N, ascending) of coordinate g on branch b.
    std::vector<std::vector<std::vector<std::pair<int, S>>>> gens;

    using SVec = std::vector<std::pair<int, S>>;
    std::vector<SVec> rows;
    std::unordered_map<int, int> pivot;
    std::vector<S> scratch;
    std::vector<char> used;
    std::vector<int> touched;

    SpanEngine(int r_, int N_) : r(r_), N(N_), L(r_ * (N_ + 1)) {
        scratch.assign(L, S(0));
        used.assign(L, 0);
    }

    SVec mul(const SVec& row, int g) {
        for (const auto& [pos, c] : row) {
            int b = pos / (N + 1);
            int d = pos % (N + 1);
            for (const auto& [e, gc] : gens[g][b]) {
                if (d + e > N) break;
                int p = pos + e;
                if (!used[p]) {
                    used[p] = 1;
                    scratch[p] = c * gc;
                    touched.push_back(p);
                } else {
                    scratch[p] += c * gc;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        SVec out;
        out.reserve(touched.size());
        for (int p : touched) {
            if (!is_zero_s(scratch[p])) out.emplace_back(p, std::move(scratch[p]));
            used[p] = 0;
            scratch[p] = S(0);
        }
        touched.clear();
        return out;
    }

    static SVec axpy_sub(const SVec& v, const S& c, const SVec& row) {
        SVec out;
        out.reserve(v.size() + row.size());
        size_t i = 0, j = 0;
        while (i < v.size() || j < row.size()) {
            if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || row[j].first < v[i].first) {
                out.emplace_back(row[j].first, S(0) - c * row[j].second);
                ++j;
            } else {
                S val = v[i].second - c * row[j].second;
                if (!is_zero_s(val)) out.emplace_back(v[i].first, std::move(val));
                ++i;
                ++j;
            }
        }
        return out;
    }

    bool reduce_insert(SVec v) {
        while (!v.empty()) {
            auto it = pivot.find(v[0].first);
            if (it == pivot.end()) {
                S inv = S(1) / v[0].second;
                for (auto& e : v) e.second = e.second * inv;
                pivot[v[0].first] = static_cast<int>(rows.size());
                rows.push_back(std::move(v));
                return true;
            }
            v = axpy_sub(v, v[0].second, rows[it->second]);
        }
        return false;
    }

    long run() {
        SVec one;
        for (int b = 0; b < r; ++b) one.emplace_back(b * (N + 1), S(1));
        reduce_insert(std::move(one));
        std::queue<int> work;
        work.push(0);
        while (!work.empty()) {
            int idx = work.front();
            work.pop();
            for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
                SVec prod = mul(rows[idx], g);
                if (prod.empty()) continue;
                int next = static_cast<int>(rows.size());
                if (reduce_insert(std::move(prod))) work.push(next);
            }
        }
        return static_cast<long>(L) - static_cast<long>(rows.size());
    }
};

template <class S, class Conv>
long run_delta(const std::vector<BranchParam>& branches, int N, Conv conv) {
    const int r = static_cast<int>(branches.size());
    const size_t ncoords = branches[0].coords.size();
    SpanEngine<S> eng(r, N);
    for (size_t j = 0; j < ncoords; ++j) {
        std::vector<std::vector<std::pair<int, S>>> gen(r);
        bool nonzero = false;
        for (int b = 0; b < r; ++b) {
            const Jet& coord = branches[b].coords[j];
            for (size_t d = 0; d < coord.size() && d <= static_cast<size_t>(N); ++d) {
                if (coord[d].is_zero()) continue;
                gen[b].emplace_back(static_cast<int>(d), conv(coord[d]));
                nonzero = true;
            }
        }
        if (nonzero) eng.gens.push_back(std::move(gen));
    }
    return eng.run();
}

/// Rational-input engine over the integers: rows are kept as integer vectors
/// and reduced fraction-free (v <- r0*v - v0*row), with content stripped at
/// insertion and whenever the leading entry grows past a size threshold.
/// Avoids the per-operation gcd that plain rational arithmetic pays.
struct IntSpanEngine {
    int r, N, L;
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> gens;

    using IVec = std::vector<std::pair<int, Int>>;
    std::vector<IVec> rows;
    std::unordered_map<int, int> pivot;
    std::vector<Int> scratch;
    std::vector<char> used;
    std::vector<int> touched;

    IntSpanEngine(int r_, int N_) : r(r_), N(N_), L(r_ * (N_ + 1)) {
        scratch.assign(L, Int(0));
        used.assign(L, 0);
    }

    IVec mul(const IVec& row, int g) {
        for (const auto& [pos, c] : row) {
            int b = pos / (N + 1);
            int d = pos % (N + 1);
            for (const auto& [e, gc] : gens[g][b]) {
                if (d + e > N) break;
                int p = pos + e;
                if (!used[p]) {
                    used[p] = 1;
                    scratch[p] = c * gc;
                    touched.push_back(p);
                } else {
                    scratch[p] += c * gc;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        IVec out;
        out.reserve(touched.size());
        for (int p : touched) {
            if (scratch[p] != 0) out.emplace_back(p, std::move(scratch[p]));
            used[p] = 0;
            scratch[p] = 0;
        }
        touched.clear();
        return out;
    }

    static void strip_content(IVec& v) {
        Int g(0);
        for (const auto& [p, c] : v) {
            g = gcd(g, c);
            if (g == 1) return;
        }
        if (g == 0 || g == 1) return;
        for (auto& [p, c] : v) c /= g;
    }

    bool reduce_insert(IVec v) {
        while (!v.empty()) {
            auto it = pivot.find(v[0].first);
            if (it == pivot.end()) {
                strip_content(v);
                pivot[v[0].first] = static_cast<int>(rows.size());
                rows.push_back(std::move(v));
                return true;
            }
            const IVec& row = rows[it->second];
            Int v0 = v[0].second, r0 = row[0].second;
            IVec out;
            out.reserve(v.size() + row.size());
            size_t i = 0, j = 0;
            while (i < v.size() || j < row.size()) {
                if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
                    out.emplace_back(v[i].first, r0 * v[i].second);
                    ++i;
                } else if (i == v.size() || row[j].first < v[i].first) {
                    out.emplace_back(row[j].first, -(v0 * row[j].second));
                    ++j;
                } else {
                    Int val = r0 * v[i].second - v0 * row[j].second;
                    if (val != 0) out.emplace_back(v[i].first, std::move(val));
                    ++i;
                    ++j;
                }
            }
            v = std::move(out);
            if (!v.empty() && msb(abs(v[0].second)) > 4096) strip_content(v);
        }
        return false;
    }

    long run() {
        IVec one;
        for (int b = 0; b < r; ++b) one.emplace_back(b * (N + 1), Int(1));
        reduce_insert(std::move(one));
        std::queue<int> work;
        work.push(0);
        while (!work.empty()) {
            int idx = work.front();
            work.pop();
            for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
                IVec prod = mul(rows[idx], g);
                if (prod.empty()) continue;
                int next = static_cast<int>(rows.size());
                if (reduce_insert(std::move(prod))) work.push(next);
            }
        }
        return static_cast<long>(L) - static_cast<long>(rows.size());
    }
};

long run_delta_int(const std::vector<BranchParam>& branches, int N) {
    const int r = static_cast<int>(branches.size());
    const size_t ncoords = branches[0].coords.size();
    IntSpanEngine eng(r, N);
    for (size_t j = 0; j < ncoords; ++j) {
        std::vector<std::vector<std::pair<int, Rat>>> gen(r);
        bool nonzero = false;
        Int lcm(1);
        for (int b = 0; b < r; ++b) {
            const Jet& coord = branches[b].coords[j];
            for (size_t d = 0; d < coord.size() && d <= static_cast<size_t>(N); ++d) {
                if (coord[d].is_zero()) continue;
                gen[b].emplace_back(static_cast<int>(d), coord[d].re);
                Int den = denominator(coord[d].re);
                lcm = lcm / gcd(lcm, den) * den;
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        // Scaling a generator by a nonzero constant scales each product by a
        // unit and leaves the span untouched.
        std::vector<std::vector<std::pair<int, Int>>> gi(r);
        for (int b = 0; b < r; ++b) {
            for (const auto& [d, c] : gen[b])
                gi[b].emplace_back(d, numerator(c) * (lcm / denominator(c)));
        }
        eng.gens.push_back(std::move(gi));
    }
    return eng.run();
}

struct Prepared {
    int cap;     // min order cap across branches (INT_MAX if all exact)
    int maxord;  // largest vanishing order of any nonzero coordinate
    bool real;   // every coefficient rational
};

Prepared validate_branches(const std::vector<BranchParam>& branches) {
    Prepared p{INT_MAX, 0, true};
    if (branches.empty()) throw InvalidInput("delta: no branches");
    const size_t ncoords = branches[0].coords.size();
    if (ncoords == 0) throw InvalidInput("delta: branch with no coordinates");
    for (const BranchParam& b : branches) {
        if (b.coords.size() != ncoords)
            throw InvalidInput("delta: branches with different coordinate counts");
        if (b.order_cap < 1) throw InvalidInput("delta: order cap below 1");
        p.cap = std::min(p.cap, b.order_cap);
        bool any = false;
        for (const Jet& coord : b.coords) {
            int ord = jet_order(coord);
            if (ord == 0) throw InvalidInput("delta: branch does not pass through the origin");
            if (ord == INT_MAX) continue;
            any = true;
            p.maxord = std::max(p.maxord, ord);
            for (const GaussRat& c : coord) p.real = p.real && c.is_real();
        }
        if (!any) throw InvalidInput("delta: branch with all coordinates zero");
    }
    for (size_t i = 0; i < branches.size(); ++i) {
        for (size_t j = i + 1; j < branches.size(); ++j) {
            int bound = std::min(branches[i].order_cap, branches[j].order_cap);
            // Compare only finitely far: beyond every stored coefficient both
            // sides are zero anyway.
            int longest = 0;
            for (size_t c = 0; c < ncoords; ++c) {
                longest = std::max<int>(longest, static_cast<int>(branches[i].coords[c].size()));
                longest = std::max<int>(longest, static_cast<int>(branches[j].coords[c].size()));
            }
            bound = std::min(bound, longest);
            bool same = true;
            for (size_t c = 0; c < ncoords && same; ++c)
                same = jet_equal_to(branches[i].coords[c], branches[j].coords[c], bound);
            if (same)
                throw InvalidInput("delta: two branches coincide to the known order");
        }
    }
    return p;
}

}  // namespace

long delta_at(const std::vector<BranchParam>& branches, int N) {
    if (N < 1) throw InvalidInput("delta_at: truncation order below 1");
    Prepared p = validate_branches(branches);
    if (N > p.cap) throw InvalidInput("delta_at: truncation order beyond an order cap");
    if (p.real) return run_delta_int(branches, N);
    return run_delta<GaussRat>(branches, N, [](const GaussRat& c) { return c; });
}

long delta(const std::vector<BranchParam>& branches, const DeltaOptions& opts) {
    if (opts.start < 1) throw InvalidInput("delta: start order below 1");
    Prepared p = validate_branches(branches);
    std::map<int, long> memo;
    auto at = [&](int N) {
        auto it = memo.find(N);
        if (it != memo.end()) return it->second;
        long v = delta_at(branches, N);
        memo[N] = v;
        return v;
    };
    // Search for an N accepted by the rule delta_N = delta_2N and
    // N >= 2*delta_N + maxord. delta_N only underestimates, so each value
    // gives a candidate for the conductor bound directly; when a candidate's
    // delta grows past its own bound the candidate moves up, and a failed
    // delta_N = delta_2N comparison at least doubles it.
    auto guard = [&](int N) {
        if (N > opts.ceiling || N > p.cap)
            throw InconclusiveTruncation(
                "delta: no truncation order up to the ceiling stabilized");
    };
    guard(opts.start);
    int M = std::max(2 * static_cast<int>(at(opts.start)) + p.maxord, opts.start);
    for (;;) {
        guard(M);
        long dm = at(M);
        if (2 * dm + p.maxord > M) {
            M = 2 * static_cast<int>(dm) + p.maxord;
            continue;
        }
        guard(2 * M);
        long d2m = at(2 * M);
        if (d2m == dm) return dm;
        M = std::max(2 * static_cast<int>(d2m) + p.maxord, 2 * M);
    }
}

long hironaka_intersection(const std::vector<BranchParam>& c1,
                           const std::vector<BranchParam>& c2, const DeltaOptions& opts) {
    if (c1.empty() || c2.empty())
        throw InvalidInput("hironaka_intersection: empty curve");
    std::vector<BranchParam> all = c1;
    all.insert(all.end(), c2.begin(), c2.end());
    long result = delta(all, opts) - delta(c1, opts) - delta(c2, opts);
    if (result < 1)
        throw VerificationFailure("hironaka_intersection: result below 1");
    return result;
}

bool is_ordinary_tuple(const std::vector<BranchParam>& branches, const DeltaOptions& opts) {
    if (branches.empty()) throw InvalidInput("is_ordinary_tuple: no branches");
    return delta(branches, opts) == static_cast<long>(branches.size()) - 1;
}

std::vector<BranchParam> branches_from_config(const GeneratorTable& tab,
                                              const CutConfiguration& cfg) {
    if (!cfg.positions) throw InvalidInput("branches_from_config: positions missing");
    const int s = tab.graph.s();
    if (static_cast<int>(cfg.r.size()) != s || static_cast<int>(cfg.positions->size()) != s)
        throw InvalidInput("branches_from_config: config length != s");
    std::vector<BranchParam> out;
    for (int v = 1; v <= s; ++v) {
        if (Int(static_cast<long>((*cfg.positions)[v - 1].size())) != cfg.r[v - 1])
            throw InvalidInput("branches_from_config: position count != r_v");
        for (const GaussRat& c : (*cfg.positions)[v - 1])
            out.push_back(branch_from_cut(tab, v, c));
    }
    return out;
}

}  // namespace cqs
