#include "cqs/hcycles.hpp"

#include "cqs/errors.hpp"

namespace cqs {

std::vector<ShTuple> sh_sequence(const CyclicType& t) {
    ResolutionGraph g = build_graph(t);
    const int s = g.s();
    std::vector<ShTuple> out;

    std::vector<Int> a(s);
    a[0] = g.k[0] - 1;
    for (int v = 1; v < s; ++v) a[v] = g.k[v] - 2;

    Int h = t.n - 1;
    for (;;) {
        out.push_back(ShTuple{a, h});
        if (h == 0) break;
        if (a[s - 1] > 0) {
            --a[s - 1];
        } else {
            // Largest u with a_u = ... = a_s = 0 and a_{u-1} != 0; rewrite the
            // tail as (..., a_{u-1}-1, k_u-1, k_{u+1}-2, ..., k_s-2).
            int u = s - 1;  // 0-based index of the first zero of the tail
            while (u > 0 && a[u - 1] == 0) --u;
            if (u == 0) throw VerificationFailure("sh_sequence: tail rewrite hit the start");
            --a[u - 1];
            a[u] = g.k[u] - 1;
            for (int v = u + 1; v < s; ++v) a[v] = g.k[v] - 2;
        }
        --h;
    }

    if (Int(static_cast<long>(out.size())) != t.n)
        throw VerificationFailure("sh_sequence: sequence length != n");
    for (const Int& c : out.back().a) {
        if (c != 0) throw VerificationFailure("sh_sequence: final tuple not zero");
    }
    // Each step's tuple must actually represent its class.
    for (const ShTuple& tup : out) {
        if (class_of_combination(g, tup.a) != tup.h)
            throw VerificationFailure("sh_sequence: tuple class != a*[E*_s]");
    }
    return out;
}

bool verify_minimality(const CyclicType& t, const ShTuple& tup, const Int& max_n) {
    if (t.n > max_n)
        throw InvalidInput("verify_minimality: n exceeds the brute-force bound");
    ResolutionGraph g = build_graph(t);
    const int s = g.s();
    if (static_cast<int>(tup.a.size()) != s)
        throw InvalidInput("verify_minimality: tuple length != s");
    std::vector<RatVec> duals = dual_cycles(g);

    // Classes are additive; precompute [E*_v] once.
    std::vector<Int> cls(s);
    for (int v = 0; v < s; ++v) cls[v] = class_of(g, duals[v]);

    RatVec target = RatVec::Zero(s);
    Int sum_a(0);
    for (int v = 0; v < s; ++v) {
        target += Rat(tup.a[v]) * duals[v];
        sum_a += tup.a[v];
    }
    Int target_class(0);
    for (int v = 0; v < s; ++v) target_class += tup.a[v] * cls[v];
    target_class %= t.n;
    if (target_class != tup.h % t.n)
        throw InvalidInput("verify_minimality: tuple class mismatch");

    Int budget = sum_a + t.n;
    std::vector<Int> b(s, Int(0));
    RatVec cand = RatVec::Zero(s);
    bool ok = true;

    // A candidate violates minimality iff it lies in the class and fails
    // target <= cand in some coordinate.
    auto dominated = [&]() {
        for (int w = 0; w < s; ++w) {
            if (cand(w) < target(w)) return false;
        }
        return true;
    };

    // Depth-first over all b with sum b <= budget. Dual-cycle coefficients
    // are strictly positive, so once cand dominates the target the whole
    // subtree does too and can be skipped.
    auto rec = [&](auto&& self, int v, const Int& used, const Int& cls_acc) -> void {
        if (!ok || dominated()) return;
        if (v == s) {
            if (cls_acc % t.n == target_class) ok = false;
            return;
        }
        for (Int c = 0; used + c <= budget; ++c) {
            b[v] = c;
            if (c > 0) cand += duals[v];
            self(self, v + 1, used + c, cls_acc + c * cls[v]);
            if (!ok) break;
            if (dominated()) break;
        }
        // Roll back this coordinate's contribution.
        cand -= Rat(b[v]) * duals[v];
        b[v] = 0;
    };
    rec(rec, 0, Int(0), Int(0));
    return ok;
}

}  // namespace cqs
