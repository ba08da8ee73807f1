#include "cqs/resolution.hpp"

#include "cqs/errors.hpp"
#include "cqs/linalg.hpp"

namespace cqs {

ResolutionGraph build_graph(const CyclicType& t) {
    HJExpansion e = hj_expand(t);
    const int s = e.length();
    std::vector<int> val(s, 2);
    if (s == 1) {
        val[0] = 0;
    } else {
        val.front() = val.back() = 1;
    }
    ResolutionGraph g{t, std::move(e.entries), std::move(val)};

    // det(-I) = n is the discriminant-group order; a mismatch is a bug.
    // Chain determinant recursion det_v = k_v det_{v-1} - det_{v-2}.
    Rat d0(1), d1(g.k[0]);
    for (int v = 1; v < s; ++v) {
        Rat d2 = Rat(g.k[v]) * d1 - d0;
        d0 = d1;
        d1 = d2;
    }
    if (d1 != Rat(t.n)) throw VerificationFailure("build_graph: det(-I) != n");
    return g;
}

RatMat intersection_matrix(const ResolutionGraph& g) {
    const int s = g.s();
    RatMat m = RatMat::Zero(s, s);
    for (int v = 0; v < s; ++v) {
        m(v, v) = -Rat(g.k[v]);
        if (v + 1 < s) {
            m(v, v + 1) = 1;
            m(v + 1, v) = 1;
        }
    }
    return m;
}

std::vector<RatVec> dual_cycles(const ResolutionGraph& g) {
    const int s = g.s();
    RatMat negI = -intersection_matrix(g);
    RatMat inv = exact_inverse(negI);
    RatMat I = intersection_matrix(g);
    std::vector<RatVec> out;
    out.reserve(s);
    for (int v = 0; v < s; ++v) {
        RatVec ev = inv.col(v);
        RatVec pairing = I * ev;
        for (int w = 0; w < s; ++w) {
            Rat expect = (w == v) ? Rat(-1) : Rat(0);
            if (pairing(w) != expect)
                throw VerificationFailure("dual_cycles: (E*_v, E_w) != -delta_vw");
        }
        out.push_back(std::move(ev));
    }
    return out;
}

IntVec fundamental_cycle(const ResolutionGraph& g) {
    const int s = g.s();
    RatMat I = intersection_matrix(g);
    RatVec z = RatVec::Zero(s);
    z(0) = 1;
    for (;;) {
        RatVec pairing = I * z;
        int w = -1;
        for (int v = 0; v < s; ++v) {
            if (pairing(v) > 0) {
                w = v;
                break;
            }
        }
        if (w < 0) break;
        z(w) += 1;
    }
    IntVec out(s);
    for (int v = 0; v < s; ++v) {
        if (z(v) != 1) throw VerificationFailure("fundamental_cycle: Laufer result != E");
        out(v) = 1;
    }
    return out;
}

std::pair<Int, Int> mult_and_embdim(const ResolutionGraph& g) {
    Int sum(0);
    for (const Int& k : g.k) sum += k;
    Int mult = sum - 2 * (Int(g.s()) - 1);
    return {mult, mult + 1};
}

namespace {

bool is_integral(const RatVec& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (denominator(x(i)) != 1) return false;
    }
    return true;
}

}  // namespace

Int class_of(const ResolutionGraph& g, const RatVec& cycle) {
    if (cycle.size() != g.s()) throw InvalidInput("class_of: cycle length != s");
    RatMat I = intersection_matrix(g);
    if (!is_integral(I * cycle)) throw InvalidInput("class_of: cycle not in L'");
    RatVec es = dual_cycles(g).back();
    RatVec x = cycle;
    for (Int a = 0; a < g.type.n; ++a) {
        if (is_integral(x)) return a;
        x -= es;
    }
    throw VerificationFailure("class_of: no representative found in [0,n)");
}

Int class_of_combination(const ResolutionGraph& g, const std::vector<Int>& a) {
    if (static_cast<int>(a.size()) != g.s())
        throw InvalidInput("class_of_combination: coefficient length != s");
    std::vector<RatVec> duals = dual_cycles(g);
    RatVec x = RatVec::Zero(g.s());
    for (int v = 0; v < g.s(); ++v) x += Rat(a[v]) * duals[v];
    return class_of(g, x);
}

}  // namespace cqs
