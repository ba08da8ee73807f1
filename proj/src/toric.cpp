#include "cqs/toric.hpp"

#include "cqs/errors.hpp"

namespace cqs {

namespace {

std::vector<LatticePoint> recurse_chain(LatticePoint first, LatticePoint second,
                                        const std::vector<Int>& coeffs,
                                        const LatticePoint& expected_last) {
    std::vector<LatticePoint> out{std::move(first), std::move(second)};
    for (const Int& c : coeffs) {
        const LatticePoint& prev = out[out.size() - 2];
        const LatticePoint& cur = out.back();
        out.push_back(LatticePoint{c * cur.x - prev.x, c * cur.y - prev.y});
    }
    if (!(out.back() == expected_last))
        throw VerificationFailure("boundary points: recursion missed the ray anchor");
    return out;
}

}  // namespace

std::vector<LatticePoint> boundary_points_dual_cone(const CyclicType& t) {
    HJExpansion dual = hj_expand(CyclicType(t.n, t.n - t.q));
    return recurse_chain({Int(1), Int(0)}, {Int(1), Int(1)}, dual.entries,
                         {t.q, t.n});
}

std::vector<LatticePoint> boundary_points_cone(const CyclicType& t) {
    HJExpansion e = hj_expand(t);
    return recurse_chain({Int(0), Int(1)}, {Int(1), Int(0)}, e.entries,
                         {t.n, -t.q});
}

Int multiplicity_by_pairing(const CyclicType& t, int j, int v) {
    std::vector<LatticePoint> p = boundary_points_dual_cone(t);
    std::vector<LatticePoint> e = boundary_points_cone(t);
    if (j < 0 || j >= static_cast<int>(p.size()))
        throw InvalidInput("multiplicity_by_pairing: j out of range");
    if (v < 0 || v >= static_cast<int>(e.size()))
        throw InvalidInput("multiplicity_by_pairing: v out of range");
    return p[j].x * e[v].x + p[j].y * e[v].y;
}

}  // namespace cqs
