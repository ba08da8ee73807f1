#include "cqs/cf.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace cqs {

CyclicType::CyclicType(Int n_, Int q_) : n(std::move(n_)), q(std::move(q_)) {
    if (!(q > 0 && q < n)) throw InvalidInput("CyclicType: need 0 < q < n");
    if (gcd(n, q) != 1) throw InvalidInput("CyclicType: gcd(n,q) must be 1");
}

HJExpansion::HJExpansion(std::vector<Int> e) : entries(std::move(e)) {
    if (entries.empty()) throw InvalidInput("HJExpansion: empty entry list");
    for (const Int& k : entries) {
        if (k < 2) throw InvalidInput("HJExpansion: every entry must be >= 2");
    }
}

HJExpansion hj_expand(const CyclicType& t) {
    // Ceiling recursion: k = ceil(n/q), (n,q) <- (q, k*q - n).
    std::vector<Int> out;
    Int n = t.n, q = t.q;
    while (q > 0) {
        Int k = (n + q - 1) / q;
        out.push_back(k);
        Int r = k * q - n;
        n = q;
        q = r;
    }
    return HJExpansion(std::move(out));
}

CyclicType hj_evaluate(const HJExpansion& e) {
    // Fold from the right: value k - q/n accumulated as a fraction n'/q'.
    Int n = e.entries.back(), q = 1;
    for (auto it = e.entries.rbegin() + 1; it != e.entries.rend(); ++it) {
        Int n2 = *it * n - q;
        q = n;
        n = n2;
    }
    return CyclicType(n, q);
}

Int mod_inverse(const CyclicType& t) {
    // Extended Euclid on (q, n).
    Int r0 = t.q, r1 = t.n, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int d = r0 / r1;
        Int r2 = r0 - d * r1;
        Int s2 = s0 - d * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    Int inv = s0 % t.n;
    if (inv < 0) inv += t.n;
    if (inv == 0) throw VerificationFailure("mod_inverse: q not invertible");
    return inv;
}

}  // namespace cqs
