#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cqs/cf.hpp"
#include "oracles.hpp"

using namespace cqs;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("known expansions") {
    CHECK(hj_expand(CyclicType(15, 11)).entries == ints({2, 2, 3, 2, 2}));
    CHECK(hj_expand(CyclicType(15, 4)).entries == ints({4, 4}));
    CHECK(hj_expand(CyclicType(5, 4)).entries == ints({2, 2, 2, 2}));
    CHECK(hj_expand(CyclicType(5, 1)).entries == ints({5}));
    CHECK(hj_expand(CyclicType(2, 1)).entries == ints({2}));
    CHECK(hj_expand(CyclicType(7, 3)).entries == ints({3, 2, 2}));
}

TEST_CASE("round trip for all coprime (n,q), n <= 200") {
    for (int n = 2; n <= 200; ++n) {
        for (int q = 1; q < n; ++q) {
            if (gcd(Int(n), Int(q)) != 1) continue;
            CyclicType t(n, q);
            HJExpansion e = hj_expand(t);
            for (const Int& k : e.entries) CHECK(k >= 2);
            CyclicType back = hj_evaluate(e);
            CHECK(back.n == t.n);
            CHECK(back.q == t.q);
        }
    }
}

TEST_CASE("mod_inverse and the reversed expansion") {
    for (const CyclicType& t : cqs_test::all_types(60)) {
        Int qp = mod_inverse(t);
        CHECK(qp > 0);
        CHECK(qp < t.n);
        CHECK((t.q * qp) % t.n == 1);

        // n/q' is the reverse of n/q.
        std::vector<Int> rev = hj_expand(t).entries;
        std::reverse(rev.begin(), rev.end());
        CHECK(hj_expand(CyclicType(t.n, qp)).entries == rev);
    }
}

TEST_CASE("self-inverse cases") {
    CHECK(mod_inverse(CyclicType(5, 4)) == 4);
    CHECK(mod_inverse(CyclicType(15, 4)) == 4);
    CHECK(mod_inverse(CyclicType(15, 11)) == 11);
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(CyclicType(4, 2), InvalidInput);
    CHECK_THROWS_AS(CyclicType(6, 3), InvalidInput);
    CHECK_THROWS_AS(CyclicType(5, 0), InvalidInput);
    CHECK_THROWS_AS(CyclicType(5, 5), InvalidInput);
    CHECK_THROWS_AS(CyclicType(5, 7), InvalidInput);
    CHECK_THROWS_AS(CyclicType(1, 1), InvalidInput);
    CHECK_THROWS_AS(CyclicType(0, 1), InvalidInput);
    CHECK_THROWS_AS(CyclicType(-3, 1), InvalidInput);
    CHECK_THROWS_AS(HJExpansion(ints({2, 1, 2})), InvalidInput);
    CHECK_THROWS_AS(HJExpansion(ints({})), InvalidInput);
}
