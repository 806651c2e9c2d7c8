#include <doctest.h>

#include <set>

#include "wprm/lattice.hpp"

using namespace wprm;

TEST_CASE("sumsets") {
    WeightVector w{1, 1, 2};
    auto A = SimplexLatticeSet::of(1, w);
    auto s = sumset(A, A);
    std::set<Expo> got(s.begin(), s.end());
    CHECK(got == std::set<Expo>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});

    auto Z = SimplexLatticeSet::of(0, w);
    auto sz = sumset(Z, Z);
    REQUIRE(sz.size() == 1);
    CHECK(sz[0] == Expo{0, 0, 0});

    // one-dimensional simplices fill the target degree
    WeightVector w11{1, 1};
    auto B = SimplexLatticeSet::of(1, w11);
    CHECK(sumset(B, B).size() == monomials_of_degree(2, w11).size());

    // members always live in the target degree
    for (const auto& e : s) CHECK(wdeg(e, w) == 2);
}

TEST_CASE("pairwise integer decomposition checks") {
    auto r = idp_pair_check(1, 1, WeightVector{1, 1, 2});
    CHECK(!r.holds);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == Expo{0, 0, 1});

    auto ogata = idp_pair_check(30, 30, WeightVector{1, 6, 10, 15});
    CHECK(!ogata.holds);
    REQUIRE(ogata.witnesses.size() == 1);
    CHECK(ogata.witnesses[0] == Expo{1, 4, 2, 1});

    CHECK(idp_pair_check(2, 2, WeightVector{1, 1}).holds);

    // one-dimensional simplices: pairs of lcm multiples always decompose
    for (std::vector<int> wv : {std::vector<int>{1, 1}, {2, 3}, {4, 7}}) {
        WeightVector w(wv);
        long long l = w.lcm();
        for (long long a = 1; a <= 3; ++a)
            for (long long b = 1; b <= 3; ++b)
                CHECK(idp_pair_check(a * l, b * l, w).holds);
    }
}

TEST_CASE("bounded idp checks") {
    CHECK(idp_check(1, 5, WeightVector{1, 1}).holds);
    auto fail = idp_check(30, 2, WeightVector{1, 6, 10, 15});
    CHECK(!fail.holds);
    CHECK(fail.failed_ell == 2);
    CHECK(idp_check(2, 3, WeightVector{1, 1, 2}).holds);
    CHECK_THROWS_AS(idp_check(3, 2, WeightVector{1, 1, 2}), precondition_error);
}

TEST_CASE("schur closure predicate") {
    auto all_ones = schur_closure_predicate(WeightVector{1, 1, 1}, 7, 11);
    CHECK(all_ones.verdict == Closure::guaranteed);

    auto ogata = schur_closure_predicate(WeightVector{1, 6, 10, 15}, 30, 30);
    CHECK(ogata.verdict == Closure::unknown);

    auto ogata60 = schur_closure_predicate(WeightVector{1, 6, 10, 15}, 60, 60);
    CHECK(ogata60.verdict == Closure::guaranteed);

    auto rect = schur_closure_predicate(WeightVector{1, 1, 2}, 2, 4);
    CHECK(rect.verdict == Closure::guaranteed);

    auto off = schur_closure_predicate(WeightVector{1, 6, 10, 15}, 30, 45);
    CHECK(off.verdict == Closure::unknown);
}
