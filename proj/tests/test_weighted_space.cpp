#include <doctest.h>

#include <set>

#include "wprm/points.hpp"

using namespace wprm;

TEST_CASE("point counts") {
    CHECK(count_points(3, 2) == 13);
    CHECK(count_points(5, 2) == 31);
    CHECK(count_points(4, 2) == 21);
    CHECK(count_points(2, 0) == 1);
}

TEST_CASE("orbits in P(2,3) over GF(3)") {
    const Field& F = Field::of_order(3);
    WeightVector w{2, 3};
    auto to_set = [](const std::vector<Point>& v) { return std::set<Point>(v.begin(), v.end()); };

    CHECK(to_set(orbit(F, w, Point{1, 0})) == std::set<Point>{{1, 0}, {2, 0}});
    // [1:1] and [1:-1] are the same point
    CHECK(to_set(orbit(F, w, Point{1, 1})) == std::set<Point>{{1, 1}, {1, 2}});
    CHECK(to_set(orbit(F, w, Point{0, 1})) == std::set<Point>{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(orbit(F, w, Point{0, 0}), std::domain_error);
}

TEST_CASE("canonical enumeration of P(2,3) over GF(3)") {
    const Field& F = Field::of_order(3);
    RepresentativeSet R = enumerate_points(F, WeightVector{2, 3});
    REQUIRE(R.size() == 4);
    // lexicographically smallest representative per orbit, ascending
    CHECK(Point(R.point(0).begin(), R.point(0).end()) == Point{0, 1});
    CHECK(Point(R.point(1).begin(), R.point(1).end()) == Point{1, 0});
    CHECK(Point(R.point(2).begin(), R.point(2).end()) == Point{1, 1});
    CHECK(Point(R.point(3).begin(), R.point(3).end()) == Point{2, 1});
}

TEST_CASE("orbit partition property over a small sweep") {
    for (int q : {2, 3, 4, 5, 7, 9}) {
        const Field& F = Field::of_order(q);
        for (std::vector<int> wv :
             {std::vector<int>{1, 1}, {2, 3}, {6, 7}, {3, 1, 1}, {2, 3, 5}, {1, 2, 3},
              {2, 2, 4}, {7, 5, 3}, {1, 2, 3, 6}, {4, 6, 2, 7}}) {
            WeightVector w(wv);
            RepresentativeSet R = enumerate_points(F, w);
            CHECK((long long)R.size() == count_points(q, w.m()));
            // every representative set covers the punctured affine space by orbits
            std::set<Point> all;
            for (size_t i = 0; i < R.size(); ++i) {
                auto o = orbit(F, w, R.point(i));
                CHECK((int)o.size() == q - 1);
                for (auto& rep : o) all.insert(rep);
            }
            long long expected = 1;
            for (int j = 0; j <= w.m(); ++j) expected *= q;
            CHECK((long long)all.size() == expected - 1);
        }
    }
}

TEST_CASE("large-space shortcut matches direct bucketing") {
    const Field& F = Field::of_order(5);
    WeightVector w{1, 2, 3};
    RepresentativeSet direct = enumerate_points(F, w);
    CHECK((long long)direct.size() == count_points(5, 2));
    // spot check: the lex-first point is (0,0,1)
    CHECK(Point(direct.point(0).begin(), direct.point(0).end()) == Point{0, 0, 1});
}

TEST_CASE("structured representatives") {
    const Field& F = Field::of_order(3);

    SUBCASE("blocks of P(3,1,1)") {
        RepresentativeSet R = structured_representatives(F, WeightVector{3, 1, 1});
        REQUIRE(R.size() == 13);
        REQUIRE(R.blocks.size() == 4);
        CHECK(R.blocks[0].size == 4);
        CHECK(R.blocks[1].size == 4);
        CHECK(R.blocks[2].size == 1);
        CHECK(R.blocks[2].kind == "origin");
        CHECK(R.blocks[3].size == 4);
        CHECK(R.blocks[3].kind == "infinity");
        // all points are in distinct orbits
        std::set<Point> keys;
        for (size_t i = 0; i < R.size(); ++i)
            keys.insert(orbit_canonical(F, R.w, R.point(i)));
        CHECK(keys.size() == 13);
    }

    SUBCASE("w_0 = 1 always qualifies") {
        RepresentativeSet R = structured_representatives(F, WeightVector{1, 2, 3});
        CHECK(R.size() == 13);
    }

    SUBCASE("gcd obstruction") {
        CHECK_THROWS_AS(structured_representatives(F, WeightVector{2, 3}), structure_error);
    }
}

TEST_CASE("standard representatives") {
    const Field& F = Field::of_order(7);
    RepresentativeSet R = enumerate_points(F, WeightVector{1, 1, 2}, Layout::standard);
    REQUIRE((long long)R.size() == count_points(7, 2));
    for (size_t i = 0; i < R.size(); ++i) {
        auto P = R.point(i);
        size_t lead = 0;
        while (P[lead] == 0) ++lead;
        CHECK(P[lead] == 1);
    }
}

TEST_CASE("gcd reduction") {
    auto r = gcd_reduce(WeightVector{2, 4, 6}, 8);
    CHECK(!r.zero);
    CHECK(r.w == WeightVector{1, 2, 3});
    CHECK(r.d == 4);
    CHECK(gcd_reduce(WeightVector{2, 4, 6}, 7).zero);
    auto id = gcd_reduce(WeightVector{1, 2, 3}, 5);
    CHECK(!id.zero);
    CHECK(id.w == WeightVector{1, 2, 3});
    CHECK(id.d == 5);
}

TEST_CASE("Delorme reduction") {
    // w_0 = 2, tail (3, 6): gamma = 3, d = 6 = 0*2 + 2*3
    auto r = delorme_reduce(WeightVector{2, 3, 6}, 6);
    CHECK(r.gamma == 3);
    CHECK(r.alpha0 == 0);
    CHECK(r.d0 == 2);
    CHECK(r.reduced == WeightVector{2, 1, 2});

    auto r8 = delorme_reduce(WeightVector{2, 3, 6}, 8);
    CHECK(r8.alpha0 == 1);
    CHECK(r8.d0 == 2);

    auto triv = delorme_reduce(WeightVector{3, 1, 1}, 6);
    CHECK(triv.gamma == 1);
    CHECK(triv.alpha0 == 0);
    CHECK(triv.d0 == 6);

    CHECK_THROWS_AS(delorme_reduce(WeightVector{2, 4, 6}, 5), precondition_error);
}

TEST_CASE("Delorme point map is a bijection on rational points") {
    const Field& F = Field::of_order(3);
    WeightVector w{2, 3, 6};
    auto red = delorme_reduce(w, 6);
    RepresentativeSet R = enumerate_points(F, w);
    std::set<Point> images;
    for (size_t i = 0; i < R.size(); ++i)
        images.insert(orbit_canonical(F, red.reduced, delorme_map(F, red, R.point(i))));
    CHECK(images.size() == R.size());
}

TEST_CASE("radical scalar algebra") {
    const Field& F = Field::of_order(5);
    // lambda^3 = xi: lambda^2 * lambda^2 = xi * lambda
    RadicalScalar x{3, 2, 1};
    auto y = rs_mul(F, x, x);
    CHECK(y.r == 1);
    CHECK(y.a == F.xi());
    CHECK(!y.in_base_field());
    // associativity over a small sweep
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = 0; r2 < 3; ++r2)
            for (int r3 = 0; r3 < 3; ++r3) {
                RadicalScalar a{3, r1, 2}, b{3, r2, 3}, c{3, r3, 4};
                auto lhs = rs_mul(F, rs_mul(F, a, b), c);
                auto rhs = rs_mul(F, a, rs_mul(F, b, c));
                CHECK(lhs.r == rhs.r);
                CHECK(lhs.a == rhs.a);
            }
    // plain field multiplication when both residues vanish
    RadicalScalar p{4, 0, 2}, s{4, 0, 3};
    auto t = rs_mul(F, p, s);
    CHECK(t.r == 0);
    CHECK(t.a == F.mul(2, 3));
}

TEST_CASE("representative set serialization") {
    const Field& F = Field::of_order(3);
    RepresentativeSet R = enumerate_points(F, WeightVector{2, 3});
    auto j = R.to_json();
    CHECK(j["q"] == 3);
    CHECK(j["layout"] == "canonical");
    CHECK(j["points"].size() == 4);
}
