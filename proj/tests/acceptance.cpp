#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "wprm/verify.hpp"

using namespace wprm;

namespace {

// one pass/fail line per criterion
struct Criterion {
    std::string name;
    bool ok = true;
    std::ostringstream log;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "  failed: " << what << "\n";
        }
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%-14s %s  (%lld ms)\n", name.c_str(), ok ? "PASS" : "FAIL",
                    (long long)ms);
        if (!ok) std::fputs(log.str().c_str(), stdout);
        std::fflush(stdout);
    }
};

std::string vec_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

LinearCode random_code(const Field& F, size_t n, size_t k, std::mt19937& rng) {
    Mat rows(F, k, n);
    std::uniform_int_distribution<int> dist(0, F.q() - 1);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) rows.at(i, j) = fe(dist(rng));
    return LinearCode::from_rows(std::move(rows));
}

}  // namespace

TEST_CASE("criterion 1: point counts and orbit partitions") {
    Criterion C("criterion 1");
    // enumeration itself certifies the partition: every nonzero vector is
    // visited exactly once across orbits, each of size exactly q-1
    for (int q : {2, 3, 4, 5}) {
        const Field& F = Field::of_order(q);
        for (int m = 0; m <= 3; ++m) {
            std::vector<int> w(m + 1, 1);
            while (true) {
                WeightVector wv(w);
                try {
                    RepresentativeSet R = enumerate_points(F, wv);
                    C.require((long long)R.size() == count_points(q, m),
                              "count mismatch at q=" + std::to_string(q));
                } catch (const std::exception& e) {
                    C.require(false, std::string("enumeration error: ") + e.what());
                }
                int i = 0;
                while (i <= m && ++w[i] > 7) w[i++] = 1;
                if (i > m) break;
            }
        }
    }
    CHECK(C.ok);
}

TEST_CASE("criterion 2: Table 1 reproduction") {
    Criterion C("criterion 2");
    const Field& F3 = Field::of_order(3);
    AffineGrid grid = AffineGrid::lex(F3, 2);

    auto wrm3 = build_wrm_congruence(F3, 3, WeightVector{1, 1}, 3, grid);
    C.require(wrm3.n() == 9 && wrm3.dim() == 5, "WRM_3(3;(1,1)) is not [9,5]");
    C.require(wrm3.hierarchy() == std::vector<long long>{2, 4, 6, 8, 9},
              "WRM_3(3;(1,1)) hierarchy");

    auto wrm0 = build_wrm_congruence(F3, 3, WeightVector{1, 1}, 0, grid);
    C.require(wrm0.n() == 9 && wrm0.dim() == 1, "WRM_0(3;(1,1)) is not [9,1]");
    C.require(wrm0.hierarchy() == std::vector<long long>{9}, "WRM_0(3;(1,1)) hierarchy");

    auto prs3 = build_wprm(F3, WeightVector{1, 1}, 3);
    C.require(prs3.code.n() == 4 && prs3.code.dim() == 4, "PRS_3 is not [4,4]");
    C.require(prs3.code.hierarchy() == std::vector<long long>{1, 2, 3, 4}, "PRS_3 hierarchy");
    CHECK(C.ok);
}

TEST_CASE("criterion 3: GHW bounds for WPRM_d(3,1,1) over GF(3)") {
    Criterion C("criterion 3");
    const Field& F3 = Field::of_order(3);
    WeightVector w{3, 1, 1};

    auto exact3 = build_wprm(F3, w, 3).code.hierarchy();
    C.require(exact3 == std::vector<long long>{3, 6, 9, 12, 13},
              "exact hierarchy d=3: " + vec_str(exact3));
    auto lower3 = lower_bound_hierarchy(F3, w, 3);
    C.require(lower3 == exact3, "lower bound d=3 not sharp: " + vec_str(lower3));
    C.require(upper_bound_components(F3, w, 3, 3) == 9, "component upper bound at r=3");

    auto exact6 = build_wprm(F3, w, 6).code.hierarchy();
    C.require(exact6 == std::vector<long long>{2, 3, 5, 6, 8, 9, 11, 12, 13},
              "exact hierarchy d=6: " + vec_str(exact6));
    auto lower6 = lower_bound_hierarchy(F3, w, 6);
    C.require(lower6 == exact6, "lower bound d=6 not sharp: " + vec_str(lower6));

    auto raw = lower_bound_hierarchy(F3, WeightVector{3, 2, 2}, 12);
    C.require(raw == std::vector<long long>{1, 2, 3, 4, 6, 8, 10, 12, 13},
              "Delorme-form (3,2,2) d=12 bound: " + vec_str(raw));
    C.require(transform_delorme(F3, WeightVector{3, 2, 2}, 12).equal,
              "WPRM_12(3,2,2) = WPRM_6(3,1,1)");
    CHECK(C.ok);
}

TEST_CASE("criterion 4: GHW bounds for (2,3,5)") {
    Criterion C("criterion 4");
    const Field& F4 = Field::of_order(4);
    WeightVector w{2, 3, 5};

    WprmCode C30 = build_wprm(F4, w, 30);
    auto exact = C30.code.hierarchy();
    std::vector<long long> expect{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 19, 20, 21};
    C.require(exact == expect, "q=4 exact hierarchy: " + vec_str(exact));
    auto bound = lower_bound_hierarchy(F4, w, 30);
    C.require(bound == expect, "q=4 bound: " + vec_str(bound));

    const Field& F3 = Field::of_order(3);
    WprmCode C20 = build_wprm(F3, w, 20);
    C.require(C20.code.support().size() == 12, "support size of WPRM_20(2,3,5)");
    auto rep = best_over_orderings(F3, w, 20);
    C.require(rep.traces.size() == 2, "two admissible ordering classes");
    bool found325 = false, found523 = false;
    for (const auto& t : rep.traces) {
        if (t.ordering == WeightVector{3, 2, 5})
            found325 = t.values == std::vector<long long>{2, 3, 4, 5, 6, 8, 9, 10, 12};
        if (t.ordering == WeightVector{5, 2, 3})
            found523 = t.values == std::vector<long long>{1, 2, 3, 5, 6, 7, 9, 11, 12};
    }
    C.require(found325, "ordering (3,2,5) values");
    C.require(found523, "ordering (5,2,3) values");
    C.require(rep.maxima == std::vector<long long>{2, 3, 4, 5, 6, 8, 9, 11, 12},
              "maxima: " + vec_str(rep.maxima));
    C.require(C20.code.hierarchy() == rep.maxima, "maxima equal the exact hierarchy");
    CHECK(C.ok);
}

namespace {

// shared sweep for criteria 5 and 6: q in {3,4}, m <= 3, entries <= 6,
// gcd(w_0, q-1) = 1, 1 <= d <= 2 lcm(w); coordinate-permuted tails dedup
template <typename Fn>
void recursion_sweep(Fn&& fn) {
    for (int q : {3, 4}) {
        const Field& F = Field::of_order(q);
        for (int m = 1; m <= 3; ++m) {
            std::set<std::vector<int>> seen;
            std::vector<int> w(m + 1, 1);
            while (true) {
                if (std::gcd(w[0], q - 1) == 1) {
                    std::vector<int> key = w;
                    std::sort(key.begin() + 1, key.end());
                    if (seen.insert(key).second) {
                        WeightVector wv(key);
                        for (long long d = 1; d <= 2 * wv.lcm(); ++d) fn(F, wv, d);
                    }
                }
                int i = 0;
                while (i <= m && ++w[i] > 6) w[i++] = 1;
                if (i > m) break;
            }
        }
    }
}

}  // namespace

TEST_CASE("criterion 5: recursive construction sweep") {
    Criterion C("criterion 5");
    long long n = 0;
    recursion_sweep([&](const Field& F, const WeightVector& w, long long d) {
        auto D = recursive_decomposition(F, w, d);
        ++n;
        if (!D.ok())
            C.require(false, "q=" + std::to_string(F.q()) + " d=" + std::to_string(d) +
                                 " report=" + D.to_json().dump());
    });
    C.require(n > 10000, "sweep size");
    CHECK(C.ok);
}

TEST_CASE("criterion 6: dual recursion sweep") {
    Criterion C("criterion 6");
    long long n = 0;
    recursion_sweep([&](const Field& F, const WeightVector& w, long long d) {
        auto D = dual_recursive(F, w, d);
        ++n;
        if (!D.ok())
            C.require(false, "q=" + std::to_string(F.q()) + " d=" + std::to_string(d) +
                                 " report=" + D.to_json().dump());
    });
    C.require(n > 10000, "sweep size");
    CHECK(C.ok);
}

TEST_CASE("criterion 7: subfield subcode recursion") {
    Criterion C("criterion 7");
    const Field& F4 = Field::of_order(4);
    const Field& F2 = Field::of_order(2);
    for (auto wv : {std::vector<int>{1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 1, 2}, {1, 1, 3},
                    {1, 2, 3}, {2, 1, 3}}) {
        WeightVector w(wv);
        long long base = 3 * w.lcm();
        for (long long ell = 1; ell <= 2; ++ell) {
            auto S = ssc_recursive(F4, F2, w, ell * base);
            if (!S.ok()) C.require(false, "(4,2) d=" + std::to_string(ell * base) +
                                              " " + S.to_json().dump());
        }
    }
    const Field& F9 = Field::of_order(9);
    const Field& F3 = Field::of_order(3);
    for (auto wv : {std::vector<int>{1, 1}, {1, 2}, {3, 1, 2}, {1, 1, 2}}) {
        WeightVector w(wv);
        long long base = 4 * w.lcm();
        for (long long ell = 1; ell <= 2; ++ell) {
            auto S = ssc_recursive(F9, F3, w, ell * base);
            if (!S.ok()) C.require(false, "(9,3) d=" + std::to_string(ell * base) +
                                              " " + S.to_json().dump());
        }
    }
    CHECK(C.ok);
}

TEST_CASE("criterion 8: WPRS closed forms") {
    Criterion C("criterion 8");
    for (int q : {3, 4, 5}) {
        const Field& F = Field::of_order(q);
        for (int w0 = 1; w0 <= 7; ++w0)
            for (int w1 = 1; w1 <= 7; ++w1) {
                if (std::gcd(w0, w1) != 1) continue;
                for (long long d = 1; d <= 3ll * w0 * w1; ++d) {
                    auto r = wprs_check(F, w0, w1, d);
                    if (!r.ok())
                        C.require(false, "primal q=" + std::to_string(q) + " (" +
                                             std::to_string(w0) + "," + std::to_string(w1) +
                                             ") d=" + std::to_string(d) + " " +
                                             r.to_json().dump());
                    auto rd = wprs_dual_structure(F, w0, w1, d);
                    if (!rd.ok())
                        C.require(false, "dual q=" + std::to_string(q) + " (" +
                                             std::to_string(w0) + "," + std::to_string(w1) +
                                             ") d=" + std::to_string(d) + " " +
                                             rd.to_json().dump());
                }
            }
    }
    CHECK(C.ok);
}

TEST_CASE("criterion 9: monomial duals at q=5, w=(2,5,7)") {
    Criterion C("criterion 9");
    const Field& F5 = Field::of_order(5);
    WeightVector w{2, 5, 7};

    for (auto [d, dstar] : std::vector<std::pair<long long, long long>>{
             {2, 350}, {4, 420}, {6, 210}, {10, 350}, {12, 420}, {14, 210}}) {
        C.require(check_dstar(F5, w, d, dstar).ok(), "pair (" + std::to_string(d) + "," +
                                                         std::to_string(dstar) + ") invalid");
        auto desc = dual_monomial_description(F5, w, d, dstar);
        C.require(desc.B.members.size() == 1, "|B| != 1 at d=" + std::to_string(d));
        C.require(desc.complete && desc.divisibility_ok,
                  "dual not monomial at d=" + std::to_string(d));
    }

    // printed forms from the source computation, at shifted intermediate
    // degrees; equality is asserted classwise (same support and residues)
    std::vector<Expo> printed{{260, 4, 4}, {8, 84, 20}};
    for (long long d : {8ll, 16ll}) {
        C.require(check_dstar(F5, w, d, 280).ok(), "pair (" + std::to_string(d) + ",280)");
        auto desc = dual_monomial_description(F5, w, d, 280);
        C.require(desc.B.members.size() == 2, "|B| != 2 at d=" + std::to_string(d));
        for (const auto& p : printed) {
            bool matched = false;
            for (const auto& c : desc.B.members)
                matched |= class_key(c, 5) == class_key(p, 5);
            C.require(matched, "printed bad monomial not matched at d=" + std::to_string(d));
        }
        C.require(!desc.complete && desc.residual_dim == 1,
                  "residual dimension at d=" + std::to_string(d));

        RepresentativeSet R = enumerate_points(F5, w);
        std::vector<fe> v1(R.size()), v2(R.size()), bin(R.size());
        eval_monomial_row(F5, Expo{116, 4, 4}, R.pts, v1.data());
        eval_monomial_row(F5, Expo{0, 28, 20}, R.pts, v2.data());
        for (size_t i = 0; i < R.size(); ++i) bin[i] = F5.sub(v1[i], v2[i]);
        C.require(desc.dual.contains(bin), "binomial not in the dual at d=" + std::to_string(d));
        C.require(!desc.monomial_span.contains(bin),
                  "binomial inside the monomial span at d=" + std::to_string(d));
    }
    CHECK(C.ok);
}

TEST_CASE("criterion 10: hull dimensions on standard representatives") {
    Criterion C("criterion 10");
    int applicable = 0;
    for (int q : {7, 8, 9, 11, 13}) {
        const Field& F = Field::of_order(q);
        for (auto wv : {std::vector<int>{1, 1}, {1, 2}, {1, 3}, {1, 1, 2}, {1, 1, 3},
                        {1, 2, 3}, {1, 1, 4}, {1, 2, 5}}) {
            WeightVector w(wv);
            for (long long d = 1; d <= q && applicable < 30; ++d) {
                HullReport r = hull_check(F, w, d);
                if (!r.applicable) continue;
                ++applicable;
                if (!r.ok())
                    C.require(false, "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                                         " " + r.to_json().dump());
            }
        }
    }
    C.require(applicable >= 30, "only " + std::to_string(applicable) + " applicable instances");
    // the named example pair
    const Field& F7 = Field::of_order(7);
    auto r2 = hull_check(F7, WeightVector{1, 1, 2}, 2);
    C.require(r2.applicable && r2.predicted == 3 && r2.ok(), "q=7 (1,1,2) d=2");
    auto r1 = hull_check(F7, WeightVector{1, 1, 2}, 1);
    C.require(r1.applicable && !r1.wm_divides && r1.ok(), "q=7 (1,1,2) d=1");
    CHECK(C.ok);
}

TEST_CASE("criterion 11: Schur products and lattice points") {
    Criterion C("criterion 11");
    auto small = idp_pair_check(1, 1, WeightVector{1, 1, 2});
    C.require(!small.holds && small.witnesses == std::vector<Expo>{{0, 0, 1}},
              "(1,1,2) witness");
    auto ogata = idp_pair_check(30, 30, WeightVector{1, 6, 10, 15});
    C.require(!ogata.holds && ogata.witnesses == std::vector<Expo>{{1, 4, 2, 1}},
              "(1,6,10,15) witness unique");

    const Field& F67 = Field::of_order(67);
    WeightVector w{1, 6, 10, 15};
    auto reps = std::make_shared<const RepresentativeSet>(enumerate_points(F67, w));
    WprmCode C60 = build_wprm(F67, w, 60, Layout::canonical, reps);
    C.require(C60.code.dim() == 81, "dim WPRM_60 = " + std::to_string(C60.code.dim()));
    WprmCode C30 = build_wprm(F67, w, 30, Layout::canonical, reps);
    LinearCode square = C30.code.schur(C30.code);
    C.require(square.dim() == 80, "Schur square dim = " + std::to_string(square.dim()));
    C.require(square.subcode_of(C60.code), "square inside WPRM_60");

    std::vector<fe> wit(reps->size());
    eval_monomial_row(F67, Expo{1, 4, 2, 1}, reps->pts, wit.data());
    C.require(C60.code.contains(wit), "witness evaluation in WPRM_60");
    C.require(!square.contains(wit), "witness outside the square");
    Mat ext(F67, 0, reps->size());
    for (size_t i = 0; i < square.dim(); ++i) ext.append_row(square.gen().row_span(i));
    ext.append_row(wit);
    C.require(rank_of(std::move(ext)) == 81, "witness spans the missing direction");
    CHECK(C.ok);
}

TEST_CASE("criterion 12: PRM duals") {
    Criterion C("criterion 12");
    for (int q : {2, 3, 4}) {
        const Field& F = Field::of_order(q);
        for (long long d = 1; d <= 2 * (q - 1); ++d) {
            auto rep = prm_dual_structure(F, 2, d);
            if (!rep.equal)
                C.require(false, "q=" + std::to_string(q) + " d=" + std::to_string(d));
        }
    }
    CHECK(C.ok);
}

TEST_CASE("criterion 13: property suites") {
    Criterion C("criterion 13");
    std::mt19937 rng(0);

    // Wei duality and strict monotonicity on the seeded corpus
    for (int q : {2, 3, 4}) {
        const Field& F = Field::of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            auto code = random_code(F, 10, 5, rng);
            if (code.dim() == 0 || code.dim() == 10) continue;
            auto h = code.hierarchy();
            for (size_t r = 1; r < h.size(); ++r)
                C.require(h[r] > h[r - 1], "monotonicity");
            auto hd = code.dual().hierarchy();
            std::set<long long> all(h.begin(), h.end());
            for (long long v : hd) all.insert(11 - v);
            C.require(all.size() == 10, "Wei duality");
        }
    }

    // power-sum identity, exhaustive
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field& F = Field::of_order(q);
        for (long long gamma = 0; gamma <= 3 * (q - 1); ++gamma) {
            fe direct = 0;
            for (int z = 0; z < q; ++z) direct = F.add(direct, F.pow(fe(z), gamma));
            C.require(F.power_sum(gamma) == direct, "power sum at q=" + std::to_string(q));
        }
    }

    // affine reduction preserves evaluations on the grid, exhaustive
    for (int q : {2, 3, 4, 5}) {
        const Field& F = Field::of_order(q);
        for (long long a = 0; a <= 3 * (q - 1); ++a)
            for (long long b = 0; b <= 2 * (q - 1); ++b) {
                Expo e{a, b};
                Expo r = affine_reduce(e, q);
                for (int x = 0; x < q && C.ok; ++x)
                    for (int y = 0; y < q; ++y) {
                        Point P{fe(x), fe(y)};
                        C.require(eval_monomial(F, e, P) == eval_monomial(F, r, P),
                                  "affine reduction evaluation");
                    }
            }
    }

    // reduced-monomial rank guard over a grid (throws on violation)
    for (int q : {3, 4, 5}) {
        const Field& F = Field::of_order(q);
        for (auto wv : {std::vector<int>{1, 1}, {2, 3}, {3, 1, 1}, {1, 2, 3}, {2, 5, 7}}) {
            WeightVector w(wv);
            for (long long d = 0; d <= 2 * w.lcm(); ++d) {
                try {
                    reduced_monomials(F, d, w);
                } catch (const std::exception& e) {
                    C.require(false, std::string("rank guard: ") + e.what());
                }
            }
        }
    }
    CHECK(C.ok);
}
