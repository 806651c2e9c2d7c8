#include "wprm/points.hpp"

#include <algorithm>

namespace wprm {

long long count_points(long long q, int m) {
    long long p = 1, pow = 1;
    for (int i = 0; i < m; ++i) {
        pow *= q;
        p += pow;
    }
    return p;
}

int support_gcd(const WeightVector& w, std::span<const fe> Q) {
    long long g = 0;
    for (size_t i = 0; i < Q.size(); ++i)
        if (Q[i] != 0) g = std::gcd(g, (long long)w[int(i)]);
    return int(g);
}

LambdaInfo lambda_for(const Field& F, const WeightVector& w, std::span<const fe> Q) {
    int g = support_gcd(w, Q);
    if (g == 0) throw precondition_error("lambda of the zero vector");
    LambdaInfo L;
    L.g = g;
    if (std::gcd((long long)g, (long long)(F.q() - 1)) == 1) {
        // nu * g = 1 (mod q-1) gives the in-field choice lambda = xi^nu
        long long qm1 = F.q() - 1;
        long long nu = 1;
        while (nu <= qm1 && (nu * g) % qm1 != 1 % qm1) ++nu;
        if (nu > qm1) throw consistency_error("no modular inverse for the orbit gcd");
        L.in_field = true;
        L.nu = nu;
    }
    return L;
}

std::vector<Point> orbit(const Field& F, const WeightVector& w, std::span<const fe> Q) {
    bool nonzero = false;
    for (fe c : Q) nonzero |= (c != 0);
    if (!nonzero) throw std::domain_error("orbit of the zero vector");
    int g = support_gcd(w, Q);
    int q = F.q();
    std::vector<Point> reps;
    reps.reserve(q - 1);
    for (int i = 0; i <= q - 2; ++i) {
        Point v(Q.begin(), Q.end());
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                // lambda^{i*w_j} = xi^{i*w_j/g} stays in GF(q) on the support
                long long exp = (long long)i * (w[int(j)] / g);
                v[j] = F.mul(v[j], F.exp(exp));
            }
        reps.push_back(std::move(v));
    }
    // pairwise distinct by the order argument; cheap to verify at this scale
    auto sorted = reps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw consistency_error("orbit representatives are not distinct");
    return reps;
}

Point orbit_canonical(const Field& F, const WeightVector& w, std::span<const fe> Q) {
    auto reps = orbit(F, w, Q);
    return *std::min_element(reps.begin(), reps.end());
}

namespace {

// decode v (big-endian on coordinate 0) into an (m+1)-coordinate vector, so
// ascending v is ascending lexicographic order of encodings
void decode(long long v, int q, int n, Point& out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = fe(v % q);
        v /= q;
    }
}

constexpr long long kEnumerationLimit = 1 << 21;

RepresentativeSet enumerate_by_orbits(const Field& F, const WeightVector& w, Layout layout) {
    int q = F.q(), n = w.size();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;

    RepresentativeSet R;
    R.F = &F;
    R.w = w;
    R.layout = layout;
    R.pts = PointArray(n);

    std::vector<char> seen(total, 0);
    Point cur(n);
    for (long long v = 1; v < total; ++v) {
        if (seen[v]) continue;
        decode(v, q, n, cur);
        auto reps = orbit(F, w, cur);
        for (const auto& rep : reps) {
            long long key = 0;
            for (int i = 0; i < n; ++i) key = key * q + rep[i];
            if (key != v && seen[key]) throw consistency_error("orbits are not disjoint");
            seen[key] = 1;
        }
        if (layout == Layout::standard) {
            // unique representative with leftmost nonzero coordinate 1
            const Point* chosen = nullptr;
            for (const auto& rep : reps) {
                size_t lead = 0;
                while (rep[lead] == 0) ++lead;
                if (rep[lead] == 1) {
                    if (chosen) throw precondition_error(
                        "standard representative not unique; need gcd(w_i, q-1) = 1 for i < m");
                    chosen = &rep;
                }
            }
            if (!chosen) throw precondition_error(
                "no standard representative; need gcd(w_i, q-1) = 1 for i < m");
            R.pts.push_back(*chosen);
        } else {
            R.pts.push_back(cur);  // lexicographically smallest: v ascends
        }
    }
    return R;
}

}  // namespace

RepresentativeSet enumerate_points(const Field& F, const WeightVector& w, Layout layout) {
    if (layout == Layout::structured) return structured_representatives(F, w);
    int q = F.q(), n = w.size();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    if (layout == Layout::canonical && total > kEnumerationLimit) {
        // affine shortcut: when gcd(w_0, q-1) = 1 the canonical set is
        // {(0, z) : z canonical for the tail} followed by {1} x A^m
        if (n < 2 || std::gcd((long long)w[0], (long long)(q - 1)) != 1)
            throw budget_error("point enumeration space too large");
        RepresentativeSet tail = enumerate_points(F, w.tail(), Layout::canonical);
        RepresentativeSet R;
        R.F = &F;
        R.w = w;
        R.layout = layout;
        R.pts = PointArray(n);
        Point cur(n);
        for (size_t i = 0; i < tail.size(); ++i) {
            cur[0] = 0;
            auto z = tail.point(i);
            std::copy(z.begin(), z.end(), cur.begin() + 1);
            R.pts.push_back(cur);
        }
        long long grid = total / q;
        cur[0] = 1;
        for (long long v = 0; v < grid; ++v) {
            long long t = v;
            for (int i = n - 1; i >= 1; --i) {
                cur[i] = fe(t % q);
                t /= q;
            }
            R.pts.push_back(cur);
        }
        if ((long long)R.size() != count_points(q, w.m()))
            throw consistency_error("point count mismatch");
        return R;
    }
    RepresentativeSet R = enumerate_by_orbits(F, w, layout);
    if ((long long)R.size() != count_points(q, w.m()))
        throw consistency_error("point count mismatch");
    return R;
}

RepresentativeSet structured_representatives(const Field& F, const WeightVector& w) {
    int q = F.q(), n = w.size();
    if (n < 2) throw precondition_error("structured layout needs m >= 1");
    if (std::gcd((long long)w[0], (long long)(q - 1)) != 1)
        throw structure_error("structured layout requires gcd(w_0, q-1) = 1; w_0 = " +
                              std::to_string(w[0]) + ", q-1 = " + std::to_string(q - 1));

    WeightVector wt = w.tail();
    RepresentativeSet base = enumerate_points(F, wt, Layout::canonical);
    size_t pm1 = base.size();

    RepresentativeSet R;
    R.F = &F;
    R.w = w;
    R.layout = Layout::structured;
    R.pts = PointArray(n);
    R.base = base.pts;
    R.base_lambda.reserve(pm1);
    for (size_t j = 0; j < pm1; ++j) R.base_lambda.push_back(lambda_for(F, wt, base.point(j)));

    Point cur(n);
    for (int i = 1; i <= q - 1; ++i) {
        R.blocks.push_back({R.pts.size(), pm1, "affine", i});
        for (size_t j = 0; j < pm1; ++j) {
            auto Qb = base.point(j);
            int g = R.base_lambda[j].g;
            cur[0] = 1;
            for (int c = 0; c < n - 1; ++c) {
                fe x = Qb[c];
                if (x != 0) x = F.mul(x, F.exp((long long)(i - 1) * (wt[c] / g)));
                cur[c + 1] = x;
            }
            R.pts.push_back(cur);
        }
    }
    R.blocks.push_back({R.pts.size(), 1, "origin", 0});
    std::fill(cur.begin(), cur.end(), fe(0));
    cur[0] = 1;
    R.pts.push_back(cur);

    R.blocks.push_back({R.pts.size(), pm1, "infinity", 0});
    for (size_t j = 0; j < pm1; ++j) {
        auto Qb = base.point(j);
        cur[0] = 0;
        std::copy(Qb.begin(), Qb.end(), cur.begin() + 1);
        R.pts.push_back(cur);
    }

    if ((long long)R.size() != count_points(q, w.m()))
        throw consistency_error("structured point count mismatch");

    // the affine blocks must partition A^m(F_q) \ {0}
    long long grid = 1;
    for (int i = 0; i < n - 1; ++i) grid *= q;
    std::vector<char> hit(grid, 0);
    for (int b = 0; b < q - 1; ++b) {
        const Block& blk = R.blocks[b];
        for (size_t j = 0; j < blk.size; ++j) {
            auto P = R.pts[blk.offset + j];
            long long key = 0;
            for (int c = 1; c < n; ++c) key = key * q + P[c];
            if (key == 0 || hit[key]) throw consistency_error("affine blocks do not partition");
            hit[key] = 1;
        }
    }
    return R;
}

GcdReduction gcd_reduce(const WeightVector& w, long long d) {
    GcdReduction r;
    r.gamma = w.gcd();
    if (d % r.gamma != 0) {
        r.zero = true;
        r.w = w;
        r.d = d;
        return r;
    }
    std::vector<int> red(w.w);
    for (int& x : red) x = int(x / r.gamma);
    r.w = WeightVector(red);
    r.d = d / r.gamma;
    return r;
}

DelormeReduction delorme_reduce(const WeightVector& w, long long d) {
    if (w.size() < 2) throw precondition_error("Delorme reduction needs m >= 1");
    DelormeReduction r;
    r.gamma = w.tail().gcd();
    if (std::gcd((long long)w[0], r.gamma) != 1)
        throw precondition_error("Delorme reduction requires gcd(w_0, gcd(w')) = 1");
    // unique 0 <= alpha0 < gamma with d = alpha0*w_0 + d0*gamma
    r.alpha0 = 0;
    while ((d - r.alpha0 * w[0]) % r.gamma != 0) ++r.alpha0;
    r.d0 = (d - r.alpha0 * w[0]) / r.gamma;
    std::vector<int> red(w.w);
    for (size_t i = 1; i < red.size(); ++i) red[i] = int(red[i] / r.gamma);
    r.reduced = WeightVector(red);
    return r;
}

Point delorme_map(const Field& F, const DelormeReduction& red, std::span<const fe> Q) {
    Point out(Q.begin(), Q.end());
    out[0] = F.pow(out[0], red.gamma);
    return out;
}

AffineGrid AffineGrid::lex(const Field& F, int m) {
    AffineGrid G;
    G.m = m;
    G.pts = PointArray(m);
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= F.q();
    Point cur(m);
    for (long long v = 0; v < total; ++v) {
        long long t = v;
        for (int i = m - 1; i >= 0; --i) {
            cur[i] = fe(t % F.q());
            t /= F.q();
        }
        G.pts.push_back(cur);
    }
    return G;
}

AffineGrid AffineGrid::from_structured(const Field& F, const RepresentativeSet& R) {
    if (R.layout != Layout::structured) throw precondition_error("structured layout required");
    AffineGrid G;
    G.m = R.w.m();
    G.pts = PointArray(G.m);
    int q = F.q();
    for (int b = 0; b < q - 1; ++b) {
        const Block& blk = R.blocks[b];
        for (size_t j = 0; j < blk.size; ++j) {
            auto P = R.pts[blk.offset + j];
            G.pts.push_back(P.subspan(1));
        }
    }
    Point origin(G.m, 0);
    G.pts.push_back(origin);
    return G;
}

nlohmann::json RepresentativeSet::to_json() const {
    nlohmann::json j;
    j["q"] = F->q();
    j["w"] = w.w;
    switch (layout) {
        case Layout::canonical: j["layout"] = "canonical"; break;
        case Layout::standard: j["layout"] = "standard"; break;
        case Layout::structured: j["layout"] = "structured"; break;
    }
    nlohmann::json pj = nlohmann::json::array();
    for (size_t i = 0; i < pts.size(); ++i) {
        nlohmann::json one = nlohmann::json::array();
        for (fe c : pts[i]) one.push_back(int(c));
        pj.push_back(std::move(one));
    }
    j["points"] = std::move(pj);
    nlohmann::json bj = nlohmann::json::array();
    for (const Block& b : blocks)
        bj.push_back({{"offset", b.offset}, {"size", b.size}, {"kind", b.kind}, {"index", b.index}});
    j["blocks"] = std::move(bj);
    return j;
}

}  // namespace wprm
