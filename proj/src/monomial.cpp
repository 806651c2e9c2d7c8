#include "wprm/monomial.hpp"

#include <algorithm>
#include <map>

#include "wprm/matrix.hpp"

namespace wprm {

long long wdeg(const Expo& e, const WeightVector& w) {
    if (e.size() != size_t(w.size())) throw precondition_error("exponent/weight size mismatch");
    long long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * w[int(i)];
    return d;
}

long long denumerant(long long d, const WeightVector& w) {
    if (d < 0) return 0;
    std::vector<long long> dp(d + 1, 0);
    dp[0] = 1;
    for (int wi : w.w)
        for (long long t = wi; t <= d; ++t) dp[t] += dp[t - wi];
    return dp[d];
}

int monomial_compare(const Expo& a, const Expo& b, const WeightVector& w) {
    long long da = wdeg(a, w), db = wdeg(b, w);
    if (da != db) return da < db ? -1 : 1;
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

void gen_degree(long long rem, int idx, const WeightVector& w, Expo& cur,
                std::vector<Expo>& out) {
    if (idx == 0) {
        if (rem % w[0] == 0) {
            cur[0] = rem / w[0];
            out.push_back(cur);
        }
        return;
    }
    for (long long e = 0; e * w[idx] <= rem; ++e) {
        cur[idx] = e;
        gen_degree(rem - e * w[idx], idx - 1, w, cur, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<Expo> monomials_of_degree(long long d, const WeightVector& w) {
    std::vector<Expo> out;
    if (d < 0) return out;
    Expo cur(w.size(), 0);
    // index m varies slowest, so emission order is ascending monomial order
    gen_degree(d, w.m(), w, cur, out);
    return out;
}

std::vector<Expo> monomials_up_to_degree(long long d, const WeightVector& w) {
    std::vector<Expo> out;
    for (long long t = 0; t <= d; ++t) {
        auto part = monomials_of_degree(t, w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool equivalent_mod_ideal(const Expo& alpha, const Expo& beta, int q, const WeightVector& w) {
    if (alpha.size() != beta.size()) throw precondition_error("exponent size mismatch");
    if (wdeg(alpha, w) != wdeg(beta, w)) return false;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if ((alpha[i] == 0) != (beta[i] == 0)) return false;
        if ((beta[i] - alpha[i]) % (q - 1) != 0) return false;
    }
    return true;
}

Expo affine_reduce(const Expo& e, int q) {
    Expo r = e;
    for (long long& x : r)
        if (x > 0) x = (x - 1) % (q - 1) + 1;
    return r;
}

std::vector<Expo> congruence_monomials(long long d, int w0, const WeightVector& wtail) {
    if (w0 < 1) throw precondition_error("w0 must be >= 1");
    std::vector<Expo> out;
    if (d < 0) return out;
    for (long long t = d % w0; t <= d; t += w0) {
        auto part = monomials_of_degree(t, wtail);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<long long> class_key(const Expo& e, int q) {
    std::vector<long long> key(e.size());
    for (size_t i = 0; i < e.size(); ++i) key[i] = e[i] == 0 ? -1 : e[i] % (q - 1);
    return key;
}

std::vector<Expo> reduced_monomials(const Field& F, long long d, const WeightVector& w,
                                    const RepresentativeSet* reps) {
    auto full = monomials_of_degree(d, w);
    // full list is ascending, so the first member of each class is its minimum
    std::map<std::vector<long long>, Expo> classes;
    for (const auto& e : full) classes.try_emplace(class_key(e, F.q()), e);
    std::vector<Expo> out;
    out.reserve(classes.size());
    for (auto& [k, e] : classes) out.push_back(e);
    std::sort(out.begin(), out.end(),
              [&](const Expo& a, const Expo& b) { return monomial_compare(a, b, w) < 0; });

    // rank guard: class count must equal the evaluation rank of M_d
    RepresentativeSet local;
    if (!reps) {
        local = enumerate_points(F, w, Layout::canonical);
        reps = &local;
    }
    Mat ev(F, full.size(), reps->size());
    for (size_t i = 0; i < full.size(); ++i) eval_monomial_row(F, full[i], reps->pts, ev.row(i));
    size_t rk = rank_of(std::move(ev));
    if (rk != out.size())
        throw consistency_error("reduced monomial count " + std::to_string(out.size()) +
                                " differs from evaluation rank " + std::to_string(rk));
    return out;
}

fe eval_monomial(const Field& F, const Expo& e, std::span<const fe> point) {
    if (e.size() != point.size()) throw precondition_error("exponent/point size mismatch");
    fe v = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        v = F.mul(v, F.pow(point[i], e[i]));
        if (v == 0) return 0;
    }
    return v;
}

void eval_monomial_row(const Field& F, const Expo& e, const PointArray& pts, fe* out) {
    int dim = pts.dim();
    if (e.size() != size_t(dim)) throw precondition_error("exponent/point size mismatch");
    // per-coordinate power tables
    std::vector<fe> tab(size_t(dim) * F.q());
    for (int c = 0; c < dim; ++c)
        for (int x = 0; x < F.q(); ++x) tab[size_t(c) * F.q() + x] = F.pow(fe(x), e[c]);
    size_t n = pts.size();
    const fe* flat = pts.flat().data();
    for (size_t i = 0; i < n; ++i) {
        fe v = 1;
        const fe* P = flat + i * dim;
        for (int c = 0; c < dim && v; ++c) v = F.mul(v, tab[size_t(c) * F.q() + P[c]]);
        out[i] = v;
    }
}

nlohmann::json expos_to_json(const std::vector<Expo>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : v) j.push_back(e);
    return j;
}

}  // namespace wprm
