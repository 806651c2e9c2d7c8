#include "wprm/bounds.hpp"

#include <algorithm>
#include <set>

namespace wprm {

namespace {

long long sat_add(long long a, long long b) {
    if (a == GHW_INF || b == GHW_INF) return GHW_INF;
    return a + b;
}

long long ceil_div_conv(long long a, long long b) {
    if (a == GHW_INF) return GHW_INF;
    return (a + b - 1) / b;
}

}  // namespace

Hierarchy Hierarchy::of(const LinearCode& C, const Budget& b) {
    Hierarchy h;
    h.dim = (long long)C.dim();
    h.provider = h.dim == 0 ? "zero" : "exact";
    if (h.dim > 0) h.d = C.hierarchy(b);
    return h;
}

long long ghw_conv(const Hierarchy& h, long long r) {
    if (h.dim == 0) return 0;
    if (r <= 0) return 0;
    if (r > h.dim) return GHW_INF;
    return h.d[r - 1];
}

ComponentHierarchies component_hierarchies(const Field& F, const WeightVector& w, long long d,
                                           const Budget& b) {
    ComponentHierarchies c;
    WeightVector wt = w.tail();
    AffineGrid grid = AffineGrid::lex(F, wt.size());
    c.A = Hierarchy::of(build_wrm_congruence(F, w[0], wt, d, grid), b);
    c.B = Hierarchy::of(build_wrm_congruence(F, w[0], wt, d - w[0], grid), b);
    c.C = Hierarchy::of(build_wprm(F, wt, d, Layout::canonical).code, b);
    long long threshold = (long long)(F.q() - 1) *
                          std::max((long long)w[0],
                                   (long long)*std::min_element(wt.w.begin(), wt.w.end()));
    if (d > threshold)
        c.E = Hierarchy::of(build_wrm(F, wt, d - threshold, grid), b);
    else
        c.E = Hierarchy{0, {}, "zero"};
    return c;
}

BoundInstance lower_bound(const Field& F, const WeightVector& w, long long d, int r,
                          const ComponentHierarchies& comps) {
    if (std::gcd((long long)w[0], (long long)(F.q() - 1)) != 1)
        throw precondition_error("lower bound requires gcd(w_0, q-1) = 1");
    if (r < 1) throw precondition_error("bound rank must be >= 1");
    BoundInstance inst;
    inst.q = F.q();
    inst.w = w;
    inst.d = d;
    inst.r = r;
    inst.comps = comps;

    long long qm1 = F.q() - 1;
    inst.bound = GHW_INF;
    for (int a1 = 0; a1 <= r; ++a1) {
        if (a1 < r - comps.A.dim || a1 > comps.E.dim) continue;
        for (int a2 = 0; a2 <= r; ++a2) {
            if (a2 < r - comps.C.dim || a2 > comps.B.dim) continue;
            if (a1 + a2 > r) continue;
            long long v = sat_add(
                std::max(ghw_conv(comps.A, r - a1), ghw_conv(comps.B, a2)),
                std::max(ceil_div_conv(ghw_conv(comps.E, a1), qm1), ghw_conv(comps.C, r - a2)));
            inst.Y.emplace_back(a1, a2);
            inst.B_values.push_back(v);
            inst.bound = std::min(inst.bound, v);
        }
    }
    if (inst.Y.empty()) throw consistency_error("empty feasible set Y in the GHW bound");
    return inst;
}

std::vector<long long> lower_bound_hierarchy(const Field& F, const WeightVector& w, long long d,
                                             const ComponentHierarchies* comps) {
    ComponentHierarchies local;
    if (!comps) {
        local = component_hierarchies(F, w, d);
        comps = &local;
    }
    long long dim = comps->B.dim + comps->C.dim;
    std::vector<long long> out;
    for (int r = 1; r <= dim; ++r) out.push_back(lower_bound(F, w, d, r, *comps).bound);
    return out;
}

long long min_distance_bound(const Field& F, const WeightVector& w, long long d) {
    auto comps = component_hierarchies(F, w, d);
    return lower_bound(F, w, d, 1, comps).bound;
}

long long upper_bound_components(const Field& F, const WeightVector& w, long long d, int r,
                                 const Budget& b) {
    if (std::gcd((long long)w[0], (long long)(F.q() - 1)) != 1)
        throw precondition_error("upper bound requires gcd(w_0, q-1) = 1");
    WeightVector wt = w.tail();
    AffineGrid grid = AffineGrid::lex(F, wt.size());
    Hierarchy B = Hierarchy::of(build_wrm_congruence(F, w[0], wt, d - w[0], grid), b);
    Hierarchy C = Hierarchy::of(build_wprm(F, wt, d, Layout::canonical).code, b);
    if (r < 1 || (long long)r > std::max(B.dim, C.dim))
        throw precondition_error("rank exceeds both component dimensions");
    long long s1 = r <= B.dim ? B.d[r - 1] : GHW_INF;
    long long s2 = r <= C.dim ? (long long)F.q() * C.d[r - 1] : GHW_INF;
    return std::min(s1, s2);
}

long long upper_bound_lowdeg(const Field& F, const WeightVector& w, long long d, int r,
                             const Budget& b) {
    int q = F.q(), m = w.m();
    long long minw = *std::min_element(w.w.begin(), w.w.end());
    if (d < 1 || d > minw * q) throw precondition_error("degree outside [1, min(w) q]");
    long long total = denumerant(d, w);
    if (r < 1 || r > total) throw precondition_error("rank outside [1, den(d; w)]");

    // unique i, j with r = sum_{a<i} den(d - w_a; w(a)) + j, 0 <= j < den(d - w_i; w(i))
    long long acc = 0;
    int i = 0;
    for (; i <= m; ++i) {
        long long s = denumerant(d - w[i], w.suffix(i));
        if (r - acc < s) break;
        acc += s;
    }
    long long j = r - acc;

    long long qpow = 1;  // q^{m-i+1}
    for (int t = 0; t < m - i + 1; ++t) qpow *= q;
    long long pim1 = i == 0 ? 0 : count_points(q, i - 1);

    long long term = 0;
    if (j > 0) {
        if (std::gcd((long long)w[i], (long long)(q - 1)) != 1)
            throw precondition_error("gcd(w_i, q-1) != 1 at decomposition index " +
                                     std::to_string(i));
        WeightVector wsuf = i + 1 <= m ? w.suffix(i + 1) : WeightVector{1};
        if (i + 1 > m) throw consistency_error("nonzero j at the final decomposition index");
        AffineGrid grid = AffineGrid::lex(F, wsuf.size());
        Hierarchy H = Hierarchy::of(build_wrm_congruence(F, w[i], wsuf, d - w[i], grid), b);
        term = ghw_conv(H, j);
    }
    return qpow * pim1 + term;
}

OrderingReport best_over_orderings(const Field& F, const WeightVector& w, long long d,
                                   const Budget& b) {
    OrderingReport rep;
    std::vector<int> perm = w.w;
    std::sort(perm.begin(), perm.end());
    // orderings are equivalent when they share w_0 and the tail multiset
    std::set<std::pair<int, std::vector<int>>> seen;
    do {
        if (std::gcd((long long)perm[0], (long long)(F.q() - 1)) != 1) continue;
        std::vector<int> tail_sorted(perm.begin() + 1, perm.end());
        std::sort(tail_sorted.begin(), tail_sorted.end());
        if (!seen.insert({perm[0], tail_sorted}).second) continue;
        WeightVector order(perm);
        auto comps = component_hierarchies(F, order, d, b);
        rep.traces.push_back({order, lower_bound_hierarchy(F, order, d, &comps)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (rep.traces.empty())
        throw precondition_error("no weight ordering has gcd(w_0, q-1) = 1");
    size_t k = rep.traces.front().values.size();
    rep.maxima.assign(k, 0);
    for (const auto& t : rep.traces)
        for (size_t i = 0; i < k; ++i) rep.maxima[i] = std::max(rep.maxima[i], t.values[i]);
    return rep;
}

long long footprint_min_distance(const Field& F, const WeightVector& wtail, long long d) {
    int q = F.q(), m = wtail.size();
    long long best = GHW_INF;
    // min over reduced exponents e (entries in [0, q-1], wdeg <= d) of prod (q - e_i)
    std::vector<long long> e(m, 0);
    while (true) {
        long long deg = 0, prod = 1;
        for (int i = 0; i < m; ++i) {
            deg += e[i] * wtail[i];
            prod *= q - e[i];
        }
        if (deg <= d) best = std::min(best, prod);
        int pos = 0;
        while (pos < m && ++e[pos] == q) e[pos++] = 0;
        if (pos == m) break;
    }
    return best;
}

nlohmann::json BoundInstance::to_json() const {
    nlohmann::json j;
    j["q"] = q;
    j["w"] = w.w;
    j["d"] = d;
    j["r"] = r;
    nlohmann::json y = nlohmann::json::array();
    for (size_t i = 0; i < Y.size(); ++i)
        y.push_back({{"a1", Y[i].first}, {"a2", Y[i].second}, {"B", B_values[i]}});
    j["Y"] = std::move(y);
    j["bound"] = bound;
    j["providers"] = {{"A", comps.A.provider},
                      {"B", comps.B.provider},
                      {"C", comps.C.provider},
                      {"E", comps.E.provider}};
    return j;
}

nlohmann::json OrderingReport::to_json() const {
    nlohmann::json j;
    nlohmann::json t = nlohmann::json::array();
    for (const auto& tr : traces) t.push_back({{"ordering", tr.ordering.w}, {"values", tr.values}});
    j["traces"] = std::move(t);
    j["maxima"] = maxima;
    return j;
}

}  // namespace wprm
