#include "wprm/dual_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wprm {

namespace {

bool divides_monomial(const Expo& a, const Expo& c) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > c[i]) return false;
    return true;
}

// the member of reduced (a reduced monomial basis) equivalent to e
const Expo& reduce_to(const std::vector<Expo>& reduced, const Expo& e, int q) {
    auto key = class_key(e, q);
    for (const auto& m : reduced)
        if (class_key(m, q) == key) return m;
    throw consistency_error("no reduced representative for the class");
}

}  // namespace

DstarValidation check_dstar(const Field& F, const WeightVector& w, long long d, long long dstar) {
    DstarValidation v;
    long long g = std::gcd(d, w.lcm()) * (F.q() - 1);
    v.congruence = (d + dstar) % g == 0;
    if (dstar % w.lcm() == 0) {  // fullness needs nondegeneracy first
        WprmCode C = build_wprm(F, w, dstar, Layout::canonical);
        v.full_dimension = C.code.dim() == C.code.n();
    }
    return v;
}

DstarResult find_dstar(const Field& F, const WeightVector& w, long long d, long long cap) {
    DstarResult r;
    r.d = d;
    if (d < 1) throw precondition_error("d must be >= 1");
    if (cap == 0) cap = 2ll * w.size() * w.lcm() * (F.q() - 1);
    r.cap = cap;
    if (d % std::gcd((long long)(F.q() - 1), w.lcm()) != 0) {
        r.congruence_obstruction = true;
        r.reason = "gcd(q-1, lcm(w)) does not divide d";
        return r;
    }
    for (long long cand = 1; cand <= cap; ++cand) {
        long long g = std::gcd(d, w.lcm()) * (F.q() - 1);
        if ((d + cand) % g != 0 || cand % w.lcm() != 0) continue;
        if (check_dstar(F, w, d, cand).ok()) {
            r.dstar = cand;
            return r;
        }
    }
    r.reason = "no valid degree up to the cap";
    return r;
}

BadMonomialSet bad_monomials(const Field& F, const WeightVector& w, long long d, long long dstar) {
    auto v = check_dstar(F, w, d, dstar);
    if (!v.ok()) throw precondition_error("invalid d* for B(d, d*)");
    BadMonomialSet B;
    B.d = d;
    B.dstar = dstar;
    auto Md = reduced_monomials(F, d, w);
    auto Mstar = reduced_monomials(F, dstar, w);
    std::set<Expo> seen;
    int q = F.q();
    for (const auto& a : Md)
        for (const auto& b : Mstar) {
            Expo c(a.size());
            bool good = true;
            for (size_t i = 0; i < a.size() && good; ++i) {
                c[i] = a[i] + b[i];
                good = c[i] > 0 && c[i] % (q - 1) == 0;
            }
            if (good && seen.insert(c).second) B.members.push_back(c);
        }
    std::sort(B.members.begin(), B.members.end(),
              [&](const Expo& x, const Expo& y) { return monomial_compare(x, y, w) < 0; });
    return B;
}

fe orthogonality_sum(const Field& F, const WeightVector& w, const Expo& alpha, long long d,
                     long long dstar) {
    long long g = std::gcd(d, w.lcm()) * (F.q() - 1);
    if ((d + dstar) % g != 0)
        throw precondition_error("orthogonality sum needs d + d* = 0 mod gcd(d, lcm(w))(q-1)");
    if (wdeg(alpha, w) != d + dstar)
        throw precondition_error("exponent degree is not d + d*");
    // (q-1) * sum over P(w)(F_q) equals the affine-grid sum, so dividing by
    // q-1 = -1 in GF(q) negates the per-coordinate product
    std::vector<long long> exps(alpha.begin(), alpha.end());
    fe via_grid = F.neg(F.grid_sum(exps));

    RepresentativeSet R = enumerate_points(F, w, Layout::canonical);
    fe direct = 0;
    for (size_t i = 0; i < R.size(); ++i)
        direct = F.add(direct, eval_monomial(F, alpha, R.point(i)));
    if (direct != via_grid)
        throw consistency_error("orthogonality sum disagrees with direct summation");
    return via_grid;
}

DualMonomialDescription dual_monomial_description(const Field& F, const WeightVector& w,
                                                  long long d, std::optional<long long> dstar) {
    DualMonomialDescription desc;
    desc.d = d;
    if (!dstar) {
        auto found = find_dstar(F, w, d);
        if (!found.dstar) throw precondition_error("no d* exists: " + found.reason);
        dstar = found.dstar;
    }
    desc.dstar = *dstar;
    desc.B = bad_monomials(F, w, d, desc.dstar);

    int q = F.q();
    auto Md = reduced_monomials(F, d, w);
    auto Mstar = reduced_monomials(F, desc.dstar, w);

    // excluded reduced monomials: classes of x^{c-a} for divisors a of c
    std::set<Expo> excluded;
    for (const auto& c : desc.B.members)
        for (const auto& a : Md) {
            if (!divides_monomial(a, c)) continue;
            Expo diff(c.size());
            for (size_t i = 0; i < c.size(); ++i) diff[i] = c[i] - a[i];
            excluded.insert(reduce_to(Mstar, diff, q));
        }
    desc.excluded.assign(excluded.begin(), excluded.end());
    for (const auto& b : Mstar)
        if (!excluded.count(b)) desc.generators.push_back(b);

    WprmCode C = build_wprm(F, w, d, Layout::canonical);
    desc.dual = C.code.dual();
    desc.monomial_span = eval_code(F, desc.generators, C.reps->pts);
    if (!desc.monomial_span.subcode_of(desc.dual))
        throw consistency_error("monomial span is not inside the dual");
    desc.residual_dim = (long long)desc.dual.dim() - (long long)desc.monomial_span.dim();

    if (desc.B.members.size() == 1) {
        const Expo& c = desc.B.members.front();
        desc.divisibility_ok =
            std::all_of(Md.begin(), Md.end(), [&](const Expo& a) { return divides_monomial(a, c); });
        desc.complete =
            desc.excluded.size() == C.code.dim() && desc.monomial_span == desc.dual;
    }

    // extend the monomial span to the dual by column-pivot completion
    desc.residual_basis = Mat(F, 0, C.code.n());
    EchelonBasis basis(F, C.code.n());
    for (size_t i = 0; i < desc.monomial_span.dim(); ++i)
        basis.insert(desc.monomial_span.gen().row_span(i));
    for (size_t i = 0; i < desc.dual.dim(); ++i) {
        auto row = desc.dual.gen().row_span(i);
        if (!basis.contains(row)) {
            basis.insert(row);
            desc.residual_basis.append_row(row);
        }
    }
    if ((long long)desc.residual_basis.rows() != desc.residual_dim)
        throw consistency_error("residual completion rank mismatch");
    return desc;
}

PrmDualReport prm_dual_structure(const Field& F, int m, long long d) {
    if (m < 2) throw precondition_error("PRM dual check needs m >= 2");
    long long top = (long long)m * (F.q() - 1);
    if (d < 1 || d > top) throw precondition_error("degree outside [1, m(q-1)]");
    PrmDualReport rep;
    rep.d = d;
    rep.dperp = top - d;
    rep.adds_all_ones = d % (F.q() - 1) == 0;

    WeightVector ones(std::vector<int>(m + 1, 1));
    WprmCode C = build_wprm(F, ones, d, Layout::canonical);
    LinearCode dual = C.code.dual();
    LinearCode rhs = eval_code(F, monomials_of_degree(rep.dperp, ones), C.reps->pts);
    if (rep.adds_all_ones) {
        Mat rows(F, 0, C.code.n());
        for (size_t i = 0; i < rhs.dim(); ++i) rows.append_row(rhs.gen().row_span(i));
        std::vector<fe> all_ones(C.code.n(), 1);
        rows.append_row(all_ones);
        rhs = LinearCode::from_rows(std::move(rows));
    }
    rep.equal = dual == rhs;
    return rep;
}

HullReport hull_check(const Field& F, const WeightVector& w, long long d) {
    HullReport rep;
    int q = F.q(), m = w.m();
    for (int i = 0; i < m; ++i)
        if (std::gcd((long long)w[i], (long long)(q - 1)) != 1) {
            rep.why_not = "gcd(w_" + std::to_string(i) + ", q-1) != 1";
            return rep;
        }
    auto monos = monomials_of_degree(d, w);
    if (monos.empty()) {
        rep.why_not = "no monomials of degree d";
        return rep;
    }
    for (const auto& e : monos) {
        long long t = 0;
        for (long long x : e) t += x;
        rep.D = std::max(rep.D, t);
    }
    if (2 * rep.D >= q - 1) {
        rep.why_not = "2D >= q-1";
        return rep;
    }
    rep.applicable = true;
    rep.wm_divides = d % w[m] == 0;

    auto reps = std::make_shared<const RepresentativeSet>(
        enumerate_points(F, w, Layout::standard));
    WprmCode C = build_wprm(F, w, d, Layout::standard, reps);
    rep.predicted = (long long)C.code.dim() - (rep.wm_divides ? 1 : 0);
    rep.computed = (long long)C.code.hull().dim();
    rep.match = rep.predicted == rep.computed;

    // x_m^{d/w_m} must be the only degree-d monomial whose evaluation
    // leaves the dual
    LinearCode dual = C.code.dual();
    rep.unique_monomial_ok = true;
    std::vector<fe> row(C.code.n());
    for (const auto& e : monos) {
        eval_monomial_row(F, e, reps->pts, row.data());
        bool special = rep.wm_divides && e[m] == d / w[m] &&
                       std::all_of(e.begin(), e.end() - 1, [](long long x) { return x == 0; });
        if (dual.contains(row) == special) rep.unique_monomial_ok = false;
    }
    return rep;
}

// ---- json ----

nlohmann::json DstarResult::to_json() const {
    nlohmann::json j;
    j["d"] = d;
    if (dstar) j["dstar"] = *dstar;
    j["congruence_obstruction"] = congruence_obstruction;
    j["cap"] = cap;
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

nlohmann::json BadMonomialSet::to_json() const {
    return {{"d", d}, {"dstar", dstar}, {"members", expos_to_json(members)}};
}

nlohmann::json DualMonomialDescription::to_json() const {
    nlohmann::json j;
    j["d"] = d;
    j["dstar"] = dstar;
    j["B"] = B.to_json();
    j["excluded"] = expos_to_json(excluded);
    j["generators"] = nlohmann::json::array();
    for (const auto& g : generators) j["generators"].push_back(g);
    j["complete"] = complete;
    j["residual_dim"] = residual_dim;
    j["dual_dim"] = dual.dim();
    return j;
}

nlohmann::json PrmDualReport::to_json() const {
    return {{"d", d}, {"dperp", dperp}, {"adds_all_ones", adds_all_ones}, {"equal", equal}};
}

nlohmann::json HullReport::to_json() const {
    return {{"applicable", applicable}, {"why_not", why_not},   {"D", D},
            {"wm_divides", wm_divides}, {"predicted", predicted}, {"computed", computed},
            {"match", match},           {"unique_monomial_ok", unique_monomial_ok}};
}

}  // namespace wprm
