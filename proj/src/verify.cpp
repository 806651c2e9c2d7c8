#include "wprm/verify.hpp"

#include <algorithm>

namespace wprm {

VerifyResult verify_recursive(const Field& F, const WeightVector& w, long long d) {
    Decomposition D = recursive_decomposition(F, w, d);
    return {D.ok(), D.to_json()};
}

VerifyResult verify_dual_recursive(const Field& F, const WeightVector& w, long long d) {
    DualDecomposition D = dual_recursive(F, w, d);
    return {D.ok(), D.to_json()};
}

VerifyResult verify_ssc(const Field& F, const Field& Fsub, const WeightVector& w, long long d) {
    SscReport S = ssc_recursive(F, Fsub, w, d);
    return {S.ok(), S.to_json()};
}

VerifyResult verify_wprs(const Field& F, int w0, int w1, long long d) {
    WprsReport r = wprs_check(F, w0, w1, d);
    WprsDualReport rd = wprs_dual_structure(F, w0, w1, d);
    nlohmann::json j;
    j["primal"] = r.to_json();
    j["dual"] = rd.to_json();
    return {r.ok() && rd.ok(), j};
}

VerifyResult verify_hull(const Field& F, const WeightVector& w, long long d) {
    HullReport r = hull_check(F, w, d);
    return {r.ok(), r.to_json()};
}

VerifyResult verify_dual_monomial(const Field& F, const WeightVector& w, long long d,
                                  long long dstar) {
    std::optional<long long> ds;
    if (dstar > 0) ds = dstar;
    DualMonomialDescription desc = dual_monomial_description(F, w, d, ds);
    bool pass = check_dstar(F, w, d, desc.dstar).ok();
    if (desc.B.members.size() == 1) pass = pass && desc.complete && desc.divisibility_ok;
    return {pass, desc.to_json()};
}

VerifyResult verify_schur(const Field& F, const WeightVector& w, long long d1, long long d2) {
    nlohmann::json j;
    WprmCode C1 = build_wprm(F, w, d1, Layout::canonical);
    WprmCode C2 = build_wprm(F, w, d2, Layout::canonical, C1.reps);
    WprmCode C12 = build_wprm(F, w, d1 + d2, Layout::canonical, C1.reps);
    LinearCode prod = C1.code.schur(C2.code);
    bool contained = prod.subcode_of(C12.code);
    bool equal = prod == C12.code;
    j["dim_product"] = prod.dim();
    j["dim_sum_degree"] = C12.code.dim();
    j["contained"] = contained;
    j["equal"] = equal;
    j["codim"] = C12.code.dim() - prod.dim();

    bool pass = contained;
    long long minw = *std::min_element(w.w.begin(), w.w.end());
    if (d1 + d2 < minw * F.q()) {
        // the lattice criterion is exact in this range
        auto idp = idp_pair_check(d1, d2, w);
        j["idp_predicts_equal"] = idp.holds;
        pass = pass && (equal == idp.holds);
    }
    auto pred = schur_closure_predicate(w, d1, d2);
    j["predicate"] = pred.verdict == Closure::guaranteed ? "guaranteed" : "unknown";
    j["predicate_reason"] = pred.reason;
    if (pred.verdict == Closure::guaranteed) pass = pass && equal;
    return {pass, j};
}

VerifyResult verify_idp(const WeightVector& w, long long d1, long long d2) {
    auto r = idp_pair_check(d1, d2, w);
    nlohmann::json j;
    j["holds"] = r.holds;
    j["witnesses"] = expos_to_json(r.witnesses);
    return {true, j};  // reporting operation; caller interprets
}

VerifyResult verify_delta(const Field& F, const WeightVector& w, long long d) {
    DeltaReport r = compare_delta(F, w, d);
    // the sufficient condition must never contradict the actual comparison
    bool pass = !r.sufficient_condition || r.comparison_holds;
    return {pass, r.to_json()};
}

VerifyResult verify_prm_dual(const Field& F, int m, long long d) {
    PrmDualReport r = prm_dual_structure(F, m, d);
    return {r.equal, r.to_json()};
}

VerifyResult verify_bounds_sandwich(const Field& F, const WeightVector& w, long long d) {
    nlohmann::json j;
    WprmCode C = build_wprm(F, w, d, Layout::structured);
    auto exact = C.code.hierarchy();
    auto comps = component_hierarchies(F, w, d);
    auto lower = lower_bound_hierarchy(F, w, d, &comps);
    j["exact"] = exact;
    j["lower"] = lower;
    bool pass = lower.size() == exact.size();
    nlohmann::json uppers = nlohmann::json::array();
    for (size_t r = 1; r <= exact.size() && pass; ++r) {
        pass = lower[r - 1] <= exact[r - 1];
        long long comp_max = std::max(comps.B.dim, comps.C.dim);
        if ((long long)r <= comp_max) {
            long long ub = upper_bound_components(F, w, d, int(r));
            uppers.push_back(ub);
            pass = pass && exact[r - 1] <= ub;
        }
        long long minw = *std::min_element(w.w.begin(), w.w.end());
        if (d >= 1 && d <= minw * F.q() && (long long)r <= denumerant(d, w)) {
            try {
                long long ub2 = upper_bound_lowdeg(F, w, d, int(r));
                pass = pass && exact[r - 1] <= ub2;
            } catch (const precondition_error&) {
                // decomposition index without gcd(w_i, q-1) = 1; bound not defined
            }
        }
    }
    j["upper_components"] = uppers;
    return {pass, j};
}

}  // namespace wprm
