#include "wprm/lattice.hpp"

#include <algorithm>
#include <set>

namespace wprm {

SimplexLatticeSet SimplexLatticeSet::of(long long d, const WeightVector& w) {
    SimplexLatticeSet s;
    s.d = d;
    s.w = w;
    s.points = monomials_of_degree(d, w);
    return s;
}

std::vector<Expo> sumset(const SimplexLatticeSet& A, const SimplexLatticeSet& B) {
    if (!(A.w == B.w)) throw precondition_error("sumset over different ambient weights");
    std::set<Expo> out;
    for (const auto& a : A.points) {
        for (const auto& b : B.points) {
            Expo s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            out.insert(std::move(s));
        }
    }
    return {out.begin(), out.end()};
}

IdpPairResult idp_pair_check(long long d1, long long d2, const WeightVector& w) {
    if (d1 < 0 || d2 < 0) throw precondition_error("degrees must be >= 0");
    auto A = SimplexLatticeSet::of(d1, w);
    auto B = SimplexLatticeSet::of(d2, w);
    auto sum = sumset(A, B);
    std::set<Expo> have(sum.begin(), sum.end());
    IdpPairResult r;
    for (const auto& e : monomials_of_degree(d1 + d2, w))
        if (!have.count(e)) r.witnesses.push_back(e);
    r.holds = r.witnesses.empty();
    return r;
}

IdpResult idp_check(long long delta, int ell_max, const WeightVector& w) {
    if (delta % w.lcm() != 0)
        throw precondition_error("P_d is integral only when lcm(w) divides d");
    IdpResult r;
    auto S = SimplexLatticeSet::of(delta, w);
    SimplexLatticeSet cur = S;
    for (int ell = 2; ell <= ell_max; ++ell) {
        auto sum = sumset(cur, S);
        std::set<Expo> have(sum.begin(), sum.end());
        std::vector<Expo> missing;
        for (const auto& e : monomials_of_degree(ell * delta, w))
            if (!have.count(e)) missing.push_back(e);
        if (!missing.empty()) {
            r.holds = false;
            r.checked_to = ell - 1;
            r.failed_ell = ell;
            r.witnesses = std::move(missing);
            return r;
        }
        cur.d = ell * delta;
        cur.points = std::move(sum);
    }
    r.holds = true;
    r.checked_to = ell_max;
    return r;
}

SchurPredicate schur_closure_predicate(const WeightVector& w, long long d1, long long d2) {
    SchurPredicate p;
    std::set<int> distinct(w.w.begin(), w.w.end());
    long long s = (long long)distinct.size();
    long long div = std::max(1ll, s - 2) * w.lcm();
    if (d1 % div == 0 && d2 % div == 0) {
        p.verdict = Closure::guaranteed;
        p.reason = "both degrees divisible by max(1,s-2)*lcm(w) = " + std::to_string(div);
        return p;
    }
    long long l = w.lcm();
    if (d1 % l == 0 && d2 % l == 0) {
        int ell = int(d1 / l + d2 / l);
        auto idp = idp_check(l, ell, w);
        if (idp.holds) {
            p.verdict = Closure::guaranteed;
            p.reason = "P_lcm(w) sums verified up to ell = " + std::to_string(ell);
            return p;
        }
        p.reason = "P_lcm(w) fails the decomposition at ell = " + std::to_string(idp.failed_ell);
        return p;
    }
    p.reason = "degrees not divisible by lcm(w)";
    return p;
}

}  // namespace wprm
