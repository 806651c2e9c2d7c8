#ifndef WPRM_LATTICE_HPP
#define WPRM_LATTICE_HPP

#include <string>
#include <vector>

#include "wprm/monomial.hpp"

namespace wprm {

// integral points of the degree-d simplex, kept as degree-d exponent vectors
struct SimplexLatticeSet {
    long long d = 0;
    WeightVector w;
    std::vector<Expo> points;

    static SimplexLatticeSet of(long long d, const WeightVector& w);
};

// Minkowski sum of the exponent sets, ascending
std::vector<Expo> sumset(const SimplexLatticeSet& A, const SimplexLatticeSet& B);

struct IdpPairResult {
    bool holds = false;
    std::vector<Expo> witnesses;  // degree d1+d2 exponents missing from the sum
};
IdpPairResult idp_pair_check(long long d1, long long d2, const WeightVector& w);

struct IdpResult {
    bool holds = false;
    int checked_to = 0;         // verified for ell = 2..checked_to
    int failed_ell = 0;         // 0 when holds
    std::vector<Expo> witnesses;
};
// requires lcm(w) | delta so that P_delta is integral
IdpResult idp_check(long long delta, int ell_max, const WeightVector& w);

enum class Closure { guaranteed, unknown };
struct SchurPredicate {
    Closure verdict = Closure::unknown;
    std::string reason;
};
SchurPredicate schur_closure_predicate(const WeightVector& w, long long d1, long long d2);

}  // namespace wprm

#endif
