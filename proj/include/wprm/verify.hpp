#ifndef WPRM_VERIFY_HPP
#define WPRM_VERIFY_HPP

#include "wprm/bounds.hpp"
#include "wprm/dual_analysis.hpp"
#include "wprm/lattice.hpp"
#include "wprm/wprm_codes.hpp"

namespace wprm {

struct VerifyResult {
    bool pass = false;
    nlohmann::json report;
};

VerifyResult verify_recursive(const Field& F, const WeightVector& w, long long d);
VerifyResult verify_dual_recursive(const Field& F, const WeightVector& w, long long d);
VerifyResult verify_ssc(const Field& F, const Field& Fsub, const WeightVector& w, long long d);
VerifyResult verify_wprs(const Field& F, int w0, int w1, long long d);
VerifyResult verify_hull(const Field& F, const WeightVector& w, long long d);
VerifyResult verify_dual_monomial(const Field& F, const WeightVector& w, long long d,
                                  long long dstar);
// schur product of the degree-d1 and degree-d2 codes against the lattice
// prediction; rank-only when the length makes RREF comparison pointless
VerifyResult verify_schur(const Field& F, const WeightVector& w, long long d1, long long d2);
VerifyResult verify_idp(const WeightVector& w, long long d1, long long d2);
VerifyResult verify_delta(const Field& F, const WeightVector& w, long long d);
VerifyResult verify_prm_dual(const Field& F, int m, long long d);
// lower <= exact <= upper sandwich for every r
VerifyResult verify_bounds_sandwich(const Field& F, const WeightVector& w, long long d);

}  // namespace wprm

#endif
