#ifndef WPRM_DUAL_ANALYSIS_HPP
#define WPRM_DUAL_ANALYSIS_HPP

#include <optional>

#include "wprm/wprm_codes.hpp"

namespace wprm {

struct DstarResult {
    long long d = 0;
    std::optional<long long> dstar;
    bool congruence_obstruction = false;  // gcd(q-1, lcm(w)) does not divide d
    long long cap = 0;
    std::string reason;  // when absent

    nlohmann::json to_json() const;
};

// smallest d* <= cap with WPRM_{d*}(w) full and d + d* = 0 mod gcd(d, lcm(w))(q-1);
// cap = 0 selects the default 2(m+1) lcm(w) (q-1)
DstarResult find_dstar(const Field& F, const WeightVector& w, long long d, long long cap = 0);

struct DstarValidation {
    bool full_dimension = false;
    bool congruence = false;
    bool ok() const { return full_dimension && congruence; }
};
DstarValidation check_dstar(const Field& F, const WeightVector& w, long long d, long long dstar);

struct BadMonomialSet {
    long long d = 0, dstar = 0;
    std::vector<Expo> members;  // degree d+d* exponents, all coordinates
                                // positive and divisible by q-1

    nlohmann::json to_json() const;
};
BadMonomialSet bad_monomials(const Field& F, const WeightVector& w, long long d, long long dstar);

// sum of x^alpha over the rational points, via the affine-grid product;
// asserts agreement with direct summation on the canonical representatives
fe orthogonality_sum(const Field& F, const WeightVector& w, const Expo& alpha, long long d,
                     long long dstar);

struct DualMonomialDescription {
    long long d = 0, dstar = 0;
    BadMonomialSet B;
    std::vector<Expo> excluded;    // reduced forms of x^{c-a}
    std::vector<Expo> generators;  // reduced degree-d* monomials minus the excluded set
    bool divisibility_ok = false;  // singleton case: every a in M-bar_d divides c
    bool complete = false;         // monomial span equals the dual
    long long residual_dim = 0;
    LinearCode dual;           // nullspace dual
    LinearCode monomial_span;  // span of the generator evaluations
    Mat residual_basis;        // complement rows extending the span to the dual

    nlohmann::json to_json() const;
};
DualMonomialDescription dual_monomial_description(const Field& F, const WeightVector& w,
                                                  long long d,
                                                  std::optional<long long> dstar = std::nullopt);

struct PrmDualReport {
    long long d = 0, dperp = 0;
    bool adds_all_ones = false;  // d = 0 mod q-1 branch
    bool equal = false;

    nlohmann::json to_json() const;
};
PrmDualReport prm_dual_structure(const Field& F, int m, long long d);

struct HullReport {
    bool applicable = false;
    std::string why_not;
    long long D = 0;  // max total degree over the degree-d exponents
    bool wm_divides = false;
    long long predicted = 0, computed = 0;
    bool match = false;
    bool unique_monomial_ok = false;  // x_m^{d/w_m} alone leaves the dual

    bool ok() const { return applicable && match && unique_monomial_ok; }
    nlohmann::json to_json() const;
};
HullReport hull_check(const Field& F, const WeightVector& w, long long d);

}  // namespace wprm

#endif
