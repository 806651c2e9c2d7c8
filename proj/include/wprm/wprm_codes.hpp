#ifndef WPRM_WPRM_CODES_HPP
#define WPRM_WPRM_CODES_HPP

#include <memory>

#include "wprm/linear_code.hpp"
#include "wprm/monomial.hpp"
#include "wprm/points.hpp"

namespace wprm {

// evaluation code of the degree-d weighted-homogeneous monomials at one
// representative per rational point
struct WprmCode {
    const Field* F = nullptr;
    WeightVector w;
    long long d = 0;
    std::shared_ptr<const RepresentativeSet> reps;
    LinearCode code;
    bool nondegenerate = false;

    nlohmann::json to_json() const;
};

WprmCode build_wprm(const Field& F, const WeightVector& w, long long d,
                    Layout layout = Layout::canonical,
                    std::shared_ptr<const RepresentativeSet> reps = nullptr);

// affine codes on an ordered grid; negative degrees give the zero code
LinearCode build_wrm(const Field& F, const WeightVector& wtail, long long d,
                     const AffineGrid& grid);
LinearCode build_wrm_congruence(const Field& F, int w0, const WeightVector& wtail,
                                long long d, const AffineGrid& grid);

bool is_nondegenerate(const WeightVector& w, long long d);

LinearCode eval_code(const Field& F, const std::vector<Expo>& monomials,
                     const PointArray& pts, std::string label = "");

// lambda powers Lambda(i)_Q = lambda_Q^{(i-1)d} over the base set, with the
// liveness bookkeeping needed to resolve them in GF(q).  A point is dead when
// no degree-d monomial in the tail variables is supported on it; every live
// point has gcd(w_j : j in supp Q) | d, hence an exact in-field power.
struct LambdaVectors {
    int q = 0;
    long long d = 0;
    std::vector<LambdaInfo> info;
    std::vector<char> dead;
    int symbolic_entries = 0;  // formally out-of-field (always at dead points)

    RadicalScalar entry(const Field& F, int i, size_t j) const {
        return info[j].power(F, (long long)(i - 1) * d);
    }
    // GF(q) value; conventional 1 at dead points, error on a live point
    // without an in-field power
    fe value(const Field& F, int i, size_t j) const;

    nlohmann::json to_json(const Field& F) const;
};

LambdaVectors make_lambda_vectors(const Field& F, const RepresentativeSet& structured,
                                  long long d);

// recursive decomposition on the structured representatives:
// WPRM_d(w) = { (u + v_Lambda, v) } over the congruence and tail parts
struct Decomposition {
    WeightVector w;
    long long d = 0;
    std::shared_ptr<const RepresentativeSet> reps;
    LinearCode direct;
    LinearCode congruence_part;  // WRM_{d-w_0}(w_0; w') on the block grid
    LinearCode tail_part;        // WPRM_d(w') on the base points
    LambdaVectors lambda;
    LinearCode assembled;
    bool equal = false;
    bool dims_add = false;
    bool lambda_routes_agree = false;

    bool ok() const { return equal && dims_add && lambda_routes_agree; }
    nlohmann::json to_json() const;
};
Decomposition recursive_decomposition(const Field& F, const WeightVector& w, long long d);

struct DualDecomposition {
    WeightVector w;
    long long d = 0;
    LinearCode direct_dual;
    LinearCode congruence_dual;
    LinearCode tail_dual;
    LambdaVectors lambda;
    LinearCode assembled;
    bool equal = false;
    bool orthogonal = false;
    int conventional_products = 0;  // dead-point lambda values against nonzero entries

    bool ok() const { return equal && orthogonal; }
    nlohmann::json to_json() const;
};
DualDecomposition dual_recursive(const Field& F, const WeightVector& w, long long d);

struct SscReport {
    WeightVector w;
    long long d = 0;
    int q = 0, qprime = 0;
    bool degree_qualifies = false;
    bool lambda_in_subfield = false;
    size_t dim_lhs = 0, dim_u = 0, dim_v = 0;
    bool equal = false;
    bool dims_add = false;

    bool ok() const { return degree_qualifies && lambda_in_subfield && equal && dims_add; }
    nlohmann::json to_json() const;
};
SscReport ssc_recursive(const Field& F, const Field& Fsub, const WeightVector& w, long long d);

struct GcdTransformReport {
    long long gamma = 1;
    bool zero_case = false;
    bool equal = false;
    size_t dim = 0;
    nlohmann::json to_json() const;
};
GcdTransformReport transform_gcd(const Field& F, const WeightVector& w, long long d);

struct DelormeTransformReport {
    DelormeReduction red;
    bool zero_case = false;
    bool point_map_bijective = false;
    std::vector<fe> multiplier;  // ev(x_0^{alpha_0}) on the representatives
    bool equal = false;
    nlohmann::json to_json() const;
};
DelormeTransformReport transform_delorme(const Field& F, const WeightVector& w, long long d);

struct DelormeNondivReport {
    bool applicable = false;  // gcd(w') does not divide d
    std::string note;
    bool product_equal = false;
    bool reduced_equal = false;
    nlohmann::json to_json() const;
};
DelormeNondivReport transform_delorme_nondivisible(const Field& F, const WeightVector& w,
                                                   long long d);

enum class WprsCase { both_divide, one_divides, neither_divides };

struct WprsParams {
    int q = 0, w0 = 0, w1 = 0;
    long long d = 0;
    long long delta = -1;  // den(d; w0, w1) - 1; -1 means the zero code
    long long rho = 0;
    long long eps_tilde = 0;
    WprsCase kase = WprsCase::both_divide;
    long long predicted_d1 = 0;
    bool zero_code = false;
    nlohmann::json to_json() const;
};
WprsParams wprs_params(int q, int w0, int w1, long long d);

struct WprsReport {
    WprsParams params;
    size_t dim = 0;
    bool dim_ok = false;
    bool zero_pattern_ok = false;
    bool punctured_mds = false;
    bool case1_prs_equal = true;  // only both_divide checks this
    long long brute_d1 = 0;
    bool d1_ok = false;

    bool ok() const {
        return dim_ok && zero_pattern_ok && punctured_mds && case1_prs_equal &&
               (params.zero_code || d1_ok);
    }
    nlohmann::json to_json() const;
};
WprsReport wprs_check(const Field& F, int w0, int w1, long long d);

struct WprsDualReport {
    WprsParams params;
    bool dim_ok = false;
    bool units_ok = false;
    bool punctured_dual_mds = false;
    bool case1_equal = true;

    bool ok() const { return dim_ok && units_ok && punctured_dual_mds && case1_equal; }
    nlohmann::json to_json() const;
};
WprsDualReport wprs_dual_structure(const Field& F, int w0, int w1, long long d);

struct CovarianceReport {
    bool ok = false;
    int dead_points = 0;
    std::vector<std::string> diagonal;
    nlohmann::json to_json() const;
};
CovarianceReport representative_covariance(const Field& F, const WeightVector& w, long long d);

struct DeltaReport {
    bool sufficient_condition = false;
    bool comparison_holds = false;
    Rational delta_wrm, delta_wprm;
    size_t dim_wrm = 0, dim_wprm = 0;
    long long d1_wrm = 0, d1_wprm = 0;
    nlohmann::json to_json() const;
};
DeltaReport compare_delta(const Field& F, const WeightVector& w, long long d);

}  // namespace wprm

#endif
