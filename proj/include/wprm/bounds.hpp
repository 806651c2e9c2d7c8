#ifndef WPRM_BOUNDS_HPP
#define WPRM_BOUNDS_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "wprm/wprm_codes.hpp"

namespace wprm {

constexpr long long GHW_INF = std::numeric_limits<long long>::max();

struct Hierarchy {
    long long dim = 0;
    std::vector<long long> d;  // d[r-1] = d_r
    std::string provider;      // "exact", "mds", "zero"

    static Hierarchy of(const LinearCode& C, const Budget& b = Budget::from_env());
};

// conventions: d_0 = 0, d_r = infinity beyond the dimension, the zero code
// has every GHW equal to 0
long long ghw_conv(const Hierarchy& h, long long r);

// constituent codes of the GHW lower bound at (w, d)
struct ComponentHierarchies {
    Hierarchy A;  // WRM_d(w_0; w')
    Hierarchy B;  // WRM_{d-w_0}(w_0; w')
    Hierarchy C;  // WPRM_d(w')
    Hierarchy E;  // WRM_{d-(q-1)max{w_0,min(w')}}(w') or the zero code
};
ComponentHierarchies component_hierarchies(const Field& F, const WeightVector& w, long long d,
                                           const Budget& b = Budget::from_env());

struct BoundInstance {
    int q = 0;
    WeightVector w;
    long long d = 0;
    int r = 0;
    ComponentHierarchies comps;
    std::vector<std::pair<int, int>> Y;
    std::vector<long long> B_values;  // aligned with Y
    long long bound = 0;

    nlohmann::json to_json() const;
};

BoundInstance lower_bound(const Field& F, const WeightVector& w, long long d, int r,
                          const ComponentHierarchies& comps);

// the bound for every r in [1, dim]
std::vector<long long> lower_bound_hierarchy(const Field& F, const WeightVector& w, long long d,
                                             const ComponentHierarchies* comps = nullptr);

long long min_distance_bound(const Field& F, const WeightVector& w, long long d);

long long upper_bound_components(const Field& F, const WeightVector& w, long long d, int r,
                                 const Budget& b = Budget::from_env());

long long upper_bound_lowdeg(const Field& F, const WeightVector& w, long long d, int r,
                             const Budget& b = Budget::from_env());

struct OrderingTrace {
    WeightVector ordering;
    std::vector<long long> values;
};
struct OrderingReport {
    std::vector<OrderingTrace> traces;
    std::vector<long long> maxima;

    nlohmann::json to_json() const;
};
OrderingReport best_over_orderings(const Field& F, const WeightVector& w, long long d,
                                   const Budget& b = Budget::from_env());

// footprint-style lower bound for d_1 of the affine code of degree <= d
long long footprint_min_distance(const Field& F, const WeightVector& wtail, long long d);

}  // namespace wprm

#endif
