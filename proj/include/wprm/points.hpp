#ifndef WPRM_POINTS_HPP
#define WPRM_POINTS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wprm/field.hpp"
#include "wprm/weights.hpp"

namespace wprm {

using Point = std::vector<fe>;

// flat, fixed-stride point storage
class PointArray {
  public:
    PointArray() = default;
    explicit PointArray(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    size_t size() const { return dim_ ? flat_.size() / dim_ : 0; }
    std::span<const fe> operator[](size_t i) const { return {flat_.data() + i * dim_, size_t(dim_)}; }
    void push_back(std::span<const fe> p) { flat_.insert(flat_.end(), p.begin(), p.end()); }
    void push_back(const Point& p) { flat_.insert(flat_.end(), p.begin(), p.end()); }
    const std::vector<fe>& flat() const { return flat_; }

  private:
    int dim_ = 0;
    std::vector<fe> flat_;
};

// the orbit generator lambda_Q, a root of x^g - xi with g the support gcd.
// When gcd(g, q-1) = 1 an in-field choice xi^nu with nu*g = 1 (mod q-1)
// exists and is used, so every power stays in GF(q).
struct LambdaInfo {
    int g = 1;
    bool in_field = false;
    long long nu = 0;  // valid when in_field

    // lambda^k as a radical scalar (exact in GF(q) when r = 0)
    RadicalScalar power(const Field& F, long long k) const {
        if (in_field) return RadicalScalar{g, 0, F.pow(F.xi(), nu * k)};
        return rs_make(F, g, k);
    }
};

enum class Layout { canonical, standard, structured };

struct Block {
    size_t offset = 0;
    size_t size = 0;
    std::string kind;  // "affine", "origin", "infinity"
    int index = 0;     // affine block number i in [1, q-1]
};

long long count_points(long long q, int m);

// one GF(q)-coordinate representative per rational point of P(w)(F_q)
struct RepresentativeSet {
    const Field* F = nullptr;
    WeightVector w;
    Layout layout = Layout::canonical;
    PointArray pts;
    std::vector<Block> blocks;  // structured layout only

    // structured layout: the base set P^1_{w'} and its per-point lambda data
    PointArray base;
    std::vector<LambdaInfo> base_lambda;

    size_t size() const { return pts.size(); }
    std::span<const fe> point(size_t i) const { return pts[i]; }

    nlohmann::json to_json() const;
};

// orbit gcd: gcd(w_j : j in supp(Q))
int support_gcd(const WeightVector& w, std::span<const fe> Q);

LambdaInfo lambda_for(const Field& F, const WeightVector& w, std::span<const fe> Q);

// the q-1 GF(q)-representatives of [Q], starting at Q
std::vector<Point> orbit(const Field& F, const WeightVector& w, std::span<const fe> Q);

// lexicographically smallest representative in the orbit of Q
Point orbit_canonical(const Field& F, const WeightVector& w, std::span<const fe> Q);

RepresentativeSet enumerate_points(const Field& F, const WeightVector& w,
                                   Layout layout = Layout::canonical);

// ordered set with q-1 shifted affine blocks, the lifted origin and the
// infinity block; requires gcd(w_0, q-1) = 1
RepresentativeSet structured_representatives(const Field& F, const WeightVector& w);

struct GcdReduction {
    bool zero = false;  // gcd(w) does not divide d: degree-d space is {0}
    WeightVector w;
    long long d = 0;
    long long gamma = 1;
};
GcdReduction gcd_reduce(const WeightVector& w, long long d);

struct DelormeReduction {
    long long gamma = 1;
    long long alpha0 = 0;
    long long d0 = 0;  // d = alpha0*w_0 + d0*gamma; d0 < 0 means empty degree
    WeightVector reduced;
};
DelormeReduction delorme_reduce(const WeightVector& w, long long d);

// phi(Q) = (Q_0^gamma, Q_1, ..., Q_m)
Point delorme_map(const Field& F, const DelormeReduction& red, std::span<const fe> Q);

// ordered affine evaluation domain for WRM codes
struct AffineGrid {
    int m = 0;
    PointArray pts;

    static AffineGrid lex(const Field& F, int m);
    // blocks P^1_{w'}, ..., P^{q-1}_{w'} then the origin; matches the affine
    // part of the structured representative set
    static AffineGrid from_structured(const Field& F, const RepresentativeSet& structured);
};

}  // namespace wprm

#endif
