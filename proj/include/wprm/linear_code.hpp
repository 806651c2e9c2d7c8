#ifndef WPRM_LINEAR_CODE_HPP
#define WPRM_LINEAR_CODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "wprm/matrix.hpp"

namespace wprm {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator==(const Rational& o) const = default;
    nlohmann::json to_json() const;
};

// search budgets; WPRM_BUDGET in the environment overrides both caps
struct Budget {
    long long max_codewords = 10'000'000;
    long long max_subsets = 1ll << 24;

    static Budget from_env();
};

long long ghw_mds(long long n, long long k, long long r);

// embedding of GF(q') into GF(q) with q = q'^t, through the power basis
// {1, xi, ..., xi^{t-1}} of the big field's primitive element
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(const Field& big, const Field& small);

    const Field& big() const { return *big_; }
    const Field& small() const { return *small_; }
    int t() const { return t_; }

    fe embed(fe s) const { return embed_[s]; }
    // inverse of embed; empty when v lies outside the subfield
    std::optional<fe> project(fe v) const;
    // coordinates of v over the power basis, as small-field encodings
    std::span<const fe> decompose(fe v) const { return {&coords_[size_t(v) * t_], size_t(t_)}; }

  private:
    const Field* big_;
    const Field* small_;
    int t_;
    std::vector<fe> embed_;
    std::vector<int> project_;  // -1 when outside
    std::vector<fe> coords_;
};

// a code as a row space with the reduced row echelon generator matrix as the
// canonical form; two codes are equal iff their canonical matrices are
class LinearCode {
  public:
    LinearCode() = default;
    static LinearCode from_rows(Mat rows, std::string label = "");
    static LinearCode zero(const Field& F, size_t n);
    static LinearCode full(const Field& F, size_t n);

    const Field& field() const { return gen_.field(); }
    size_t n() const { return n_; }
    size_t dim() const { return gen_.rows(); }
    const Mat& gen() const { return gen_; }
    const std::string& label() const { return label_; }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }
    bool contains(std::span<const fe> v) const;
    bool subcode_of(const LinearCode& o) const;

    LinearCode dual() const;
    LinearCode sum(const LinearCode& o) const;
    LinearCode intersect(const LinearCode& o) const;
    LinearCode hull() const { return intersect(dual()); }
    LinearCode schur(const LinearCode& o) const;
    LinearCode subfield_subcode(const Field& small) const;
    LinearCode punctured(const std::vector<int>& cols) const;

    std::vector<int> support() const;
    bool degenerate() const { return support().size() < n_; }

    long long min_distance(const Budget& b = Budget::from_env()) const;
    long long ghw(int r, const Budget& b = Budget::from_env()) const;
    std::vector<long long> hierarchy(const Budget& b = Budget::from_env()) const;
    Rational delta_metric(const Budget& b = Budget::from_env()) const;

    nlohmann::json to_json() const;

  private:
    size_t n_ = 0;
    Mat gen_;
    std::string label_;
};

}  // namespace wprm

#endif
