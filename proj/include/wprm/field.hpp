#ifndef WPRM_FIELD_HPP
#define WPRM_FIELD_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wprm {

// element of GF(q), encoded as an integer in [0, q).
// e = 1: the residue mod p.  e > 1: base-p packing of the coefficient
// vector in the power basis of the modulus, constant term first.
using fe = std::uint8_t;

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct structure_error : precondition_error {
    using precondition_error::precondition_error;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct lambda_field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// internal rank-guard / cross-check failures
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// GF(q) for q = p^e <= 256 with full add/mul tables and log/antilog on a
// fixed primitive element.  Immutable after construction; instances are
// cached and shared, so identity comparison of pointers is meaningful.
class Field {
  public:
    static const Field& get(int p, int e);
    static const Field& of_order(int q);  // factors q = p^e

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // smallest encoding of multiplicative order q-1
    fe xi() const { return xi_; }

    // monic modulus c_0 + c_1 x + ... + x^e; empty when e = 1
    const std::vector<int>& modulus() const { return modulus_; }

    fe add(fe a, fe b) const { return add_[size_t(a) * q_ + b]; }
    fe sub(fe a, fe b) const { return add_[size_t(a) * q_ + neg_[b]]; }
    fe mul(fe a, fe b) const { return mul_[size_t(a) * q_ + b]; }
    fe neg(fe a) const { return neg_[a]; }
    fe inv(fe a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }
    fe div(fe a, fe b) const { return mul(a, inv(b)); }

    // a^k with the convention 0^0 = 1; negative k via the inverse
    fe pow(fe a, long long k) const;

    // discrete log base xi; a must be nonzero
    int log(fe a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }
    // xi^k for any integer k
    fe exp(long long k) const {
        long long r = k % (q_ - 1);
        if (r < 0) r += q_ - 1;
        return exp_[r];
    }

    // embed an integer through the prime subfield
    fe from_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return fe(r);
    }

    // row pointers for inner loops: mul_row(c)[x] = c*x, add_row(a)[b] = a+b
    const fe* mul_row(fe c) const { return &mul_[size_t(c) * q_]; }
    const fe* add_row(fe a) const { return &add_[size_t(a) * q_]; }

    int order(fe a) const;  // multiplicative order, a != 0

    // sum of z^gamma over all z in GF(q); 0^0 = 1
    fe power_sum(long long gamma) const;
    // sum of the monomial x_1^{a_1}...x_l^{a_l} over the full grid GF(q)^l
    fe grid_sum(std::span<const long long> exps) const;

    nlohmann::json to_json() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(int p, int e);

    int p_, e_, q_;
    fe xi_;
    std::vector<int> modulus_;
    std::vector<fe> add_, mul_, neg_, inv_, exp_;
    std::vector<int> log_;
};

}  // namespace wprm

#endif
