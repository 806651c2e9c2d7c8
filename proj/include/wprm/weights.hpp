#ifndef WPRM_WEIGHTS_HPP
#define WPRM_WEIGHTS_HPP

#include <numeric>
#include <vector>

#include "wprm/field.hpp"

namespace wprm {

// the weights w = (w_0, ..., w_m)
struct WeightVector {
    std::vector<int> w;

    WeightVector() = default;
    WeightVector(std::initializer_list<int> init) : w(init) { validate(); }
    explicit WeightVector(std::vector<int> v) : w(std::move(v)) { validate(); }

    int m() const { return int(w.size()) - 1; }
    int size() const { return int(w.size()); }
    int operator[](int i) const { return w[i]; }

    long long gcd() const;
    long long lcm() const;

    // gcd(w_j : j != i) = 1 for every i
    bool well_formed() const;

    WeightVector tail() const;          // w' = (w_1, ..., w_m)
    WeightVector suffix(int a) const;   // w(a) = (w_a, ..., w_m)

    bool operator==(const WeightVector&) const = default;

  private:
    void validate() const {
        if (w.empty()) throw precondition_error("empty weight vector");
        for (int wi : w)
            if (wi < 1) throw precondition_error("weights must be >= 1");
    }
};

// lambda^r * a where lambda^g = xi; lies in GF(q) iff r = 0 or a = 0
struct RadicalScalar {
    int g = 1;
    int r = 0;
    fe a = 1;

    bool in_base_field() const { return r == 0 || a == 0; }
};

RadicalScalar rs_make(const Field& F, int g, long long exponent, fe coeff = 1);
RadicalScalar rs_mul(const Field& F, const RadicalScalar& x, const RadicalScalar& y);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace wprm

#endif
