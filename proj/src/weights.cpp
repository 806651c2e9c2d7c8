#include "wprm/weights.hpp"

namespace wprm {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long WeightVector::gcd() const {
    long long g = 0;
    for (int wi : w) g = std::gcd(g, (long long)wi);
    return g;
}

long long WeightVector::lcm() const {
    long long l = 1;
    for (int wi : w) l = std::lcm(l, (long long)wi);
    return l;
}

bool WeightVector::well_formed() const {
    for (size_t i = 0; i < w.size(); ++i) {
        long long g = 0;
        for (size_t j = 0; j < w.size(); ++j)
            if (j != i) g = std::gcd(g, (long long)w[j]);
        if (w.size() > 1 && g != 1) return false;
    }
    return true;
}

WeightVector WeightVector::tail() const {
    if (w.size() < 2) throw precondition_error("tail of a length-1 weight vector");
    return WeightVector(std::vector<int>(w.begin() + 1, w.end()));
}

WeightVector WeightVector::suffix(int a) const {
    if (a < 0 || a > m()) throw precondition_error("suffix index out of range");
    return WeightVector(std::vector<int>(w.begin() + a, w.end()));
}

RadicalScalar rs_make(const Field& F, int g, long long exponent, fe coeff) {
    if (g < 1) throw precondition_error("radical index must be >= 1");
    long long r = exponent % g;
    if (r < 0) r += g;
    long long carry = (exponent - r) / g;  // lambda^exponent = xi^carry * lambda^r
    return RadicalScalar{g, int(r), F.mul(coeff, F.pow(F.xi(), carry))};
}

RadicalScalar rs_mul(const Field& F, const RadicalScalar& x, const RadicalScalar& y) {
    if (x.g != y.g) throw precondition_error("radical scalars over different indices");
    int s = x.r + y.r;
    fe a = F.mul(x.a, y.a);
    if (s >= x.g) {
        s -= x.g;
        a = F.mul(a, F.xi());
    }
    return RadicalScalar{x.g, s, a};
}

}  // namespace wprm
