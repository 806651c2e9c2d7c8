#include "wprm/field.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace wprm {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomials over GF(p) as coefficient vectors, constant term first
using Poly = std::vector<int>;

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m monic of degree e
    int e = int(m.size()) - 1;
    for (int i = int(a.size()) - 1; i >= e; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= e; ++j) {
            int k = i - e + j;
            a[k] = ((a[k] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(e);
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
    // trial division of a by monic d
    Poly r = a;
    int dd = int(d.size()) - 1;
    for (int i = int(r.size()) - 1; i >= dd; --i) {
        int c = r[i];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            int k = i - dd + j;
            r[k] = ((r[k] - c * d[j]) % p + p) % p;
        }
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] != 0) return false;
    return true;
}

bool is_irreducible(const Poly& m, int p) {
    int e = int(m.size()) - 1;
    if (m[0] == 0) return false;  // divisible by x
    // trial division by every monic polynomial of degree 1..e/2
    for (int deg = 1; 2 * deg <= e; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            Poly d(deg + 1, 0);
            long long t = v;
            for (int i = 0; i < deg; ++i) {
                d[i] = int(t % p);
                t /= p;
            }
            d[deg] = 1;
            if (poly_divides(d, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw precondition_error("field characteristic must be prime");
    if (e < 1 || e > 8) throw precondition_error("extension degree outside [1, 8]");
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > 256) throw precondition_error("supported range is q <= 256");
    q_ = int(q);

    if (e_ > 1) {
        // lexicographically smallest monic irreducible, coefficient vectors
        // ordered from the constant term upward
        bool found = false;
        for (long long v = 0; v < q && !found; ++v) {
            // decode v as (c_0, ..., c_{e-1}) with c_0 most significant,
            // so ascending v is ascending lex from the constant term upward
            Poly m(e_ + 1, 0);
            long long t = v;
            long long div = q / p;
            for (int i = 0; i < e_; ++i) {
                m[i] = int((t / div) % p);
                t %= div;
                div /= p;
            }
            m[e_] = 1;
            if (is_irreducible(m, p_)) {
                modulus_ = m;
                found = true;
            }
        }
        if (!found) throw consistency_error("no irreducible modulus found");
    }

    auto enc_of = [&](const Poly& a) {
        int v = 0, mult = 1;
        for (int i = 0; i < e_; ++i) {
            v += a[i] * mult;
            mult *= p_;
        }
        return fe(v);
    };
    auto poly_of = [&](fe a) {
        Poly r(e_, 0);
        int v = a;
        for (int i = 0; i < e_; ++i) {
            r[i] = v % p_;
            v /= p_;
        }
        return r;
    };

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = poly_of(fe(a));
        for (int b = 0; b < q_; ++b) {
            Poly pb = poly_of(fe(b));
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[size_t(a) * q_ + b] = enc_of(s);
            if (e_ == 1) {
                mul_[size_t(a) * q_ + b] = fe((a * b) % p_);
            } else {
                Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
                mul_[size_t(a) * q_ + b] = enc_of(prod);
            }
        }
        Poly n(e_);
        for (int i = 0; i < e_; ++i) n[i] = (p_ - pa[i]) % p_;
        neg_[a] = enc_of(n);
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = fe(b);

    // smallest encoding with multiplicative order q-1
    xi_ = 0;
    for (int a = 1; a < q_ && xi_ == 0; ++a)
        if (order(fe(a)) == q_ - 1) xi_ = fe(a);

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    fe cur = 1;
    for (size_t k = 0; k + 1 < size_t(q_); ++k) {
        exp_[k] = cur;
        log_[cur] = int(k);
        cur = mul(cur, xi_);
    }
}

int Field::order(fe a) const {
    if (a == 0) throw std::domain_error("order of zero");
    int n = 1;
    fe cur = a;
    while (cur != 1 && n <= q_) {
        cur = mul(cur, a);
        ++n;
    }
    if (cur != 1) throw consistency_error("multiplicative order exceeded q");
    return n;
}

fe Field::pow(fe a, long long k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    long long r = k % (q_ - 1);
    if (r < 0) r += q_ - 1;
    if (r == 0) return 1;
    long long l = (long long)log_[a] * r % (q_ - 1);
    return exp_[l];
}

fe Field::power_sum(long long gamma) const {
    if (gamma == 0) return 0;  // q copies of 0^0 = 1 vanish in characteristic p
    if (gamma % (q_ - 1) == 0) return neg_[1];
    return 0;
}

fe Field::grid_sum(std::span<const long long> exps) const {
    fe prod = 1;
    for (long long g : exps) prod = mul(prod, power_sum(g));
    return prod;
}

nlohmann::json Field::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["e"] = e_;
    j["modulus"] = modulus_;
    j["xi"] = int(xi_);
    return j;
}

const Field& Field::get(int p, int e) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
    return *it->second;
}

const Field& Field::of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int e = 0;
        long long v = 1;
        while (v < q) {
            v *= p;
            ++e;
        }
        if (v == q) return get(p, e);
        if (q % p == 0) break;
    }
    throw precondition_error("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace wprm
