#include "wprm/linear_code.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace wprm {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw precondition_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

nlohmann::json Rational::to_json() const { return {{"num", num}, {"den", den}}; }

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("WPRM_BUDGET")) {
        long long v = std::atoll(s);
        if (v > 0) {
            b.max_codewords = v;
            b.max_subsets = v;
        }
    }
    return b;
}

long long ghw_mds(long long n, long long k, long long r) {
    if (r < 1 || r > k || k > n) throw precondition_error("ghw_mds range violation");
    return n - k + r;
}

SubfieldEmbedding::SubfieldEmbedding(const Field& big, const Field& small)
    : big_(&big), small_(&small) {
    if (big.p() != small.p() || big.e() % small.e() != 0)
        throw precondition_error("not a subfield: " + std::to_string(small.q()) + " in " +
                                 std::to_string(big.q()));
    t_ = big.e() / small.e();

    embed_.assign(small.q(), 0);
    if (small.e() == 1) {
        for (int v = 0; v < small.q(); ++v) embed_[v] = fe(v);  // prime subfield
    } else {
        // smallest root of the small field's modulus inside the big field
        fe eta = 0;
        bool found = false;
        for (int cand = 0; cand < big.q() && !found; ++cand) {
            fe acc = 0;
            const auto& mod = small.modulus();
            for (int i = int(mod.size()) - 1; i >= 0; --i)
                acc = big.add(big.mul(acc, fe(cand)), big.from_int(mod[i]));
            if (acc == 0) {
                eta = fe(cand);
                found = true;
            }
        }
        if (!found) throw consistency_error("no root of subfield modulus");
        for (int v = 0; v < small.q(); ++v) {
            // coefficients of v over GF(p), constant term first
            fe acc = 0;
            int rem = v;
            fe eta_pow = 1;
            for (int i = 0; i < small.e(); ++i) {
                acc = big.add(acc, big.mul(big.from_int(rem % small.p()), eta_pow));
                rem /= small.p();
                eta_pow = big.mul(eta_pow, eta);
            }
            embed_[v] = acc;
        }
    }

    // enumerate all subfield-coordinate combinations over the power basis
    project_.assign(big.q(), -1);
    coords_.assign(size_t(big.q()) * t_, 0);
    std::vector<fe> xi_pow(t_);
    xi_pow[0] = 1;
    for (int s = 1; s < t_; ++s) xi_pow[s] = big.mul(xi_pow[s - 1], big.xi());
    std::vector<fe> digits(t_, 0);
    long long combos = 1;
    for (int s = 0; s < t_; ++s) combos *= small.q();
    for (long long c = 0; c < combos; ++c) {
        long long tmp = c;
        fe val = 0;
        for (int s = 0; s < t_; ++s) {
            digits[s] = fe(tmp % small.q());
            tmp /= small.q();
            val = big.add(val, big.mul(embed_[digits[s]], xi_pow[s]));
        }
        std::copy(digits.begin(), digits.end(), &coords_[size_t(val) * t_]);
    }
    for (int v = 0; v < small.q(); ++v) project_[embed_[v]] = v;
    // the power basis must span: every big element decomposes uniquely
    std::vector<char> seen(big.q(), 0);
    for (long long c = 0; c < combos; ++c) {
        long long tmp = c;
        fe val = 0;
        for (int s = 0; s < t_; ++s) {
            val = big.add(val, big.mul(embed_[fe(tmp % small.q())], xi_pow[s]));
            tmp /= small.q();
        }
        if (seen[val]) throw consistency_error("power basis does not span");
        seen[val] = 1;
    }
}

std::optional<fe> SubfieldEmbedding::project(fe v) const {
    if (project_[v] < 0) return std::nullopt;
    return fe(project_[v]);
}

LinearCode LinearCode::from_rows(Mat rows, std::string label) {
    LinearCode C;
    C.n_ = rows.cols();
    rref(rows);
    C.gen_ = std::move(rows);
    C.label_ = std::move(label);
    return C;
}

LinearCode LinearCode::zero(const Field& F, size_t n) {
    return from_rows(Mat(F, 0, n));
}

LinearCode LinearCode::full(const Field& F, size_t n) {
    Mat m(F, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return from_rows(std::move(m));
}

bool LinearCode::contains(std::span<const fe> v) const {
    const Field& F = field();
    std::vector<fe> w(v.begin(), v.end());
    // gen_ is in RREF: reduce against each row by its pivot
    for (size_t i = 0; i < gen_.rows(); ++i) {
        const fe* r = gen_.row(i);
        size_t lead = 0;
        while (lead < n_ && r[lead] == 0) ++lead;
        if (lead == n_) continue;
        fe c = w[lead];
        if (c != 0) axpy(F, F.neg(c), r, w.data(), n_);
    }
    return std::all_of(w.begin(), w.end(), [](fe x) { return x == 0; });
}

bool LinearCode::subcode_of(const LinearCode& o) const {
    for (size_t i = 0; i < gen_.rows(); ++i)
        if (!o.contains(gen_.row_span(i))) return false;
    return true;
}

LinearCode LinearCode::dual() const {
    LinearCode C;
    C.n_ = n_;
    Mat ns = nullspace(gen_);
    rref(ns);
    C.gen_ = std::move(ns);
    return C;
}

LinearCode LinearCode::sum(const LinearCode& o) const {
    if (n_ != o.n_) throw precondition_error("length mismatch");
    Mat rows(field(), 0, n_);
    for (size_t i = 0; i < gen_.rows(); ++i) rows.append_row(gen_.row_span(i));
    for (size_t i = 0; i < o.gen_.rows(); ++i) rows.append_row(o.gen_.row_span(i));
    return from_rows(std::move(rows));
}

LinearCode LinearCode::intersect(const LinearCode& o) const {
    if (n_ != o.n_) throw precondition_error("length mismatch");
    return dual().sum(o.dual()).dual();
}

LinearCode LinearCode::schur(const LinearCode& o) const {
    if (n_ != o.n_) throw precondition_error("length mismatch");
    const Field& F = field();
    EchelonBasis basis(F, n_);
    std::vector<fe> prod(n_);
    for (size_t i = 0; i < gen_.rows(); ++i) {
        const fe* a = gen_.row(i);
        for (size_t j = 0; j < o.gen_.rows(); ++j) {
            const fe* b = o.gen_.row(j);
            for (size_t c = 0; c < n_; ++c) prod[c] = F.mul(a[c], b[c]);
            basis.insert(prod);
        }
    }
    return from_rows(basis.to_mat());
}

LinearCode LinearCode::subfield_subcode(const Field& small) const {
    const Field& F = field();
    if (&small == &F) return *this;
    SubfieldEmbedding emb(F, small);
    LinearCode D = dual();
    // expand each dual constraint into t constraints over the subfield
    Mat H(small, D.dim() * emb.t(), n_);
    for (size_t i = 0; i < D.dim(); ++i) {
        const fe* h = D.gen().row(i);
        for (size_t j = 0; j < n_; ++j) {
            auto coords = emb.decompose(h[j]);
            for (int s = 0; s < emb.t(); ++s) H.at(i * emb.t() + s, j) = coords[s];
        }
    }
    return from_rows(nullspace(H));
}

LinearCode LinearCode::punctured(const std::vector<int>& cols) const {
    Mat m(field(), gen_.rows(), cols.size());
    for (size_t i = 0; i < gen_.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = gen_.at(i, cols[j]);
    return from_rows(std::move(m));
}

std::vector<int> LinearCode::support() const {
    std::vector<int> s;
    for (size_t c = 0; c < n_; ++c) {
        bool nz = false;
        for (size_t r = 0; r < gen_.rows() && !nz; ++r) nz = gen_.at(r, c) != 0;
        if (nz) s.push_back(int(c));
    }
    return s;
}

namespace {

// max over subsets of given size of dim{c in C : supp(c) within subset},
// via dim = k - rank(columns outside the subset); early exits at `target`
struct SupportSearch {
    const Field& F;
    const Mat& gen;
    std::vector<int> cols;  // support columns
    long long examined = 0;
    long long budget;

    SupportSearch(const LinearCode& C, const Budget& b)
        : F(C.field()), gen(C.gen()), cols(C.support()), budget(b.max_subsets) {}

    int dim_inside(const std::vector<int>& subset) {
        std::vector<char> in(cols.size(), 0);
        for (int idx : subset) in[idx] = 1;
        Mat rest(F, gen.rows(), cols.size() - subset.size());
        size_t c = 0;
        for (size_t j = 0; j < cols.size(); ++j) {
            if (in[j]) continue;
            for (size_t r = 0; r < gen.rows(); ++r) rest.at(r, c) = gen.at(r, cols[j]);
            ++c;
        }
        return int(gen.rows()) - int(rank_of(std::move(rest)));
    }

    // visit all size-s subsets; returns max dim seen (early exit when
    // target reached and stop_at_target)
    int scan(int s, int target, bool stop_at_target) {
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        int n = int(cols.size());
        int best = 0;
        if (s > n) return 0;
        while (true) {
            if (++examined > budget) throw budget_error("support-subset budget exhausted");
            best = std::max(best, dim_inside(idx));
            if (stop_at_target && best >= target) return best;
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        return best;
    }
};

}  // namespace

long long LinearCode::ghw(int r, const Budget& b) const {
    if (r < 1 || size_t(r) > dim()) throw precondition_error("ghw rank out of range");
    SupportSearch search(*this, b);
    for (int s = r; s <= int(search.cols.size()); ++s)
        if (search.scan(s, r, true) >= r) return s;
    throw consistency_error("ghw search exhausted support");
}

std::vector<long long> LinearCode::hierarchy(const Budget& b) const {
    size_t k = dim();
    std::vector<long long> d(k, -1);
    if (k == 0) return d;
    SupportSearch search(*this, b);
    size_t next = 0;  // first r (0-based) still unresolved
    for (int s = 1; s <= int(search.cols.size()) && next < k; ++s) {
        int best = search.scan(s, int(k), false);
        while (next < k && int(next) + 1 <= best) d[next++] = s;
    }
    if (next < k) throw consistency_error("hierarchy search exhausted support");
    return d;
}

long long LinearCode::min_distance(const Budget& b) const {
    size_t k = dim();
    if (k == 0) throw precondition_error("minimum distance of the zero code");
    const Field& F = field();
    double logq = std::log2(double(F.q()));
    bool enumerable = double(k) * logq <= std::log2(double(b.max_codewords));
    if (!enumerable) {
        size_t ns = support().size();
        if (double(ns) <= std::log2(double(b.max_subsets))) return ghw(1, b);
        throw budget_error("minimum distance: " + std::to_string(F.q()) + "^" +
                           std::to_string(k) + " codewords and 2^" + std::to_string(ns) +
                           " supports both exceed the budget");
    }
    // odometer over the message space; stepping digit c -> c+1 adds
    // (enc(c+1) - enc(c)) times the row
    std::vector<fe> cw(n_, 0);
    std::vector<int> digit(k, 0);
    long long best = n_ + 1;
    while (true) {
        size_t pos = 0;
        while (pos < k) {
            int next = digit[pos] + 1 == F.q() ? 0 : digit[pos] + 1;
            axpy(F, F.sub(fe(next), fe(digit[pos])), gen_.row(pos), cw.data(), n_);
            digit[pos] = next;
            if (next != 0) break;
            ++pos;
        }
        if (pos == k) break;  // wrapped around to zero
        long long w = 0;
        for (size_t c = 0; c < n_; ++c) w += cw[c] != 0;
        if (w < best) best = w;
    }
    return best;
}

Rational LinearCode::delta_metric(const Budget& b) const {
    if (dim() == 0) throw precondition_error("delta metric of the zero code");
    return Rational((long long)dim() + min_distance(b), (long long)n_);
}

nlohmann::json LinearCode::to_json() const {
    nlohmann::json j;
    j["q"] = field().q();
    j["n"] = n_;
    j["k"] = dim();
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < gen_.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (size_t c = 0; c < n_; ++c) r.push_back(int(gen_.at(i, c)));
        rows.push_back(std::move(r));
    }
    j["generator"] = std::move(rows);
    if (!label_.empty()) j["label"] = label_;
    return j;
}

}  // namespace wprm
