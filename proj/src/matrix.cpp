#include "wprm/matrix.hpp"

#include <algorithm>

namespace wprm {

void Mat::append_row(std::span<const fe> v) {
    if (v.size() != cols_) throw precondition_error("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

void axpy(const Field& F, fe c, const fe* x, fe* z, size_t n) {
    if (c == 0) return;
    const fe* mr = F.mul_row(c);
    for (size_t i = 0; i < n; ++i) {
        fe t = mr[x[i]];
        if (t) z[i] = F.add_row(z[i])[t];
    }
}

size_t rref(Mat& M, std::vector<size_t>* pivot_cols) {
    const Field& F = M.field();
    size_t rows = M.rows(), cols = M.cols();
    size_t rank = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t c = 0; c < cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
        fe inv = F.inv(M.at(rank, col));
        if (inv != 1) {
            const fe* mr = F.mul_row(inv);
            fe* r = M.row(rank);
            for (size_t c = 0; c < cols; ++c) r[c] = mr[r[c]];
        }
        for (size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank) continue;
            fe c2 = M.at(r2, col);
            if (c2 == 0) continue;
            axpy(F, F.neg(c2), M.row(rank), M.row(r2), cols);
        }
        pivots.push_back(col);
        ++rank;
    }
    // drop the zero rows
    Mat compact(F, rank, cols);
    for (size_t r = 0; r < rank; ++r)
        std::copy(M.row(r), M.row(r) + cols, compact.row(r));
    M = std::move(compact);
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return rank;
}

size_t rank_of(Mat M) {
    const Field& F = M.field();
    size_t rows = M.rows(), cols = M.cols();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t c = col; c < cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
        fe inv = F.inv(M.at(rank, col));
        if (inv != 1) {
            const fe* mr = F.mul_row(inv);
            fe* r = M.row(rank);
            for (size_t c = col; c < cols; ++c) r[c] = mr[r[c]];
        }
        for (size_t r2 = rank + 1; r2 < rows; ++r2) {
            fe c2 = M.at(r2, col);
            if (c2 == 0) continue;
            axpy(F, F.neg(c2), M.row(rank) + col, M.row(r2) + col, cols - col);
        }
        ++rank;
    }
    return rank;
}

Mat nullspace(const Mat& M) {
    const Field& F = M.field();
    size_t cols = M.cols();
    Mat R = M;
    std::vector<size_t> pivots;
    size_t rank = rref(R, &pivots);
    std::vector<char> is_pivot(cols, 0);
    for (size_t p : pivots) is_pivot[p] = 1;
    Mat out(F, cols - rank, cols);
    size_t k = 0;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        fe* v = out.row(k);
        v[f] = 1;
        for (size_t i = 0; i < rank; ++i) v[pivots[i]] = F.neg(R.at(i, f));
        ++k;
    }
    return out;
}

bool EchelonBasis::insert(std::span<const fe> v) {
    if (v.size() != cols_) throw precondition_error("row length mismatch");
    const Field& F = *F_;
    std::vector<fe> w(v.begin(), v.end());
    for (size_t i = 0; i < rows_.size(); ++i) {
        fe c = w[pivots_[i]];
        if (c != 0) axpy(F, F.neg(c), rows_[i].data(), w.data(), cols_);
    }
    size_t lead = 0;
    while (lead < cols_ && w[lead] == 0) ++lead;
    if (lead == cols_) return false;
    fe inv = F.inv(w[lead]);
    if (inv != 1) {
        const fe* mr = F.mul_row(inv);
        for (size_t c = 0; c < cols_; ++c) w[c] = mr[w[c]];
    }
    // keep earlier rows reduced against the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        fe c = rows_[i][lead];
        if (c != 0) axpy(F, F.neg(c), w.data(), rows_[i].data(), cols_);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(w));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

bool EchelonBasis::contains(std::span<const fe> v) const {
    const Field& F = *F_;
    std::vector<fe> w(v.begin(), v.end());
    for (size_t i = 0; i < rows_.size(); ++i) {
        fe c = w[pivots_[i]];
        if (c != 0) axpy(F, F.neg(c), rows_[i].data(), w.data(), cols_);
    }
    return std::all_of(w.begin(), w.end(), [](fe x) { return x == 0; });
}

Mat EchelonBasis::to_mat() const {
    Mat M(*F_, rows_.size(), cols_);
    for (size_t i = 0; i < rows_.size(); ++i)
        std::copy(rows_[i].begin(), rows_[i].end(), M.row(i));
    return M;
}

}  // namespace wprm
