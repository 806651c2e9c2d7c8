#ifndef WPRM_MATRIX_HPP
#define WPRM_MATRIX_HPP

#include <span>
#include <vector>

#include "wprm/field.hpp"

namespace wprm {

// dense row-major matrix over GF(q)
class Mat {
  public:
    Mat() = default;
    Mat(const Field& F, size_t rows, size_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const Field& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    fe* row(size_t r) { return a_.data() + r * cols_; }
    const fe* row(size_t r) const { return a_.data() + r * cols_; }
    std::span<const fe> row_span(size_t r) const { return {row(r), cols_}; }
    fe& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    fe at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    void append_row(std::span<const fe> v);
    void clear_rows() { rows_ = 0; a_.clear(); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    const Field* F_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<fe> a_;
};

// z += c * x
void axpy(const Field& F, fe c, const fe* x, fe* z, size_t n);

// reduced row echelon form in place; returns the rank and shrinks the matrix
// to its nonzero rows.  pivot_cols, when given, receives the pivot columns.
size_t rref(Mat& M, std::vector<size_t>* pivot_cols = nullptr);

size_t rank_of(Mat M);

// basis of {x : M x^T = 0} as rows
Mat nullspace(const Mat& M);

// streaming echelon basis; keeps inserted independent rows reduced
class EchelonBasis {
  public:
    EchelonBasis(const Field& F, size_t cols) : F_(&F), cols_(cols) {}

    // returns true when the row was independent and absorbed
    bool insert(std::span<const fe> v);
    bool contains(std::span<const fe> v) const;
    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    Mat to_mat() const;

  private:
    const Field* F_;
    size_t cols_;
    std::vector<std::vector<fe>> rows_;  // ascending pivot order
    std::vector<size_t> pivots_;
};

}  // namespace wprm

#endif
