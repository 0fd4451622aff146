#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bnsi/field.hpp"

namespace bnsi {

using Vec = std::vector<Elem>;  // row vector over a field

/// Dense matrix over GF(q), row-major. Immutable use is the norm: all
/// algorithms below return fresh matrices and never mutate their inputs.
class Matrix {
public:
    Matrix() : field_(nullptr), rows_(0), cols_(0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(const Field& f, std::vector<Vec> rows);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows) {
        return Matrix(f, rows);
    }

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    std::vector<Vec> to_rows() const;

    /// Rows with the given 0-based indices, in the given order.
    Matrix select_rows(const std::vector<int>& idx) const;
    Matrix transpose() const;
    Matrix mul(const Matrix& rhs) const;
    /// Stack other below this (column counts must match).
    Matrix vstack(const Matrix& below) const;
    /// This, extended by extra zero columns on the right.
    Matrix pad_cols(std::size_t extra) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
               (rows_ * cols_ == 0 || field_->q() == o.field_->q());
    }

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// x * M for a row vector x of length M.rows().
Vec vec_mat_mul(const Vec& x, const Matrix& M);
/// M * x^T for a row vector x of length M.cols(); returns a column as Vec.
Vec mat_vec_mul(const Matrix& M, const Vec& x);

/// Reduced row echelon form: leftmost pivot, topmost row, pivots scaled to 1,
/// full reduction above and below. Deterministic, hence bit-reproducible.
struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
    int rank;
};
Echelon row_reduce(const Matrix& M);

int mat_rank(const Matrix& M);

/// v in rowspan(M), decided by rank([M; v]) == rank(M).
bool rowspan_contains(const Matrix& M, const Vec& v);

/// Unique RREF basis of {x : M x^T = 0}, stacked as rows ((cols - rank) of them).
Matrix kernel_basis(const Matrix& M);

/// Unique RREF basis of {z : z M = 0}, stacked as rows ((rows - rank) of them).
Matrix left_null_space(const Matrix& M);

/// Parity check H of rowspan(G): H G^T = 0, H has cols(G) - rows(G)
/// independent rows in RREF. Throws DependentRows if rank(G) < rows(G).
Matrix parity_check_of_rowspace(const Matrix& G);

int hamming_weight(const Vec& v);

/// Big-endian base-q encoding: v[0] is the most significant digit, so numeric
/// order of codes equals lexicographic order of vectors.
std::uint64_t vec_encode(const Vec& v, std::uint32_t q);
Vec vec_decode(std::uint64_t code, std::size_t n, std::uint32_t q);

std::string vec_to_string(const Vec& v);

/// Text format: header "rows cols q" (or "rows cols p k"), then one line of
/// integer-encoded entries per row.
std::string save_matrix(const Matrix& M);
Matrix load_matrix(std::istream& in);
Matrix load_matrix_string(const std::string& text);
Matrix load_matrix_file(const std::string& path);
void save_matrix_file(const Matrix& M, const std::string& path);

}  // namespace bnsi
