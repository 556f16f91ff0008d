#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "conic/rational.hpp"

namespace conic {

/// Dense matrix over the rationals. All combinatorial decisions in the
/// library (ranks, face identification, general position) run through this
/// type so they are tolerance-free; floating point appears only on the
/// sampling side (Eigen).
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMat(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMat identity(std::size_t n);
    static RatMat zero(std::size_t rows, std::size_t cols) { return RatMat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMat& other) const = default;

    RatMat transposed() const;
    RatMat row(std::size_t i) const;
    RatMat col(std::size_t j) const;
    std::vector<Rational> row_vec(std::size_t i) const;
    std::vector<Rational> col_vec(std::size_t j) const;

    void append_row(const std::vector<Rational>& r);
    void append_col(const std::vector<Rational>& c);

    bool is_zero() const;

    Eigen::MatrixXd to_eigen() const;
    static RatMat from_eigen_exact(const Eigen::MatrixXd& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
std::vector<Rational> operator*(const RatMat& a, const std::vector<Rational>& x);

/// Stacks rows of a on top of rows of b (column counts must agree; an empty
/// operand passes through).
RatMat vstack(const RatMat& a, const RatMat& b);
/// Concatenates columns.
RatMat hstack(const RatMat& a, const RatMat& b);

/// Reduced row echelon form in place; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(RatMat& m);

/// Exact row rank.
std::size_t rank(const RatMat& m);

/// Basis of {x : Mx = 0}, one column per basis vector. cols(result) =
/// cols(M) - rank(M).
RatMat null_space(const RatMat& m);

/// Canonical basis of the row space: RREF rows with zero rows dropped.
/// Equal row spaces produce identical matrices, so this doubles as a
/// dictionary key for spans.
RatMat row_space_basis(const RatMat& m);

/// Exact inverse; nothing if singular.
std::optional<RatMat> inverse(const RatMat& m);

bool is_exactly_orthogonal(const RatMat& m);

/// Orthonormalizes the columns of v (same span, QᵀQ = I). Throws
/// RankDeficient when the columns are dependent at relative tolerance 1e-10.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& v);

/// Column count of an ONB of the column span, at relative tolerance 1e-10.
int float_rank(const Eigen::MatrixXd& m, double tol = 1e-10);

} // namespace conic
