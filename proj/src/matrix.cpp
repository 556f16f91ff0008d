#include "conic/matrix.hpp"

#include "conic/errors.hpp"

namespace conic {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer for RatMat");
        for (const auto& x : r) data_.push_back(x);
    }
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMat RatMat::row(std::size_t i) const {
    RatMat r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
}

RatMat RatMat::col(std::size_t j) const {
    RatMat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

std::vector<Rational> RatMat::row_vec(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<Rational> RatMat::col_vec(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void RatMat::append_row(const std::vector<Rational>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void RatMat::append_col(const std::vector<Rational>& c) {
    if (rows_ == 0 && cols_ == 0) rows_ = c.size();
    if (c.size() != rows_) throw DimensionMismatch("append_col: height mismatch");
    RatMat out(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        out(i, cols_) = c[i];
    }
    *this = std::move(out);
}

bool RatMat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Eigen::MatrixXd RatMat::to_eigen() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = to_double((*this)(i, j));
    return m;
}

RatMat RatMat::from_eigen_exact(const Eigen::MatrixXd& m) {
    RatMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = rational_from_double(m(i, j));
    return out;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
    RatMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Rational> operator*(const RatMat& a, const std::vector<Rational>& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape");
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

RatMat vstack(const RatMat& a, const RatMat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack width mismatch");
    RatMat c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

RatMat hstack(const RatMat& a, const RatMat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack height mismatch");
    RatMat c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

std::vector<std::size_t> rref_in_place(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMat& m) {
    RatMat copy = m;
    return rref_in_place(copy).size();
}

RatMat null_space(const RatMat& m) {
    RatMat r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    RatMat basis(m.cols(), m.cols() - pivots.size());
    std::size_t bcol = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, bcol) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) basis(pivots[pi], bcol) = -r(pi, free_col);
        ++bcol;
    }
    return basis;
}

RatMat row_space_basis(const RatMat& m) {
    RatMat r = m;
    auto pivots = rref_in_place(r);
    RatMat basis(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r(i, j);
    return basis;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    RatMat aug = hstack(m, RatMat::identity(n));
    auto pivots = rref_in_place(aug);
    // singular iff a pivot escapes into the identity block
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

bool is_exactly_orthogonal(const RatMat& m) {
    if (m.rows() != m.cols()) return false;
    return m.transposed() * m == RatMat::identity(m.rows());
}

int float_rank(const Eigen::MatrixXd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    double scale = m.colwise().norm().maxCoeff();
    if (scale == 0.0) return 0;
    qr.setThreshold(tol);
    return static_cast<int>(qr.rank());
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& v) {
    if (v.cols() == 0) return Eigen::MatrixXd(v.rows(), 0);
    if (float_rank(v) < v.cols()) throw RankDeficient("orthonormal_basis: dependent columns");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(v.rows(), v.cols());
    return q;
}

} // namespace conic
