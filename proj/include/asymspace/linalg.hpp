#pragma once

#include <optional>
#include <vector>

#include "asymspace/vec.hpp"

namespace asymspace {

/// Dense rational matrix, row major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat();
        Mat m(rows.size(), rows[0].dim());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != m.cols_) throw InputError("Mat: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Mat from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return Mat();
        Mat m(cols[0].dim(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].dim() != m.rows_) throw InputError("Mat: ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Vec apply(const Vec& x) const {
        if (x.dim() != cols_) throw InputError("Mat::apply: dimension mismatch");
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rat acc;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Row echelon reduction of [A | B] done in place; returns the pivot columns
/// of A. B may have zero columns.
inline std::vector<std::size_t> row_reduce(Mat& a, Mat& b) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a(piv, c).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(r, j), b(piv, j));
        }
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = 0; j < n; ++j) a(r, j) *= inv;
        for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

inline std::size_t rank(Mat a) {
    Mat dummy(a.rows(), 0);
    return row_reduce(a, dummy).size();
}

inline std::size_t rank_of_rows(const std::vector<Vec>& rows) { return rank(Mat::from_rows(rows)); }

/// Any particular solution of A x = b, or nullopt if inconsistent.
inline std::optional<Vec> solve_linear(Mat a, Vec b) {
    if (a.rows() != b.dim()) throw InputError("solve_linear: dimension mismatch");
    Mat rhs(b.dim(), 1);
    for (std::size_t i = 0; i < b.dim(); ++i) rhs(i, 0) = b[i];
    auto pivots = row_reduce(a, rhs);
    // inconsistent iff a zero row of A has nonzero rhs
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (!rhs(i, 0).is_zero()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rhs(k, 0);
    return x;
}

/// Inverse of a square nonsingular matrix, or nullopt.
inline std::optional<Mat> inverse(Mat a) {
    if (a.rows() != a.cols()) throw InputError("inverse: matrix not square");
    Mat inv = Mat::identity(a.rows());
    auto pivots = row_reduce(a, inv);
    if (pivots.size() != a.rows()) return std::nullopt;
    return inv;
}

/// Extends the given independent vectors to a basis of the ambient space by
/// appending standard unit vectors. Input vectors must be independent.
inline std::vector<Vec> complete_to_basis(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    std::vector<Vec> basis = vectors;
    for (std::size_t j = 0; j < ambient_dim && basis.size() < ambient_dim; ++j) {
        Vec e = Vec::unit(ambient_dim, j);
        basis.push_back(e);
        if (rank_of_rows(basis) != basis.size()) basis.pop_back();
    }
    return basis;
}

}  // namespace asymspace
