// Dense exact linear algebra over Q (mpq_class) or Q(i, sqrt p) (Scalar).
#pragma once

#include "lie/scalar.hpp"

#include <optional>
#include <vector>

namespace lie {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

template <class T>
using Vec = std::vector<T>;

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T(0)) {}

    T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    // Columns are the given vectors.
    static Mat from_columns(const std::vector<Vec<T>>& cols_, int height) {
        Mat m(height, static_cast<int>(cols_.size()));
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < height; ++i) m(i, j) = cols_[j][i];
        return m;
    }
    static Mat from_rows(const std::vector<Vec<T>>& rows_, int width) {
        Mat m(static_cast<int>(rows_.size()), width);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < width; ++j) m(i, j) = rows_[i][j];
        return m;
    }
    Vec<T> column(int j) const {
        Vec<T> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool is_zero_matrix() const {
        for (const T& x : data)
            if (!lie::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
    }
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& a = x(i, k);
            if (is_zero(a)) continue;
            for (int j = 0; j < y.cols; ++j)
                if (!is_zero(y(k, j))) z(i, j) += a * y(k, j);
        }
    return z;
}

template <class T>
Vec<T> operator*(const Mat<T>& x, const Vec<T>& v) {
    Vec<T> out(x.rows, T(0));
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k)
            if (!is_zero(x(i, k)) && !is_zero(v[k])) out[i] += x(i, k) * v[k];
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (int j = c; j < m.cols; ++j)
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Mat<T> m) {
    return static_cast<int>(rref(m).size());
}

template <class T>
int rank_of_vectors(const std::vector<Vec<T>>& vs, int dim) {
    if (vs.empty()) return 0;
    return rank(Mat<T>::from_rows(vs, dim));
}

// Basis of {x : m x = 0}.
template <class T>
std::vector<Vec<T>> kernel(Mat<T> m) {
    std::vector<int> piv = rref(m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vec<T>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        Vec<T> x(m.cols, T(0));
        x[f] = T(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (!is_zero(m(static_cast<int>(r), f))) x[piv[r]] = -m(static_cast<int>(r), f);
        out.push_back(std::move(x));
    }
    return out;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
    const int n = m.rows;
    Mat<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    std::vector<int> piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Some x with a x = b, if one exists.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b) {
    Mat<T> aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols) return std::nullopt;
    Vec<T> x(a.cols, T(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols);
    return x;
}

// Indices of a maximal independent subfamily, chosen greedily in order.
template <class T>
std::vector<int> independent_subset(const std::vector<Vec<T>>& vs, int dim) {
    std::vector<int> chosen;
    std::vector<Vec<T>> basis;  // kept in echelon form
    std::vector<int> lead;
    for (int k = 0; k < static_cast<int>(vs.size()); ++k) {
        Vec<T> v = vs[k];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (is_zero(v[lead[b]])) continue;
            T f = v[lead[b]];
            for (int j = 0; j < dim; ++j)
                if (!is_zero(basis[b][j])) v[j] -= f * basis[b][j];
        }
        int l = -1;
        for (int j = 0; j < dim; ++j)
            if (!is_zero(v[j])) {
                l = j;
                break;
            }
        if (l < 0) continue;
        T inv = T(1) / v[l];
        for (int j = 0; j < dim; ++j)
            if (!is_zero(v[j])) v[j] *= inv;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (is_zero(basis[b][l])) continue;
            T f = basis[b][l];
            for (int j = 0; j < dim; ++j)
                if (!is_zero(v[j])) basis[b][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        lead.push_back(l);
        chosen.push_back(k);
    }
    return chosen;
}

inline Vec<Scalar> to_scalar(const Vec<Rational>& v) {
    Vec<Scalar> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i]);
    return out;
}

}  // namespace lie
