#pragma once

#include <vector>

#include "eigenscheme/errors.hpp"
#include "eigenscheme/rational.hpp"
#include "eigenscheme/upoly.hpp"

namespace eigenscheme {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Determinant by Bareiss' fraction-free elimination. Works over any integral
/// domain that provides exact_divide.
template <class S>
S bareiss_determinant(Mat<S> M) {
    if (M.rows() != M.cols()) throw DimensionError("determinant of a non-square matrix");
    const Eigen::Index n = M.rows();
    if (n == 0) return S(1);
    S prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (is_zero(M(k, k))) {
            Eigen::Index p = k + 1;
            while (p < n && is_zero(M(p, k))) ++p;
            if (p == n) return S(0);
            M.row(k).swap(M.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                S t = M(k, k) * M(i, j) - M(i, k) * M(k, j);
                M(i, j) = exact_divide(t, prev);
            }
            M(i, k) = S(0);
        }
        prev = M(k, k);
    }
    S det = M(n - 1, n - 1);
    return sign < 0 ? S(-det) : det;
}

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class S>
std::vector<Eigen::Index> rref(Mat<S>& M) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < M.cols() && row < M.rows(); ++col) {
        Eigen::Index p = row;
        while (p < M.rows() && is_zero(M(p, col))) ++p;
        if (p == M.rows()) continue;
        if (p != row) M.row(row).swap(M.row(p));
        S inv = S(1) / M(row, col);
        for (Eigen::Index j = col; j < M.cols(); ++j) M(row, j) *= inv;
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            if (i == row || is_zero(M(i, col))) continue;
            S f = M(i, col);
            for (Eigen::Index j = col; j < M.cols(); ++j) M(i, j) -= f * M(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
Eigen::Index rank(Mat<S> M) {
    return static_cast<Eigen::Index>(rref(M).size());
}

/// Basis of the right null space, one vector per column.
template <class S>
Mat<S> kernel(Mat<S> M) {
    const auto pivots = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat<S> K = Mat<S>::Zero(M.cols(), M.cols() - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        K(free, k) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) K(pivots[r], k) = -M(static_cast<Eigen::Index>(r), free);
        ++k;
    }
    return K;
}

template <class S>
Mat<S> inverse(const Mat<S>& A) {
    if (A.rows() != A.cols()) throw DimensionError("inverse of a non-square matrix");
    const Eigen::Index n = A.rows();
    Mat<S> aug(n, 2 * n);
    aug << A, Mat<S>::Identity(n, n);
    const auto pivots = rref(aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
        throw InvalidArgument("matrix is singular");
    return aug.rightCols(n);
}

/// Coefficients of det(tI - A), ascending in t, by Faddeev-LeVerrier.
template <class S>
std::vector<S> char_poly(const Mat<S>& A) {
    if (A.rows() != A.cols()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const Eigen::Index n = A.rows();
    std::vector<S> c(n + 1, S(0));
    c[n] = S(1);
    Mat<S> M = Mat<S>::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        M = A * M;
        for (Eigen::Index i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        Mat<S> AM = A * M;
        S tr(0);
        for (Eigen::Index i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

}  // namespace eigenscheme
