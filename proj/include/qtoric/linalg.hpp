#pragma once

#include "qtoric/exact.hpp"

#include <stdexcept>

namespace qtoric {

/// Determinant by fraction-free (Bareiss) elimination. Exact over the
/// integers; every division below is exact by Sylvester's identity.
template <class Derived>
Int bareiss_determinant(const Eigen::MatrixBase<Derived>& input)
{
    if (input.rows() != input.cols())
        throw std::invalid_argument("bareiss_determinant: matrix must be square");
    const Eigen::Index n = input.rows();
    if (n == 0)
        return Int(1);

    IntMatrix m = input.template cast<Int>();
    Int prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index pivot = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { pivot = r; break; }
            if (pivot < 0)
                return Int(0);
            m.row(k).swap(m.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

/// Rank over the rationals, by fraction-free elimination with row and
/// column pivoting. Entries stay integral throughout.
template <class Derived>
int integer_rank(const Eigen::MatrixBase<Derived>& input)
{
    IntMatrix m = input.template cast<Int>();
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Int prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) { pivot = i; break; }
        if (pivot < 0)
            continue;
        if (pivot != r)
            m.row(r).swap(m.row(pivot));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

namespace detail {

inline IntMatrix strike(const IntMatrix& m, Eigen::Index row, Eigen::Index col)
{
    const Eigen::Index n = m.rows();
    IntMatrix out(n - 1, n - 1);
    for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
        if (i == row) continue;
        for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
            if (j == col) continue;
            out(oi, oj) = m(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace detail

/// Inverse of an integer matrix with det = ±1, itself integral:
/// inv = adj / det = det * adj. Throws if the determinant is not ±1.
template <class Derived>
IntMatrix unimodular_inverse(const Eigen::MatrixBase<Derived>& input)
{
    IntMatrix m = input.template cast<Int>();
    if (m.rows() != m.cols())
        throw std::invalid_argument("unimodular_inverse: matrix must be square");
    const Eigen::Index n = m.rows();
    const Int det = bareiss_determinant(m);
    if (det != 1 && det != -1)
        throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
    IntMatrix inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Int cof = bareiss_determinant(detail::strike(m, i, j));
            inv(j, i) = ((i + j) % 2 == 0 ? cof : Int(-cof)) * det;
        }
    return inv;
}

template <class Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        return false;
    const Int det = bareiss_determinant(m);
    return det == 1 || det == -1;
}

}  // namespace qtoric
