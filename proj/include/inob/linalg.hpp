// Exact linear algebra over a field scalar (Gauss-Jordan elimination).
//
// Everything here is generic in the scalar but only meaningful for exact
// fields: pivots are selected by "!= 0", never by magnitude.
#ifndef INOB_LINALG_HPP
#define INOB_LINALG_HPP

#include "inob/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace inob {

template <typename Scalar>
struct EchelonForm {
    Matrix<Scalar> reduced;               // reduced row echelon form
    std::vector<Eigen::Index> pivots;     // pivot column of each nonzero row
    Scalar determinant_factor{1};         // product of pivots times row-swap sign

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    EchelonForm<Scalar> out;
    out.reduced = a;
    Matrix<Scalar>& m = out.reduced;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = row;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            m.row(pivot).swap(m.row(row));
            out.determinant_factor = -out.determinant_factor;
        }
        const Scalar p = m(row, col);
        out.determinant_factor *= p;
        for (Eigen::Index j = col; j < cols; ++j) m(row, j) /= p;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Scalar f = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
    return reduced_row_echelon(a).rank();
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (a.rows() == 0) return Scalar(1);
    auto ech = reduced_row_echelon(a);
    if (ech.rank() < a.rows()) return Scalar(0);
    return ech.determinant_factor;
}

/// Columns form a basis of { x : a x = 0 }.
template <typename Derived>
Matrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const auto ech = reduced_row_echelon(a);
    const Eigen::Index cols = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<Scalar> basis(cols, cols - ech.rank());
    basis.setZero();
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(free, k) = Scalar(1);
        for (Eigen::Index r = 0; r < ech.rank(); ++r) {
            basis(ech.pivots[static_cast<std::size_t>(r)], k) = -ech.reduced(r, free);
        }
        ++k;
    }
    return basis;
}

template <typename Scalar>
struct LinearSolution {
    bool consistent = false;
    Eigen::Index rank = 0;
    Vector<Scalar> solution;   // one particular solution (free variables 0)
};

/// Solves a x = b exactly. An inconsistent system is reported, not thrown.
template <typename DerivedA, typename DerivedB>
LinearSolution<typename DerivedA::Scalar> solve_linear(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
    Matrix<Scalar> augmented(a.rows(), a.cols() + 1);
    augmented.leftCols(a.cols()) = a;
    augmented.col(a.cols()) = b;
    const auto ech = reduced_row_echelon(augmented);

    LinearSolution<Scalar> out;
    out.rank = 0;
    out.consistent = true;
    for (Eigen::Index p : ech.pivots) {
        if (p == a.cols()) {
            out.consistent = false;
        } else {
            ++out.rank;
        }
    }
    if (!out.consistent) return out;
    out.solution = Vector<Scalar>::Zero(a.cols());
    for (Eigen::Index r = 0; r < out.rank; ++r) {
        out.solution[ech.pivots[static_cast<std::size_t>(r)]] = ech.reduced(r, a.cols());
    }
    return out;
}

template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
    Matrix<Scalar> augmented(n, 2 * n);
    augmented.leftCols(n) = a;
    augmented.rightCols(n) = Matrix<Scalar>::Identity(n, n);
    const auto ech = reduced_row_echelon(augmented);
    if (ech.rank() < n || ech.pivots.back() >= n) {
        throw std::domain_error("inverse: matrix is singular");
    }
    return ech.reduced.rightCols(n);
}

}  // namespace inob

#endif  // INOB_LINALG_HPP
