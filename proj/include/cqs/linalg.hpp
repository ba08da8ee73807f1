#ifndef CQS_LINALG_HPP
#define CQS_LINALG_HPP

#include <Eigen/Core>

#include "cqs/errors.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

/// Exact matrix rank by fraction-free (Bareiss) elimination. Works over any
/// exact field scalar with ==, * and exact /; no pivot-size heuristics, a
/// pivot is any nonzero entry.
template <typename Scalar>
int fraction_free_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    Scalar prev_pivot(1);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (!(m(i, col) == Scalar(0))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev_pivot;
            }
            m(i, col) = Scalar(0);
        }
        prev_pivot = m(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

/// Exact inverse over the rationals (Gauss-Jordan with exact pivots).
/// Throws VerificationFailure on a singular input; the call sites only ever
/// invert matrices that are provably nonsingular.
RatMat exact_inverse(RatMat m);

}  // namespace cqs

#endif  // CQS_LINALG_HPP
