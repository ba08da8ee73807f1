#include "cqs/linalg.hpp"

namespace cqs {

RatMat exact_inverse(RatMat m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw InvalidInput("exact_inverse: matrix not square");
    RatMat inv = RatMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i) {
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw VerificationFailure("exact_inverse: singular matrix");
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            inv.row(piv).swap(inv.row(col));
        }
        Rat p = m(col, col);
        for (Eigen::Index j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace cqs
