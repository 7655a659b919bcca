#pragma once

#include <Eigen/Dense>

namespace satmps::linalg {

struct Svd {
  Eigen::MatrixXd u;   // rows x r
  Eigen::VectorXd s;   // descending
  Eigen::MatrixXd vt;  // r x cols
};

// Thin SVD via LAPACK divide-and-conquer, falling back to Eigen's BDCSVD if
// the LAPACK driver reports non-convergence.
Svd thin_svd(const Eigen::MatrixXd& a);
Eigen::VectorXd singular_values(const Eigen::MatrixXd& a);

struct Qr {
  Eigen::MatrixXd q;  // rows x k, orthonormal columns
  Eigen::MatrixXd r;  // k x cols
};

// Thin Householder QR, k = min(rows, cols).
Qr thin_qr(const Eigen::MatrixXd& a);

// Keep the leading singular values with s_i >= cutoff * s_0, at most max_rank
// and at least one (if s_0 > 0). Returns the rank kept.
Eigen::Index truncation_rank(const Eigen::VectorXd& s, double cutoff, int max_rank);

}  // namespace satmps::linalg
