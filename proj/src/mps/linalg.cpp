#include "satmps/mps/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <vector>

extern "C" void openblas_set_num_threads(int num_threads);

namespace satmps::linalg {
namespace {

// Threading stays at the instance level; the BLAS itself runs single-threaded
// so concurrent workers do not oversubscribe and results stay reproducible.
void pin_blas_threads() {
  static const bool once = [] {
    openblas_set_num_threads(1);
    return true;
  }();
  (void)once;
}

Svd eigen_svd(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return Svd{svd.matrixU(), svd.singularValues(), svd.matrixV().transpose()};
}

}  // namespace

Svd thin_svd(const Eigen::MatrixXd& a) {
  pin_blas_threads();
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  if (k == 0) return Svd{Eigen::MatrixXd(m, 0), Eigen::VectorXd(0), Eigen::MatrixXd(0, n)};
  Eigen::MatrixXd work = a;
  Svd out{Eigen::MatrixXd(m, k), Eigen::VectorXd(k), Eigen::MatrixXd(k, n)};
  const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, work.data(), m, out.s.data(), out.u.data(), m,
                                         out.vt.data(), k);
  if (info != 0) return eigen_svd(a);
  return out;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  pin_blas_threads();
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  if (k == 0) return Eigen::VectorXd(0);
  Eigen::MatrixXd work = a;
  Eigen::VectorXd s(k);
  const lapack_int info =
      LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) return Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues();
  return s;
}

Qr thin_qr(const Eigen::MatrixXd& a) {
  const Eigen::Index k = std::min(a.rows(), a.cols());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Qr out;
  out.q = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), k);
  out.r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  return out;
}

Eigen::Index truncation_rank(const Eigen::VectorXd& s, double cutoff, int max_rank) {
  if (s.size() == 0 || !(s(0) > 0.0)) return 0;
  Eigen::Index r = 1;
  const double threshold = cutoff * s(0);
  while (r < s.size() && r < max_rank && s(r) >= threshold && s(r) > 0.0) ++r;
  return r;
}

}  // namespace satmps::linalg
