#include "satmps/mps/mps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "satmps/mps/linalg.hpp"

namespace satmps::mps {
namespace {

Eigen::MatrixXd stack_rows(const SiteTensor& a) {
  Eigen::MatrixXd m(2 * a[0].rows(), a[0].cols());
  m.topRows(a[0].rows()) = a[0];
  m.bottomRows(a[1].rows()) = a[1];
  return m;
}

Eigen::MatrixXd stack_cols(const SiteTensor& a) {
  Eigen::MatrixXd m(a[0].rows(), 2 * a[0].cols());
  m.leftCols(a[0].cols()) = a[0];
  m.rightCols(a[1].cols()) = a[1];
  return m;
}

}  // namespace

void TruncationStats::merge(const TruncationStats& other) {
  discarded_weight += other.discarded_weight;
  max_discarded = std::max(max_discarded, other.max_discarded);
  max_bond = std::max(max_bond, other.max_bond);
  hit_cap = hit_cap || other.hit_cap;
  alarm = alarm || other.alarm;
}

Mps::Mps(std::vector<SiteTensor> sites, int center, double log_norm)
    : sites_(std::move(sites)), center_(center), log_norm_(log_norm) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("an MPS needs at least one site");
  if (center < 0 || center >= n) throw std::invalid_argument("canonical center out of range");
  for (int k = 0; k < n; ++k) {
    const auto& a = sites_[static_cast<std::size_t>(k)];
    if (a[0].rows() != a[1].rows() || a[0].cols() != a[1].cols())
      throw std::invalid_argument("physical slices of site " + std::to_string(k) + " differ in shape");
    if (k == 0 && a[0].rows() != 1) throw std::invalid_argument("left boundary bond must be 1");
    if (k == n - 1 && a[0].cols() != 1) throw std::invalid_argument("right boundary bond must be 1");
    if (k > 0 && sites_[static_cast<std::size_t>(k - 1)][0].cols() != a[0].rows())
      throw std::invalid_argument("bond dimension mismatch at bond " + std::to_string(k));
  }
}

Mps Mps::product_plus(int n) {
  if (n < 1) throw std::invalid_argument("product state needs n >= 1");
  const double h = 1.0 / std::sqrt(2.0);
  SiteTensor t{Eigen::MatrixXd::Constant(1, 1, h), Eigen::MatrixXd::Constant(1, 1, h)};
  return Mps(std::vector<SiteTensor>(static_cast<std::size_t>(n), t), 0, 0.0);
}

Mps Mps::from_dense(int n, const std::vector<double>& amplitudes, double cutoff) {
  if (n < 1 || n > 24) throw std::invalid_argument("from_dense supports 1 <= n <= 24");
  if (amplitudes.size() != (std::size_t{1} << n)) throw std::invalid_argument("amplitude vector length is not 2^n");
  std::vector<SiteTensor> sites(static_cast<std::size_t>(n));
  Eigen::MatrixXd rest = Eigen::Map<const Eigen::MatrixXd>(amplitudes.data(), 1, static_cast<Eigen::Index>(amplitudes.size()));
  for (int k = 0; k < n - 1; ++k) {
    const Eigen::Index dl = rest.rows();
    const Eigen::Index half = rest.cols() / 2;
    Eigen::MatrixXd m(2 * dl, half);
    m.topRows(dl) = rest.leftCols(half);
    m.bottomRows(dl) = rest.rightCols(half);
    auto svd = linalg::thin_svd(m);
    Eigen::Index r = linalg::truncation_rank(svd.s, cutoff, 1 << 30);
    if (r == 0) r = 1;
    auto& a = sites[static_cast<std::size_t>(k)];
    a[0] = svd.u.block(0, 0, dl, r);
    a[1] = svd.u.block(dl, 0, dl, r);
    rest = svd.s.head(r).asDiagonal() * svd.vt.topRows(r);
  }
  auto& last = sites[static_cast<std::size_t>(n - 1)];
  last[0] = rest.col(0);
  last[1] = rest.col(1);
  Mps out(std::move(sites), n - 1, 0.0);
  out.normalize_center();
  return out;
}

double Mps::norm_squared() const { return std::exp(2.0 * log_norm_); }

int Mps::bond_dimension(int b) const {
  if (b < 0 || b > size()) throw std::out_of_range("bond index out of range");
  if (b == size()) return 1;
  return static_cast<int>(sites_[static_cast<std::size_t>(b)][0].rows());
}

std::vector<int> Mps::bond_dimensions() const {
  std::vector<int> d(static_cast<std::size_t>(size()) + 1);
  for (int b = 0; b <= size(); ++b) d[static_cast<std::size_t>(b)] = bond_dimension(b);
  return d;
}

int Mps::max_bond_dimension() const {
  int d = 1;
  for (int b = 1; b < size(); ++b) d = std::max(d, bond_dimension(b));
  return d;
}

void Mps::move_center(int target) {
  if (target < 0 || target >= size()) throw std::out_of_range("canonical center target out of range");
  while (center_ < target) {
    auto& a = sites_[static_cast<std::size_t>(center_)];
    const Eigen::Index dl = a[0].rows();
    auto qr = linalg::thin_qr(stack_rows(a));
    a[0] = qr.q.topRows(dl);
    a[1] = qr.q.bottomRows(dl);
    auto& b = sites_[static_cast<std::size_t>(center_ + 1)];
    b[0] = qr.r * b[0];
    b[1] = qr.r * b[1];
    ++center_;
  }
  while (center_ > target) {
    auto& a = sites_[static_cast<std::size_t>(center_)];
    const Eigen::Index dr = a[0].cols();
    auto qr = linalg::thin_qr(stack_cols(a).transpose());
    a[0] = qr.q.topRows(dr).transpose();
    a[1] = qr.q.bottomRows(dr).transpose();
    auto& b = sites_[static_cast<std::size_t>(center_ - 1)];
    const Eigen::MatrixXd rt = qr.r.transpose();
    b[0] = b[0] * rt;
    b[1] = b[1] * rt;
    --center_;
  }
}

void Mps::declare_center(int k) {
  if (k < 0 || k >= size()) throw std::out_of_range("canonical center out of range");
  center_ = k;
}

double Mps::normalize_center(double floor) {
  auto& a = sites_[static_cast<std::size_t>(center_)];
  const double nrm = std::sqrt(a[0].squaredNorm() + a[1].squaredNorm());
  if (!(nrm > floor) || !std::isfinite(nrm))
    throw NormUnderflow("state norm vanished (factor " + std::to_string(nrm) + "): no satisfying amplitude left");
  a[0] /= nrm;
  a[1] /= nrm;
  log_norm_ += std::log(nrm);
  return nrm;
}

std::vector<double> Mps::schmidt_values(int cut) {
  if (cut < 1 || cut >= size()) throw std::invalid_argument("cut must satisfy 1 <= cut <= n-1");
  move_center(cut);
  const Eigen::VectorXd s = linalg::singular_values(stack_cols(sites_[static_cast<std::size_t>(cut)]));
  std::vector<double> out;
  const double threshold = s.size() > 0 ? 1e-14 * s(0) : 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) out.push_back(s(i));
  return out;
}

std::vector<double> Mps::bond_entropies() {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0, size() - 1)));
  for (int cut = 1; cut < size(); ++cut) out.push_back(entropy_from_schmidt(schmidt_values(cut)));
  return out;
}

double Mps::amplitude(std::uint64_t index) const {
  const int n = size();
  if (n > 64) throw std::invalid_argument("amplitude(index) needs n <= 64");
  Eigen::RowVectorXd v = Eigen::RowVectorXd::Ones(1);
  for (int k = 0; k < n; ++k) {
    const int s = static_cast<int>((index >> (n - 1 - k)) & 1U);
    v = v * sites_[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
  }
  return v(0) * std::exp(log_norm_);
}

std::vector<double> Mps::to_dense() const {
  const int n = size();
  if (n > 24) throw std::invalid_argument("to_dense needs n <= 24");
  Eigen::MatrixXd t = Eigen::MatrixXd::Ones(1, 1);
  for (int k = 0; k < n; ++k) {
    const auto& a = sites_[static_cast<std::size_t>(k)];
    const Eigen::MatrixXd t0 = t * a[0];
    const Eigen::MatrixXd t1 = t * a[1];
    Eigen::MatrixXd next(2 * t.rows(), a[0].cols());
    for (Eigen::Index x = 0; x < t.rows(); ++x) {
      next.row(2 * x) = t0.row(x);
      next.row(2 * x + 1) = t1.row(x);
    }
    t = std::move(next);
  }
  const double f = std::exp(log_norm_);
  std::vector<double> out(static_cast<std::size_t>(t.rows()));
  for (Eigen::Index x = 0; x < t.rows(); ++x) out[static_cast<std::size_t>(x)] = t(x, 0) * f;
  return out;
}

double Mps::canonical_error() const {
  double err = 0.0;
  for (int k = 0; k < size(); ++k) {
    const auto& a = sites_[static_cast<std::size_t>(k)];
    if (k < center_) {
      const Eigen::MatrixXd g = a[0].transpose() * a[0] + a[1].transpose() * a[1];
      err = std::max(err, (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
    } else if (k > center_) {
      const Eigen::MatrixXd g = a[0] * a[0].transpose() + a[1] * a[1].transpose();
      err = std::max(err, (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

double overlap(const Mps& a, const Mps& b) {
  if (a.size() != b.size()) throw std::invalid_argument("overlap of MPS with different lengths");
  Eigen::MatrixXd e = Eigen::MatrixXd::Ones(1, 1);
  for (int k = 0; k < a.size(); ++k) {
    const auto& x = a.site(k);
    const auto& y = b.site(k);
    e = x[0].transpose() * e * y[0] + x[1].transpose() * e * y[1];
  }
  return e(0, 0) * std::exp(a.log_norm() + b.log_norm());
}

double entropy_from_schmidt(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v * v;
  if (!(total > 0.0)) return 0.0;
  double s = 0.0;
  for (double v : values) {
    const double p = v * v / total;
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

}  // namespace satmps::mps
