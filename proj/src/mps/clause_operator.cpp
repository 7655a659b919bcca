#include "satmps/mps/clause_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "satmps/mps/linalg.hpp"

namespace satmps::mps {

ClauseOperator::ClauseOperator(const sat::Clause& clause, double weight) : weight_(weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) throw std::invalid_argument("gate weight must be finite and >= 0");
  std::array<std::pair<int, int>, 3> lits;
  for (std::size_t i = 0; i < 3; ++i) lits[i] = {clause[i].variable - 1, clause[i].negated ? 1 : 0};
  std::sort(lits.begin(), lits.end());
  for (std::size_t i = 0; i < 3; ++i) {
    sites_[i] = lits[i].first;
    violating_[i] = lits[i].second;
  }
}

ClauseOperator ClauseOperator::imaginary_time(const sat::Clause& clause, double dtau) {
  if (!(dtau >= 0.0)) throw std::invalid_argument("dtau must be non-negative");
  return ClauseOperator(clause, std::isinf(dtau) ? 0.0 : std::exp(-dtau));
}

ClauseOperator ClauseOperator::projector(const sat::Clause& clause) { return ClauseOperator(clause, 0.0); }

ClauseOperator ClauseOperator::linearized(const sat::Clause& clause, double dtau) {
  if (!(dtau >= 0.0)) throw std::invalid_argument("dtau must be non-negative");
  return ClauseOperator(clause, std::max(0.0, 1.0 - dtau));
}

ClauseOperator ClauseOperator::with_weight(const sat::Clause& clause, double violating_weight) {
  return ClauseOperator(clause, violating_weight);
}

std::array<double, 8> ClauseOperator::diagonal() const {
  std::array<double, 8> d;
  d.fill(1.0);
  d[static_cast<std::size_t>(violating_[0] * 4 + violating_[1] * 2 + violating_[2])] = weight_;
  return d;
}

std::vector<SiteTensor> ClauseOperator::mpo() const {
  const int a = sites_[0], b = sites_[1], c = sites_[2];
  std::vector<SiteTensor> w;
  w.reserve(static_cast<std::size_t>(c - a + 1));
  for (int k = a; k <= c; ++k) {
    SiteTensor t;
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXd m;
      if (k == a) {
        m.resize(1, 2);
        m << 1.0, (s == violating_[0] ? weight_ - 1.0 : 0.0);
      } else if (k == c) {
        m.resize(2, 1);
        m << 1.0, (s == violating_[2] ? 1.0 : 0.0);
      } else if (k == b) {
        m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 0) = 1.0;
        m(1, 1) = s == violating_[1] ? 1.0 : 0.0;
      } else {
        m = Eigen::MatrixXd::Identity(2, 2);
      }
      t[static_cast<std::size_t>(s)] = std::move(m);
    }
    w.push_back(std::move(t));
  }
  return w;
}

namespace {

// (W (x) A)[s] with row index alpha*Dl + l and column index beta*Dr + r.
Eigen::MatrixXd kron_site(const Eigen::MatrixXd& w, const Eigen::MatrixXd& a) {
  const Eigen::Index dl = a.rows(), dr = a.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(w.rows() * dl, w.cols() * dr);
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      if (w(i, j) != 0.0) out.block(i * dl, j * dr, dl, dr) = w(i, j) * a;
  return out;
}

}  // namespace

TruncationStats apply_clause(Mps& state, const ClauseOperator& op, const TruncationPolicy& policy) {
  TruncationStats stats;
  stats.max_bond = state.max_bond_dimension();
  if (op.span_end() >= state.size()) throw std::invalid_argument("clause acts beyond the last site");
  if (op.is_identity()) return stats;

  const int a = op.span_begin();
  const int c = op.span_end();
  state.move_center(a);

  const auto w = op.mpo();
  for (int k = a; k <= c; ++k) {
    auto& t = state.site(k);
    const auto& wk = w[static_cast<std::size_t>(k - a)];
    t[0] = kron_site(wk[0], t[0]);
    t[1] = kron_site(wk[1], t[1]);
  }

  // Left-to-right QR: the doubled bonds shrink to their exact rank bound and
  // the whole weight moves onto site c.
  for (int k = a; k < c; ++k) {
    auto& t = state.site(k);
    const Eigen::Index dl = t[0].rows();
    Eigen::MatrixXd m(2 * dl, t[0].cols());
    m.topRows(dl) = t[0];
    m.bottomRows(dl) = t[1];
    auto qr = linalg::thin_qr(m);
    t[0] = qr.q.topRows(dl);
    t[1] = qr.q.bottomRows(dl);
    auto& next = state.site(k + 1);
    next[0] = qr.r * next[0];
    next[1] = qr.r * next[1];
  }

  // Right-to-left SVD with truncation; singular values here are the Schmidt
  // values of the updated state because the left side is isometric.
  for (int k = c; k > a; --k) {
    auto& t = state.site(k);
    const Eigen::Index dr = t[0].cols();
    Eigen::MatrixXd m(t[0].rows(), 2 * dr);
    m.leftCols(dr) = t[0];
    m.rightCols(dr) = t[1];
    auto svd = linalg::thin_svd(m);
    Eigen::Index r = linalg::truncation_rank(svd.s, policy.cutoff, policy.max_bond);
    if (r == 0) r = 1;
    const double total = svd.s.squaredNorm();
    if (total > 0.0 && r < svd.s.size()) {
      const double dropped = svd.s.tail(svd.s.size() - r).squaredNorm() / total;
      stats.discarded_weight += dropped;
      stats.max_discarded = std::max(stats.max_discarded, dropped);
      if (r == policy.max_bond && svd.s(r) >= policy.cutoff * svd.s(0)) {
        stats.hit_cap = true;
        if (dropped > policy.alarm_threshold) stats.alarm = true;
      }
    }
    t[0] = svd.vt.block(0, 0, r, dr);
    t[1] = svd.vt.block(0, dr, r, dr);
    const Eigen::MatrixXd us = svd.u.leftCols(r) * svd.s.head(r).asDiagonal();
    auto& prev = state.site(k - 1);
    prev[0] = prev[0] * us;
    prev[1] = prev[1] * us;
    stats.max_bond = std::max(stats.max_bond, static_cast<int>(r));
  }
  state.declare_center(a);
  state.normalize_center(policy.underflow);
  if (policy.renormalize) state.set_log_norm(0.0);
  return stats;
}

Mps applied(Mps state, const ClauseOperator& op, const TruncationPolicy& policy) {
  apply_clause(state, op, policy);
  return state;
}

}  // namespace satmps::mps
