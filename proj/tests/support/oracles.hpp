#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library code it is used to check; only plain data types are shared.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "satmps/sat/cnf.hpp"

namespace oracle {

// Bit of variable v (1-based) in basis index x of an n-bit register.
inline bool bit(std::uint64_t x, int n, int v) { return (x >> (n - v)) & 1U; }

inline int energy(const satmps::sat::CnfInstance& inst, std::uint64_t x) {
  int e = 0;
  for (const auto& c : inst.clauses()) {
    bool sat = false;
    for (const auto& l : c.literals()) sat = sat || (bit(x, inst.n(), l.variable) != l.negated);
    e += sat ? 0 : 1;
  }
  return e;
}

inline std::uint64_t count(const satmps::sat::CnfInstance& inst) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << inst.n()); ++x) c += energy(inst, x) == 0;
  return c;
}

// Normalized exp(-tau E(x)) over all x; tau = inf keeps only E = 0.
inline std::vector<double> ite_state(const satmps::sat::CnfInstance& inst, double tau) {
  const std::uint64_t dim = std::uint64_t{1} << inst.n();
  std::vector<double> psi(dim);
  double norm = 0.0;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int e = energy(inst, x);
    psi[x] = std::isinf(tau) ? (e == 0 ? 1.0 : 0.0) : std::exp(-tau * e);
    norm += psi[x] * psi[x];
  }
  for (auto& a : psi) a /= std::sqrt(norm);
  return psi;
}

inline std::vector<double> flat_state(const satmps::sat::CnfInstance& inst) {
  const std::uint64_t dim = std::uint64_t{1} << inst.n();
  std::vector<double> psi(dim);
  for (std::uint64_t x = 0; x < dim; ++x) psi[x] = energy(inst, x) == 0 ? std::pow(2.0, -inst.n() / 2.0) : 0.0;
  return psi;
}

// Singular values of the reshaped amplitude vector (Jacobi SVD).
inline Eigen::VectorXd schmidt(const std::vector<double>& psi, int n, int cut) {
  const Eigen::Index rows = Eigen::Index{1} << cut, cols = Eigen::Index{1} << (n - cut);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = psi[static_cast<std::size_t>(r * cols + c)];
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
}

inline double entropy(const Eigen::VectorXd& s) {
  const double total = s.squaredNorm();
  double h = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double p = s(i) * s(i) / total;
    if (p > 1e-300) h -= p * std::log(p);
  }
  return h;
}

inline double entropy(const std::vector<double>& psi, int n, int cut) { return entropy(schmidt(psi, n, cut)); }

using Complex = std::complex<double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Explicit 2^n x 2^n Pauli matrix, symbols "IXYZ", site 0 leftmost in the
// Kronecker product.
inline CMatrix pauli_matrix(const std::string& s) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (char ch : s) {
    CMatrix p(2, 2);
    const Complex i(0.0, 1.0);
    switch (ch) {
      case 'I': p << 1, 0, 0, 1; break;
      case 'X': p << 0, 1, 1, 0; break;
      case 'Y': p << 0, -i, i, 0; break;
      default: p << 1, 0, 0, -1; break;
    }
    CMatrix k(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) k.block(2 * a, 2 * b, 2, 2) = out(a, b) * p;
    out = k;
  }
  return out;
}

inline std::string pauli_text(int n, std::uint64_t index) {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int k = n - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = "IXYZ"[index & 3U];
    index >>= 2;
  }
  return s;
}

inline double expectation(const std::vector<double>& psi, const std::string& pauli) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
  for (std::size_t i = 0; i < psi.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi[i];
  return (v.adjoint() * pauli_matrix(pauli) * v)(0, 0).real();
}

// M1 and M2 by enumerating all 4^n explicit Pauli matrices (n <= 5).
struct Magic {
  double m1 = 0.0, m2 = 0.0;
};
inline Magic magic(const std::vector<double>& psi, int n) {
  const double dim = std::exp2(n);
  double h = 0.0, xi2 = 0.0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
    const double e = expectation(psi, pauli_text(n, k));
    const double p = e * e / dim;
    if (p > 1e-300) h -= p * std::log(p);
    xi2 += std::pow(e, 4) / dim;
  }
  return {h - n * std::log(2.0), -std::log(xi2)};
}

inline satmps::sat::CnfInstance random_cnf(int n, int m, std::mt19937_64& rng) {
  std::vector<satmps::sat::Clause> cs;
  std::uniform_int_distribution<int> var(1, n);
  std::bernoulli_distribution neg(0.5);
  while (static_cast<int>(cs.size()) < m) {
    const int a = var(rng), b = var(rng), c = var(rng);
    if (a == b || b == c || a == c) continue;
    cs.emplace_back(satmps::sat::Literal{a, neg(rng)}, satmps::sat::Literal{b, neg(rng)},
                    satmps::sat::Literal{c, neg(rng)});
  }
  return satmps::sat::CnfInstance(n, std::move(cs));
}

}  // namespace oracle
