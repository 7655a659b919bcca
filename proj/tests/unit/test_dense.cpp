#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "satmps/dense/state.hpp"
#include "satmps/sat/counting.hpp"

using namespace satmps;
using namespace satmps::dense;

namespace {

sat::Clause clause(int a, int b, int c) { return sat::Clause::from_dimacs(a, b, c); }

// Schmidt values of the normalized 7-of-8 state, from the closed forms
// A^2 = (7 - sqrt 37) / 2 and A^2 + B^2 = 7.
const double kA = std::sqrt((7.0 - std::sqrt(37.0)) / 2.0);
const double kB = std::sqrt(7.0 - kA * kA);

}  // namespace

TEST_CASE("energy diagonal") {
  const auto empty = build_energy_diagonal(sat::CnfInstance(4, {}));
  for (auto e : empty.values()) CHECK(e == 0);

  const auto one = build_energy_diagonal(sat::CnfInstance(3, {clause(1, 2, 3)}));
  CHECK(one[0] == 1);
  for (std::uint64_t x = 1; x < 8; ++x) CHECK(one[x] == 0);

  std::mt19937_64 rng(4);
  const auto inst = oracle::random_cnf(10, 42, rng);
  const auto diag = build_energy_diagonal(inst);
  for (int t = 0; t < 100; ++t) {
    const auto x = rng() % 1024;
    CHECK(diag[x] == oracle::energy(inst, x));
  }
  CHECK_THROWS_AS(build_energy_diagonal(sat::CnfInstance(15, {})), DenseLimitExceeded);
}

TEST_CASE("ite_evolve limits and closed form") {
  std::mt19937_64 rng(9);
  const auto inst = oracle::random_cnf(12, 36, rng);
  const auto diag = build_energy_diagonal(inst);
  const auto zero = ite_evolve(diag, 0.0);
  for (double a : zero.amplitudes()) CHECK(a == doctest::Approx(std::exp2(-6.0)));

  const auto single = ite_evolve(build_energy_diagonal(sat::CnfInstance(3, {clause(1, 2, 3)})), kInfiniteTime);
  CHECK(single[0] == 0.0);
  for (std::uint64_t x = 1; x < 8; ++x) CHECK(single[x] == doctest::Approx(1.0 / std::sqrt(7.0)));

  const auto two = ite_evolve(diag, 2.0);
  const auto ref = oracle::ite_state(inst, 2.0);
  for (std::size_t x = 0; x < ref.size(); ++x) CHECK(two[x] == doctest::Approx(ref[x]).epsilon(1e-12));
  // Weight on solutions: count / sum_x exp(-4 E(x)).
  double z = 0.0;
  for (std::uint64_t x = 0; x < 4096; ++x) z += std::exp(-4.0 * oracle::energy(inst, x));
  CHECK(solution_weight(two, inst) == doctest::Approx(static_cast<double>(oracle::count(inst)) / z).epsilon(1e-12));

  CHECK_THROWS_AS(ite_evolve(build_energy_diagonal(sat::CnfInstance(
                                 3, {clause(1, 2, 3), clause(1, 2, -3), clause(1, -2, 3), clause(1, -2, -3),
                                     clause(-1, 2, 3), clause(-1, 2, -3), clause(-1, -2, 3), clause(-1, -2, -3)})),
                             kInfiniteTime),
                  std::domain_error);
}

TEST_CASE("ite_evolve semigroup and monotone solution weight") {
  std::mt19937_64 rng(10);
  const auto inst = oracle::random_cnf(10, 40, rng);
  if (oracle::count(inst) == 0) return;
  const auto diag = build_energy_diagonal(inst);
  const auto a = ite_evolve(diag, 0.7), ab = ite_evolve(diag, 1.9);
  // psi(t1 + t2) is proportional to psi(t1) exp(-t2 E).
  std::vector<double> manual(a.amplitudes().begin(), a.amplitudes().end());
  double norm = 0.0;
  for (std::size_t x = 0; x < manual.size(); ++x) {
    manual[x] *= std::exp(-1.2 * diag[x]);
    norm += manual[x] * manual[x];
  }
  for (std::size_t x = 0; x < manual.size(); ++x) CHECK(ab[x] == doctest::Approx(manual[x] / std::sqrt(norm)).epsilon(1e-12));
  double last = 0.0;
  for (double t = 0.0; t < 10.0; t += 0.5) {
    const double w = solution_weight(ite_evolve(diag, t), diag);
    CHECK(w >= last - 1e-15);
    last = w;
  }
  CHECK(last >= 0.99);
}

TEST_CASE("solution weight examples") {
  CHECK(solution_weight(DenseState::uniform(4), sat::CnfInstance(4, {})) == doctest::Approx(1.0));
  CHECK(solution_weight(DenseState::uniform(3), sat::CnfInstance(3, {clause(1, 2, 3)})) == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("schmidt spectra and entropies") {
  const auto plus = schmidt(DenseState::uniform(6), 3);
  REQUIRE(plus.values.size() == 1);
  CHECK(plus.values[0] == doctest::Approx(1.0));
  CHECK(entanglement_entropy(plus) == doctest::Approx(0.0));

  DenseState seven = DenseState::uniform(3);
  apply_projector(seven, clause(1, 2, 3));
  seven.normalize();
  const auto s = schmidt(seven, 1);
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == doctest::Approx(kB / std::sqrt(7.0)).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(kA / std::sqrt(7.0)).epsilon(1e-12));
  const double pa = kA * kA / 7.0, pb = kB * kB / 7.0;
  CHECK(entanglement_entropy(s) == doctest::Approx(-pa * std::log(pa) - pb * std::log(pb)).epsilon(1e-12));
  CHECK(entanglement_entropy(s) == doctest::Approx(0.2419).epsilon(1e-3));

  const DenseState bell(2, {std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  CHECK(entanglement_entropy(bell, 1) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("schmidt matches an independent SVD and is symmetric under reflection") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const auto inst = oracle::random_cnf(10, 25 + t, rng);
    const auto psi = oracle::ite_state(inst, 0.3 * t);
    const DenseState st(10, psi);
    for (int cut = 1; cut < 10; ++cut) {
      const auto sp = schmidt(st, cut);
      const auto ref = oracle::schmidt(psi, 10, cut);
      double sum = 0.0;
      for (std::size_t i = 0; i < sp.values.size(); ++i) {
        CHECK(sp.values[i] == doctest::Approx(ref(static_cast<Eigen::Index>(i))).epsilon(1e-10));
        sum += sp.values[i] * sp.values[i];
        if (i) CHECK(sp.values[i] <= sp.values[i - 1]);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(sp.values.size() <= std::size_t{1} << std::min(cut, 10 - cut));
      const double s = entanglement_entropy(sp);
      CHECK(s == doctest::Approx(oracle::entropy(ref)).epsilon(1e-10));
      CHECK(s <= std::min(cut, 10 - cut) * std::log(2.0) + 1e-12);
    }
    // Reversing the bit order swaps the two sides of every cut.
    std::vector<double> rev(psi.size());
    for (std::uint64_t x = 0; x < psi.size(); ++x) {
      std::uint64_t y = 0;
      for (int b = 0; b < 10; ++b) y |= ((x >> b) & 1U) << (9 - b);
      rev[y] = psi[x];
    }
    for (int cut = 1; cut < 10; ++cut)
      CHECK(entanglement_entropy(st, cut) == doctest::Approx(entanglement_entropy(DenseState(10, rev), 10 - cut)).epsilon(1e-10));
  }
}

TEST_CASE("flat protocol") {
  CHECK(flat_protocol_dense(sat::CnfInstance(5, {}), 2).empty());
  const auto one = flat_protocol_dense(sat::CnfInstance(3, {clause(1, 2, 3)}), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].norm_squared == doctest::Approx(7.0 / 8.0));

  std::mt19937_64 rng(13);
  const auto inst = oracle::random_cnf(12, 30, rng);
  const auto trace = flat_protocol_dense(inst, 6);
  REQUIRE(trace.size() == 30);
  CHECK(std::llround(std::exp2(12) * trace.back().norm_squared) == static_cast<long long>(sat::count_solutions(inst)));
  double last = 1.0;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    CHECK(trace[k].norm_squared <= last + 1e-15);
    last = trace[k].norm_squared;
    // Prefix norms count prefix solutions.
    CHECK(std::llround(std::exp2(12) * trace[k].norm_squared) ==
          static_cast<long long>(oracle::count(inst.prefix(static_cast<int>(k) + 1))));
  }
  const auto fin = flat_final_state(inst);
  const auto ref = oracle::flat_state(inst);
  for (std::size_t x = 0; x < ref.size(); ++x) CHECK(fin[x] == doctest::Approx(ref[x]).epsilon(1e-14));
}

TEST_CASE("projectors commute and are idempotent") {
  std::mt19937_64 rng(14);
  const auto inst = oracle::random_cnf(10, 30, rng);
  std::vector<int> order(30);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const auto a = flat_final_state(inst), b = flat_final_state(inst.permuted(order));
  double diff = 0.0;
  for (std::size_t x = 0; x < a.dimension(); ++x) diff = std::max(diff, std::abs(a[x] - b[x]));
  CHECK(diff < 1e-12);

  DenseState once = DenseState::uniform(10), twice = DenseState::uniform(10);
  apply_projector(once, inst.clause(0));
  apply_projector(twice, inst.clause(0));
  apply_projector(twice, inst.clause(0));
  for (std::size_t x = 0; x < once.dimension(); ++x) CHECK(once[x] == twice[x]);
}

TEST_CASE("unsatisfiable prefixes give empty spectra") {
  std::vector<sat::Clause> all;
  for (int s = 0; s < 8; ++s) all.push_back(clause(s & 4 ? -1 : 1, s & 2 ? -2 : 2, s & 1 ? -3 : 3));
  const auto trace = flat_protocol_dense(sat::CnfInstance(4, all), 2);
  CHECK(trace.back().norm_squared == 0.0);
  CHECK(trace.back().spectrum.values.empty());
}

TEST_CASE("pauli expectations on dense states") {
  const auto plus = DenseState::uniform(4);
  CHECK(pauli_expectation(plus, magic::PauliString::parse("XXXX")) == doctest::Approx(1.0));
  CHECK(pauli_expectation(plus, magic::PauliString::parse("XZXI")) == doctest::Approx(0.0));
  CHECK(pauli_expectation(plus, magic::PauliString::parse("YYII")) == doctest::Approx(0.0));

  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  for (int t = 0; t < 5; ++t) {
    std::vector<double> psi(8);
    double norm = 0.0;
    for (auto& a : psi) {
      a = g(rng);
      norm += a * a;
    }
    for (auto& a : psi) a /= std::sqrt(norm);
    const DenseState st(3, psi);
    for (std::uint64_t k = 0; k < 64; ++k) {
      const auto text = oracle::pauli_text(3, k);
      CHECK(pauli_expectation(st, magic::PauliString::parse(text)) == doctest::Approx(oracle::expectation(psi, text)).epsilon(1e-12));
    }
  }
}
