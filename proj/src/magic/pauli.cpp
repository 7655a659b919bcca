#include "satmps/magic/pauli.hpp"

#include <stdexcept>

namespace satmps::magic {

char to_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> ops;
  ops.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': ops.push_back(Pauli::I); break;
      case 'X': ops.push_back(Pauli::X); break;
      case 'Y': ops.push_back(Pauli::Y); break;
      case 'Z': ops.push_back(Pauli::Z); break;
      default: throw std::invalid_argument(std::string("not a Pauli symbol: '") + c + "'");
    }
  }
  return PauliString(std::move(ops));
}

PauliString PauliString::from_index(int n, std::uint64_t index) {
  if (n < 0 || n > 32) throw std::invalid_argument("from_index supports n <= 32");
  std::vector<Pauli> ops(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    ops[static_cast<std::size_t>(i)] = static_cast<Pauli>(index & 3U);
    index >>= 2;
  }
  return PauliString(std::move(ops));
}

int PauliString::y_count() const noexcept {
  int c = 0;
  for (auto p : ops_) c += p == Pauli::Y ? 1 : 0;
  return c;
}

std::uint64_t PauliString::flip_mask() const {
  if (ops_.size() > 64) throw std::invalid_argument("mask form needs n <= 64");
  const int n = size();
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    if (ops_[static_cast<std::size_t>(i)] == Pauli::X || ops_[static_cast<std::size_t>(i)] == Pauli::Y)
      m |= std::uint64_t{1} << (n - 1 - i);
  return m;
}

std::uint64_t PauliString::phase_mask() const {
  if (ops_.size() > 64) throw std::invalid_argument("mask form needs n <= 64");
  const int n = size();
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    if (ops_[static_cast<std::size_t>(i)] == Pauli::Z || ops_[static_cast<std::size_t>(i)] == Pauli::Y)
      m |= std::uint64_t{1} << (n - 1 - i);
  return m;
}

std::uint64_t PauliString::index() const {
  if (ops_.size() > 32) throw std::invalid_argument("index form needs n <= 32");
  std::uint64_t idx = 0;
  for (auto p : ops_) idx = (idx << 2) | static_cast<std::uint64_t>(p);
  return idx;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(ops_.size());
  for (auto p : ops_) s.push_back(to_char(p));
  return s;
}

}  // namespace satmps::magic
