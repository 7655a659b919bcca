#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace satmps::magic {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p) noexcept;

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {}
  static PauliString identity(int n) { return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I)); }
  // Parses "IXYZ"-style text; throws std::invalid_argument on other symbols.
  static PauliString parse(std::string_view text);
  // Inverse of index(); n <= 32.
  static PauliString from_index(int n, std::uint64_t index);

  int size() const noexcept { return static_cast<int>(ops_.size()); }
  Pauli operator[](int site) const { return ops_.at(static_cast<std::size_t>(site)); }
  void set(int site, Pauli p) { ops_.at(static_cast<std::size_t>(site)) = p; }
  const std::vector<Pauli>& ops() const noexcept { return ops_; }

  int y_count() const noexcept;
  // Basis-index masks with site 0 as the most significant bit; n <= 64.
  // flip_mask: X or Y; phase_mask: Z or Y.
  std::uint64_t flip_mask() const;
  std::uint64_t phase_mask() const;
  // Base-4 index with site 0 most significant.
  std::uint64_t index() const;
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> ops_;
};

}  // namespace satmps::magic
