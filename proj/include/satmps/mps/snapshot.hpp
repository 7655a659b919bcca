#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "satmps/mps/mps.hpp"

namespace satmps::mps {

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary container, little-endian:
//   8 bytes  magic "SATMPS1\n"
//   u32      n
//   u32      canonical center
//   f64      log_norm (the physical state is exp(log_norm) times the network)
//   n times: u32 Dl, u32 Dr, then A[0] and A[1] as row-major Dl x Dr f64 arrays
// Doubles are stored bit-for-bit, so a round trip is exact.
void write_snapshot(std::ostream& out, const Mps& state);
Mps read_snapshot(std::istream& in);
void write_snapshot_file(const std::filesystem::path& path, const Mps& state);
Mps read_snapshot_file(const std::filesystem::path& path);

}  // namespace satmps::mps
