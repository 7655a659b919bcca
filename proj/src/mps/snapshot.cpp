#include "satmps/mps/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace satmps::mps {
namespace {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

constexpr char kMagic[8] = {'S', 'A', 'T', 'M', 'P', 'S', '1', '\n'};
constexpr std::uint32_t kMaxBond = 1U << 16;

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw SnapshotError("snapshot truncated");
  return v;
}

}  // namespace

void write_snapshot(std::ostream& out, const Mps& state) {
  out.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(state.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(state.center()));
  put<double>(out, state.log_norm());
  for (int k = 0; k < state.size(); ++k) {
    const auto& a = state.site(k);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(a[0].rows()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(a[0].cols()));
    for (int s = 0; s < 2; ++s)
      for (Eigen::Index i = 0; i < a[0].rows(); ++i)
        for (Eigen::Index j = 0; j < a[0].cols(); ++j) put<double>(out, a[static_cast<std::size_t>(s)](i, j));
  }
  if (!out) throw SnapshotError("snapshot write failed");
}

Mps read_snapshot(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw SnapshotError("not an MPS snapshot (bad magic)");
  const auto n = get<std::uint32_t>(in);
  const auto center = get<std::uint32_t>(in);
  const auto log_norm = get<double>(in);
  if (n == 0 || n > (1U << 20)) throw SnapshotError("implausible site count " + std::to_string(n));
  std::vector<SiteTensor> sites(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto dl = get<std::uint32_t>(in);
    const auto dr = get<std::uint32_t>(in);
    if (dl == 0 || dr == 0 || dl > kMaxBond || dr > kMaxBond)
      throw SnapshotError("implausible bond dimensions at site " + std::to_string(k));
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXd m(dl, dr);
      for (Eigen::Index i = 0; i < dl; ++i)
        for (Eigen::Index j = 0; j < dr; ++j) m(i, j) = get<double>(in);
      sites[k][static_cast<std::size_t>(s)] = std::move(m);
    }
  }
  try {
    return Mps(std::move(sites), static_cast<int>(center), log_norm);
  } catch (const std::invalid_argument& e) {
    throw SnapshotError(std::string("inconsistent snapshot: ") + e.what());
  }
}

void write_snapshot_file(const std::filesystem::path& path, const Mps& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SnapshotError("cannot write " + path.string());
  write_snapshot(out, state);
}

Mps read_snapshot_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace satmps::mps
