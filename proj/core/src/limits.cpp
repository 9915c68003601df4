#include "stabscope/limits.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace stabscope::limits {
namespace {

constexpr int kDefaultStateQubits = 14;
constexpr int kDefaultTableQubits = 11;

// Returns the MB cap from STABSCOPE_MEM_CAP_MB, or 0 when unset/invalid.
std::uint64_t env_cap_mb() {
  const char* raw = std::getenv("STABSCOPE_MEM_CAP_MB");
  if (raw == nullptr) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || v == 0) return 0;
  return v;
}

int largest_n(std::uint64_t bytes_per_unit_log2, std::uint64_t units_per_qubit_log2,
              std::uint64_t cap_bytes) {
  // units = 2^(units_per_qubit_log2 * n), bytes = units << bytes_per_unit_log2
  int n = 0;
  while (n < 32) {
    std::uint64_t bits = units_per_qubit_log2 * (n + 1) + bytes_per_unit_log2;
    if (bits >= 63 || (std::uint64_t{1} << bits) > cap_bytes) break;
    ++n;
  }
  return n;
}

}  // namespace

int max_state_qubits() {
  std::uint64_t mb = env_cap_mb();
  if (mb == 0) return kDefaultStateQubits;
  return largest_n(/*16 bytes*/ 4, /*2^n amplitudes*/ 1, mb << 20);
}

int max_table_qubits() {
  std::uint64_t mb = env_cap_mb();
  if (mb == 0) return kDefaultTableQubits;
  return largest_n(/*8 bytes*/ 3, /*4^n entries*/ 2, mb << 20);
}

}  // namespace stabscope::limits
