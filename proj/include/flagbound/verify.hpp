#ifndef FLAGBOUND_VERIFY_HPP
#define FLAGBOUND_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace flagbound {

enum class VerifyLevel { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Identity suite for E_m, m = 1..n. fast allows n <= 3, full n <= 5 (n = 5
// only runs the enumeration-path checks).
std::vector<CheckResult> run_verification(int n, VerifyLevel level, std::uint64_t seed = 1, unsigned threads = 0);

}  // namespace flagbound

#endif  // FLAGBOUND_VERIFY_HPP
