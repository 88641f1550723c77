#ifndef FLAGBOUND_CLI_HPP
#define FLAGBOUND_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace flagbound::cli {

enum class Format { text, json };

struct RunConfig {
  std::string subcommand;
  std::optional<int> n;
  std::optional<std::string> input;  // vector-set file, alternative to n
  std::string weights = "uniform";   // file path, "uniform" or "random:<seed>:<count>"
  std::string field = "2";           // prime or "Q"
  std::optional<int> degree;
  std::string level = "fast";
  bool oracle = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t order_seed = 1;
  std::uint64_t order_trials = 0;
  Format format = Format::text;
  std::optional<std::string> out;
  unsigned threads = 0;
};

// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 for usage errors, malformed input or guard violations.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, runs, and writes to `out` unless --out redirects it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagbound::cli

#endif  // FLAGBOUND_CLI_HPP
