#pragma once

// Subcommands of the spinpoly tool. Each returns the process exit code:
// 0 success, 1 a hard check or closed-form mismatch failed, 2 usage or input
// error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinpoly {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct InvariantsOptions {
  std::int64_t p = 3;
  std::int64_t q = 2;
  std::int64_t n_max = 10;
  /// Sweep 1..PMAX x 1..QMAX instead of the single (p, q).
  std::optional<std::pair<std::int64_t, std::int64_t>> sweep;
  std::string format = "json";
  std::string out;  // empty: standard output
};

struct VerifyOptions {
  std::string depth = "fast";
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

struct WallsOptions {
  std::int64_t n = 1;
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::string w0;
  std::string w1;
  std::string format = "text";
};

struct Hilb2Options {
  std::string expression;
  std::vector<std::string> definitions;
  std::int64_t p = 1;
  std::int64_t q = 1;
};

int cmd_invariants(const InvariantsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_walls(const WallsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_hilb2(const Hilb2Options& opt, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11, optional --config file per subcommand) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinpoly
