#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phenylene/extremal.hpp"
#include "phenylene/random_graphs.hpp"

namespace phenylene::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default exhaustive cap.
inline constexpr const char* kCapEnvVar = "PHENYLENE_EXHAUSTIVE_CAP";

struct CommandConfig {
  std::string subcommand;  // kf, enumerate, extrema, verify, reduce, export-dot, matrix
  std::string check;       // verify target
  std::optional<int> n;
  std::string code;
  std::string edges_file;
  std::optional<std::string> r;
  std::vector<std::string> weights;  // "u-v=p/q"
  std::string format = "text";       // text | json | csv | dot
  std::optional<std::size_t> cap;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> samples;
  std::string source = "a";
  bool approx = false;
  bool canonical_only = false;
  bool trace = false;
  bool vertex_sums = false;
};

/// Parses argv (argv[0] is the program name) and runs the command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace phenylene::cli
