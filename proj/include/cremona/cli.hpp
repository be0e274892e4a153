#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cremona/space.hpp"

namespace cremona {

// Overrides the default prime when set; read once per run_cli call.
inline constexpr const char* kPrimeEnvVar = "CREMONA_PRIME";

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInvalid = 2, kExitExhausted = 3 };

struct SweepRow {
  int e = 0;
  std::string status;  // "verified", "exhausted" or "failed"
  std::string tag;
  int attempts = 0;
  double seconds = 0.0;
  std::string detail;
};

struct SweepSummary {
  int d = 0;
  std::vector<SweepRow> rows;

  bool all_verified() const;
};

// Forges every e in [e_min, e_max] on `jobs` threads. Rows come back in e
// order whatever the scheduling. Certificates go to out_dir/d<D>_e<E>.json.
SweepSummary run_sweep(int d, int e_min, int e_max, std::uint64_t seed, const ForgeOptions& options, int jobs,
                       const std::optional<std::filesystem::path>& out_dir = std::nullopt);

std::string format_sweep(const SweepSummary& summary);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona
