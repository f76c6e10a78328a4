#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpack/constructor.hpp"

namespace lpack {

struct SweepOptions {
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  /// Every labeled (n, n-2)-graph instead of seeded samples; n <= 7.
  bool exhaustive = false;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Run the exact oracle for n up to this value (0 disables).
  std::size_t oracle_upto = 0;
  std::size_t jobs = 1;
  /// Fill elapsed_micros; off by default so output is reproducible.
  bool timing = false;
  std::size_t mis_limit = 128;
  ConstructOptions construction;
};

inline constexpr std::size_t kExhaustiveSweepLimit = 7;
inline constexpr std::size_t kSampledSweepLimit = 10000;

struct SweepRow {
  /// Enumeration index (exhaustive) or derived seed (sampled).
  std::uint64_t graph_id = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t lower_woz = 0;
  std::size_t lower_main = 0;
  std::optional<std::size_t> constructed_cycles;
  std::optional<std::optional<std::size_t>> oracle_lambda2;
  std::optional<std::size_t> upper_mis;
  bool fallback_used = false;
  std::size_t fallback_steps = 0;
  std::uint64_t elapsed_micros = 0;
  bool verified = false;
  std::string error;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t verified = 0;
  std::size_t failures = 0;
  std::size_t fallback_incidents = 0;
  std::size_t bound_violations = 0;
  std::optional<std::int64_t> min_constructed_minus_lower;
  std::optional<std::int64_t> max_constructed_minus_lower;
  std::optional<std::int64_t> min_upper_minus_constructed;
  std::optional<std::int64_t> max_upper_minus_constructed;

  bool ok() const { return failures == 0 && bound_violations == 0; }
};

/// Seed of sample i at order n, derived from the sweep seed.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t n, std::size_t i);

/// Rows in input order regardless of the number of jobs.
std::vector<SweepRow> run_sweep(const SweepOptions &opts);

SweepSummary summarize(const std::vector<SweepRow> &rows);

inline constexpr const char *kSweepCsvHeader =
    "graph_id,n,m,lower_woz,lower_main,constructed_cycles,oracle_lambda2,"
    "upper_mis,fallback_used,elapsed_micros";

/// CSV with header, one line per row and a '#'-prefixed summary footer.
std::string sweep_csv(const std::vector<SweepRow> &rows, bool footer = true);

} // namespace lpack
