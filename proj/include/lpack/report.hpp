#pragma once

#include <optional>

#include <json.hpp>

#include "lpack/bounds.hpp"
#include "lpack/constructor.hpp"
#include "lpack/oracle.hpp"

namespace lpack {

/// Per-graph bracket of the labeled packing number.
struct BoundsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t lower_main = 0;
  std::size_t lower_woz = 0;
  std::optional<std::size_t> upper_mis;
  std::optional<std::size_t> constructed_cycles;
  /// Outer empty: not computed. Inner empty: the graph has no embedding.
  std::optional<std::optional<std::size_t>> oracle_lambda2;
  bool fallback_used = false;
  std::optional<ConstructionTrace> trace;

  /// lower_woz <= lower_main <= constructed <= oracle <= upper over the
  /// fields that are present.
  bool consistent() const;
};

struct ReportOptions {
  bool construct = true;
  bool oracle = false;
  bool include_trace = true;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::size_t mis_limit = kDefaultMisLimit;
  ConstructOptions construction;
};

struct ReportResult {
  BoundsReport report;
  std::optional<Permutation> perm;
  std::optional<bool> upper_vacuous;
};

/// Fills every field the options ask for. Construction is attempted only when
/// m <= n-2; the independent-set bound only within mis_limit. Requesting the
/// oracle beyond oracle_limit throws SizeLimit.
ReportResult make_report(const Graph &g, const ReportOptions &opts = {});

nlohmann::json to_json(const BoundsReport &r);
nlohmann::json to_json(const ConstructionTrace &t);
nlohmann::json to_json(const OracleResult &r);

} // namespace lpack
