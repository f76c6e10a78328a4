#include "lpack/report.hpp"

#include <algorithm>

#include "lpack/error.hpp"

namespace lpack {

bool BoundsReport::consistent() const {
  std::vector<std::size_t> chain{lower_woz, lower_main};
  if (constructed_cycles)
    chain.push_back(*constructed_cycles);
  if (oracle_lambda2 && *oracle_lambda2)
    chain.push_back(**oracle_lambda2);
  if (upper_mis)
    chain.push_back(*upper_mis);
  return std::is_sorted(chain.begin(), chain.end());
}

ReportResult make_report(const Graph &g, const ReportOptions &opts) {
  ReportResult out;
  BoundsReport &r = out.report;
  r.n = g.order();
  r.m = g.size();
  r.lower_main = lower_bound_main(r.n);
  r.lower_woz = lower_bound_woz(r.n);

  if (r.n <= opts.mis_limit) {
    const UpperBound ub = upper_bound_mis(g, opts.mis_limit, opts.oracle_limit);
    r.upper_mis = ub.value;
    out.upper_vacuous = ub.vacuous;
  }
  if (opts.construct && r.m + 2 <= r.n) {
    Construction c = construct_good(g, opts.construction);
    r.constructed_cycles = c.trace.final_cycles;
    r.fallback_used = c.trace.fallback_count() > 0;
    out.perm = std::move(c.perm);
    if (opts.include_trace)
      r.trace = std::move(c.trace);
  }
  if (opts.oracle)
    r.oracle_lambda2 = exact_lambda2(g, opts.oracle_limit).value;
  return out;
}

nlohmann::json to_json(const ConstructionTrace &t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto &s : t.steps) {
    nlohmann::json ext = nlohmann::json::array();
    for (auto [v, w] : s.extension)
      ext.push_back({v, w});
    steps.push_back({{"case", to_string(s.id)},
                     {"order", s.order},
                     {"removed", s.removed},
                     {"extension", ext},
                     {"cycles_added", s.cycles_added},
                     {"fallback", s.fallback}});
  }
  return {{"steps", steps}, {"final_cycles", t.final_cycles}};
}

nlohmann::json to_json(const BoundsReport &r) {
  using nlohmann::json;
  auto opt = [](const std::optional<std::size_t> &v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json oracle = nullptr;
  if (r.oracle_lambda2)
    oracle = *r.oracle_lambda2 ? json(**r.oracle_lambda2) : json("none");
  return {{"n", r.n},
          {"m", r.m},
          {"lower_main", r.lower_main},
          {"lower_woz", r.lower_woz},
          {"upper_mis", opt(r.upper_mis)},
          {"constructed_cycles", opt(r.constructed_cycles)},
          {"oracle_lambda2", oracle},
          {"fallback_used", r.fallback_used},
          {"trace", r.trace ? to_json(*r.trace) : json(nullptr)}};
}

nlohmann::json to_json(const OracleResult &r) {
  using nlohmann::json;
  return {{"value", r.value ? json(*r.value) : json("none")},
          {"witness", r.witness ? json(r.witness->image()) : json(nullptr)},
          {"explored", r.explored}};
}

} // namespace lpack
