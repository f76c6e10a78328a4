// lpack: construct, verify and bracket labeled embeddings of graphs with at
// most n-2 edges.
//
// Exit codes: 0 success / all verifications passed, 1 input error,
// 2 internal verification failure, 3 size limit exceeded.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lpack/bounds.hpp"
#include "lpack/constructor.hpp"
#include "lpack/error.hpp"
#include "lpack/graph.hpp"
#include "lpack/oracle.hpp"
#include "lpack/report.hpp"
#include "lpack/sweep.hpp"

using namespace lpack;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kVerification = 2, kSizeLimit = 3 };

struct GraphSource {
  std::string file;
  std::string family;
  std::size_t n = 0, k = 0, m = 0;
  std::uint64_t seed = 0;

  void attach(CLI::App *cmd) {
    cmd->add_option("graph", file, "edge-list file ('-' or omitted: stdin)");
    cmd->add_option("--family", family,
                    "path | cycle | kc3-2k1 | cm-2k1 | tight | random");
    cmd->add_option("--n", n, "order (path, cycle, random)");
    cmd->add_option("--k", k, "triangle count (kc3-2k1, tight)");
    cmd->add_option("--m", m, "cycle length (cm-2k1) or edge count (random)");
    cmd->add_option("--seed", seed, "seed for the random family");
  }

  Graph load() const {
    if (!family.empty()) {
      auto f = parse_family(family);
      if (!f)
        throw Error(ErrorKind::BadParams, "unknown family '" + family + "'");
      return family_graph(*f, {n, k, m, seed});
    }
    std::string text;
    if (file.empty() || file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(file, std::ios::binary);
      if (!in)
        throw Error(ErrorKind::BadParams, "cannot open '" + file + "'");
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_graph(text);
  }
};

void add_format(CLI::App *cmd, std::string &format) {
  cmd->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

std::string join(const std::vector<int> &xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << (i ? " " : "") << xs[i];
  return out.str();
}

json construction_json(const Graph &g, const Construction &c) {
  const Labeling l = labeling_from_permutation(c.perm);
  return {{"n", g.order()},
          {"m", g.size()},
          {"cycles", c.trace.final_cycles},
          {"lower_main", lower_bound_main(g.order())},
          {"permutation", c.perm.image()},
          {"cycle_form", to_cycle_string(c.perm)},
          {"labeling", {{"p", l.p}, {"labels", l.label}}},
          {"verified", is_good(g, c.perm)},
          {"fallback_steps", c.trace.fallback_count()},
          {"trace", to_json(c.trace)}};
}

int cmd_construct(const GraphSource &src, const std::string &format,
                  const ConstructOptions &opts) {
  const Graph g = src.load();
  const Construction c = construct_good(g, opts);
  const bool ok = is_good(g, c.perm);
  if (format == "json") {
    std::cout << construction_json(g, c).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "n,m,cycles,lower_main,fallback_steps,permutation\n"
              << g.order() << ',' << g.size() << ',' << c.trace.final_cycles
              << ',' << lower_bound_main(g.order()) << ','
              << c.trace.fallback_count() << ',' << to_image_string(c.perm)
              << '\n';
  } else {
    const Labeling l = labeling_from_permutation(c.perm);
    std::cout << "n=" << g.order() << " m=" << g.size()
              << " cycles=" << c.trace.final_cycles
              << " lower_main=" << lower_bound_main(g.order())
              << " verified=" << (ok ? "yes" : "NO") << '\n'
              << "permutation: " << to_image_string(c.perm) << '\n'
              << "cycles:      " << to_cycle_string(c.perm) << '\n'
              << "labeling:    " << join(l.label) << " (p=" << l.p << ")\n"
              << "trace:\n";
    for (const auto &s : c.trace.steps) {
      std::cout << "  " << to_string(s.id) << " n=" << s.order << " removed=";
      for (std::size_t i = 0; i < s.removed.size(); ++i)
        std::cout << (i ? "," : "") << s.removed[i];
      std::cout << " +" << s.cycles_added << (s.fallback ? " [fallback]" : "")
                << '\n';
    }
  }
  if (!ok) {
    std::cerr << "error: constructed permutation failed verification\n";
    return kVerification;
  }
  return kOk;
}

int cmd_analyze(const GraphSource &src, const std::string &format,
                bool oracle, const std::string &verify,
                const ConstructOptions &copts) {
  const Graph g = src.load();
  ReportOptions opts;
  opts.oracle_limit = oracle_limit_from_env();
  opts.construction = copts;
  ReportResult rr = make_report(g, opts);
  std::optional<OracleResult> exact;
  if (oracle) {
    exact = exact_lambda2(g, opts.oracle_limit);
    rr.report.oracle_lambda2 = exact->value;
  }
  json out = {{"report", to_json(rr.report)}};
  out["upper_mis_vacuous"] =
      rr.upper_vacuous ? json(*rr.upper_vacuous) : json(nullptr);
  if (exact)
    out["oracle"] = to_json(*exact);
  std::optional<GoodnessCheck> check;
  if (!verify.empty()) {
    const Permutation p = parse_permutation(verify);
    if (p.size() != g.order())
      throw Error(ErrorKind::BadParams, "--verify permutation has " +
                                            std::to_string(p.size()) +
                                            " entries, graph has " +
                                            std::to_string(g.order()));
    check = check_good(g, p);
    out["verify"] = {{"permutation", p.image()},
                     {"is_embedding", check->embedding},
                     {"is_short", check->short_cycles},
                     {"enough_cycles", check->enough_cycles},
                     {"cycles", check->cycles},
                     {"required", check->required},
                     {"is_good", check->good()}};
  }

  const BoundsReport &r = rr.report;
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "n,m,lower_woz,lower_main,constructed_cycles,oracle_lambda2,"
                 "upper_mis,fallback_used\n";
    auto cell = [](const json &v) { return v.is_null() ? std::string() : v.dump(); };
    const json &j = out["report"];
    std::cout << r.n << ',' << r.m << ',' << r.lower_woz << ',' << r.lower_main
              << ',' << cell(j["constructed_cycles"]) << ','
              << (j["oracle_lambda2"].is_string()
                      ? "none"
                      : cell(j["oracle_lambda2"]))
              << ',' << cell(j["upper_mis"]) << ','
              << (r.fallback_used ? 1 : 0) << '\n';
  } else {
    const json &j = out["report"];
    std::cout << "n=" << r.n << " m=" << r.m << '\n'
              << "lower_woz          " << r.lower_woz << '\n'
              << "lower_main         " << r.lower_main << '\n'
              << "constructed_cycles " << j["constructed_cycles"].dump() << '\n'
              << "oracle_lambda2     " << j["oracle_lambda2"].dump() << '\n'
              << "upper_mis          " << j["upper_mis"].dump()
              << (rr.upper_vacuous && *rr.upper_vacuous ? " (vacuous: no embedding)" : "")
              << '\n'
              << "fallback_used      " << (r.fallback_used ? "yes" : "no") << '\n'
              << "consistent         " << (r.consistent() ? "yes" : "NO") << '\n';
    if (check)
      std::cout << "verify: is_embedding=" << check->embedding
                << " is_short=" << check->short_cycles
                << " cycles=" << check->cycles << "/" << check->required
                << " is_good=" << check->good() << '\n';
  }
  if (!r.consistent()) {
    std::cerr << "error: bounds are inconsistent\n";
    return kVerification;
  }
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string &s) {
  auto number = [&](std::string_view part, std::size_t &out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return !part.empty() && ec == std::errc() && ptr == part.data() + part.size();
  };
  const std::string_view text(s);
  const auto colon = text.find(':');
  std::size_t lo = 0, hi = 0;
  const bool ok = colon == std::string_view::npos
                      ? number(text, lo) && number(text, hi)
                      : number(text.substr(0, colon), lo) &&
                            number(text.substr(colon + 1), hi);
  if (!ok)
    throw Error(ErrorKind::BadParams, "bad --n-range '" + s + "' (want A:B)");
  return {lo, hi};
}

int cmd_sweep(SweepOptions opts, const std::string &range,
              const std::string &format) {
  std::tie(opts.n_min, opts.n_max) = parse_range(range);
  const auto rows = run_sweep(opts);
  const SweepSummary s = summarize(rows);
  if (format == "json") {
    json arr = json::array();
    for (const auto &r : rows) {
      json oracle = nullptr;
      if (r.oracle_lambda2)
        oracle = *r.oracle_lambda2 ? json(**r.oracle_lambda2) : json("none");
      arr.push_back({{"graph_id", r.graph_id},
                     {"n", r.n},
                     {"m", r.m},
                     {"lower_woz", r.lower_woz},
                     {"lower_main", r.lower_main},
                     {"constructed_cycles", r.constructed_cycles
                                                ? json(*r.constructed_cycles)
                                                : json(nullptr)},
                     {"oracle_lambda2", oracle},
                     {"upper_mis", r.upper_mis ? json(*r.upper_mis) : json(nullptr)},
                     {"fallback_used", r.fallback_used},
                     {"elapsed_micros", r.elapsed_micros}});
    }
    std::cout << json{{"rows", arr},
                      {"summary",
                       {{"rows", s.rows},
                        {"verified", s.verified},
                        {"failures", s.failures},
                        {"fallback_incidents", s.fallback_incidents},
                        {"bound_violations", s.bound_violations}}}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << sweep_csv(rows);
  }
  for (const auto &r : rows)
    if (!r.error.empty())
      std::cerr << "graph " << r.graph_id << " (n=" << r.n << "): " << r.error
                << '\n';
  std::cerr << "sweep: " << s.rows << " graphs, " << s.failures
            << " failures, " << s.fallback_incidents << " fallback incidents, "
            << s.bound_violations << " bound violations\n";
  return s.ok() ? kOk : kVerification;
}

int cmd_gen(const GraphSource &src, const std::string &format) {
  const Graph g = src.load();
  if (format == "json") {
    json edges = json::array();
    for (auto [u, v] : g.edges())
      edges.push_back({u, v});
    std::cout << json{{"n", g.order()}, {"m", g.size()}, {"edges", edges}}.dump()
              << '\n';
  } else {
    std::cout << serialize_graph(g);
  }
  return kOk;
}

int cmd_enumerate(std::size_t n, std::size_t m, bool count_only,
                  const std::string &format) {
  GraphEnumerator e(n, m);
  std::size_t count = 0;
  while (auto g = e.next()) {
    ++count;
    if (count_only)
      continue;
    if (format == "json") {
      json edges = json::array();
      for (auto [u, v] : g->edges())
        edges.push_back({u, v});
      std::cout << json{{"n", n}, {"m", m}, {"edges", edges}}.dump() << '\n';
    } else {
      std::cout << "# graph " << count - 1 << '\n' << serialize_graph(*g);
    }
  }
  if (count_only)
    std::cout << count << '\n';
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SizeLimit:
    return kSizeLimit;
  case ErrorKind::VerificationFailure:
  case ErrorKind::ExtensionInvalid:
  case ErrorKind::DispatchFailure:
    return kVerification;
  default:
    return kInput;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Labeled embeddings of (n, <=n-2)-graphs: construction, "
               "verification and bounds"};
  app.require_subcommand(1);

  GraphSource src;
  std::string format = "text";
  ConstructOptions copts;
  auto add_fallback = [&](CLI::App *cmd) {
    cmd->add_option("--fallback-limit", copts.fallback_limit,
                    "largest order for whole-graph fallback search");
  };

  auto *gen = app.add_subcommand("gen", "print a graph in edge-list form");
  src.attach(gen);
  add_format(gen, format);

  auto *construct =
      app.add_subcommand("construct", "build and verify a good permutation");
  src.attach(construct);
  add_format(construct, format);
  add_fallback(construct);

  bool oracle = false;
  std::string verify;
  auto *analyze = app.add_subcommand("analyze", "bounds report for a graph");
  src.attach(analyze);
  add_format(analyze, format);
  add_fallback(analyze);
  analyze->add_flag("--oracle", oracle, "compute the exact value by search");
  analyze->add_option("--verify", verify,
                      "check a permutation given as its image list");

  SweepOptions sweep_opts;
  std::string range = "3:7";
  auto *sweep = app.add_subcommand("sweep", "construction sweep as CSV");
  sweep->add_option("--n-range", range, "orders A:B (inclusive)");
  sweep->add_option("--samples", sweep_opts.samples, "random graphs per order");
  sweep->add_option("--seed", sweep_opts.seed, "base seed");
  sweep->add_flag("--exhaustive", sweep_opts.exhaustive,
                  "all labeled (n, n-2)-graphs (n <= 7)");
  sweep->add_option("--oracle-upto", sweep_opts.oracle_upto,
                    "run the exact oracle up to this order");
  sweep->add_option("--jobs", sweep_opts.jobs, "worker threads");
  sweep->add_flag("--timing", sweep_opts.timing, "fill elapsed_micros");
  sweep->add_option("--fallback-limit", sweep_opts.construction.fallback_limit,
                    "largest order for whole-graph fallback search");
  add_format(sweep, format);

  std::size_t en_n = 0, en_m = 0;
  bool count_only = false;
  auto *enumerate =
      app.add_subcommand("enumerate", "all labeled graphs with n vertices, m edges");
  enumerate->add_option("--n", en_n)->required();
  enumerate->add_option("--m", en_m)->required();
  enumerate->add_flag("--count", count_only, "print only the number of graphs");
  add_format(enumerate, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*gen)
      return cmd_gen(src, format);
    if (*construct)
      return cmd_construct(src, format, copts);
    if (*analyze)
      return cmd_analyze(src, format, oracle, verify, copts);
    if (*sweep) {
      const std::size_t oracle_cap = oracle_limit_from_env();
      if (sweep_opts.oracle_upto > oracle_cap)
        throw Error(ErrorKind::SizeLimit,
                    "--oracle-upto exceeds the oracle limit " +
                        std::to_string(oracle_cap));
      return cmd_sweep(sweep_opts, range, format);
    }
    if (*enumerate)
      return cmd_enumerate(en_n, en_m, count_only, format);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
