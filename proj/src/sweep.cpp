#include "lpack/sweep.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "lpack/bounds.hpp"
#include "lpack/error.hpp"
#include "lpack/oracle.hpp"

namespace lpack {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Job {
  std::uint64_t id;
  Graph graph;
};

SweepRow evaluate(const Job &job, const SweepOptions &opts) {
  const auto start = std::chrono::steady_clock::now();
  const Graph &g = job.graph;
  SweepRow row;
  row.graph_id = job.id;
  row.n = g.order();
  row.m = g.size();
  row.lower_woz = lower_bound_woz(row.n);
  row.lower_main = lower_bound_main(row.n);
  try {
    Construction c = construct_good(g, opts.construction);
    row.verified = is_good(g, c.perm);
    row.constructed_cycles = c.trace.final_cycles;
    row.fallback_steps = c.trace.fallback_count();
    row.fallback_used = row.fallback_steps > 0;
  } catch (const Error &e) {
    row.error = e.what();
  }
  if (row.n <= opts.mis_limit)
    row.upper_mis = upper_bound_mis(g, opts.mis_limit, 0).value;
  if (opts.oracle_upto > 0 && row.n <= opts.oracle_upto)
    row.oracle_lambda2 = exact_lambda2(g, opts.oracle_upto).value;
  if (opts.timing)
    row.elapsed_micros = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
  return row;
}

std::vector<Job> collect_jobs(const SweepOptions &opts) {
  if (opts.n_min < 3 || opts.n_min > opts.n_max)
    throw Error(ErrorKind::BadParams, "sweep: need 3 <= n_min <= n_max");
  std::vector<Job> jobs;
  if (opts.exhaustive) {
    if (opts.n_max > kExhaustiveSweepLimit)
      throw Error(ErrorKind::SizeLimit,
                  "exhaustive sweep limited to n <= " +
                      std::to_string(kExhaustiveSweepLimit));
    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
      GraphEnumerator e(n, n - 2);
      std::uint64_t index = 0;
      while (auto g = e.next())
        jobs.push_back({index++, std::move(*g)});
    }
  } else {
    if (opts.n_max > kSampledSweepLimit)
      throw Error(ErrorKind::SizeLimit,
                  "sampled sweep limited to n <= " +
                      std::to_string(kSampledSweepLimit));
    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n)
      for (std::size_t i = 0; i < opts.samples; ++i) {
        const std::uint64_t s = sample_seed(opts.seed, n, i);
        jobs.push_back({s, random_graph(n, n - 2, s)});
      }
  }
  return jobs;
}

void optional_cell(std::ostream &out, const std::optional<std::size_t> &v) {
  if (v)
    out << *v;
}

} // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::size_t n, std::size_t i) {
  return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(n) << 32) ^
                                      static_cast<std::uint64_t>(i)));
}

std::vector<SweepRow> run_sweep(const SweepOptions &opts) {
  const std::vector<Job> jobs = collect_jobs(opts);
  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      rows[i] = evaluate(jobs[i], opts);
  };
  const std::size_t workers = std::max<std::size_t>(1, opts.jobs);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow> &rows) {
  SweepSummary s;
  auto widen = [](std::optional<std::int64_t> &lo,
                  std::optional<std::int64_t> &hi, std::int64_t v) {
    lo = lo ? std::min(*lo, v) : v;
    hi = hi ? std::max(*hi, v) : v;
  };
  for (const auto &r : rows) {
    ++s.rows;
    if (r.verified)
      ++s.verified;
    else
      ++s.failures;
    s.fallback_incidents += r.fallback_steps;
    if (!r.constructed_cycles)
      continue;
    const auto built = static_cast<std::int64_t>(*r.constructed_cycles);
    widen(s.min_constructed_minus_lower, s.max_constructed_minus_lower,
          built - static_cast<std::int64_t>(r.lower_main));
    if (r.upper_mis)
      widen(s.min_upper_minus_constructed, s.max_upper_minus_constructed,
            static_cast<std::int64_t>(*r.upper_mis) - built);
    bool bad = r.lower_woz > r.lower_main || *r.constructed_cycles < r.lower_main;
    if (r.oracle_lambda2 && *r.oracle_lambda2) {
      bad = bad || **r.oracle_lambda2 < *r.constructed_cycles;
      if (r.upper_mis)
        bad = bad || **r.oracle_lambda2 > *r.upper_mis;
    }
    if (r.upper_mis)
      bad = bad || *r.constructed_cycles > *r.upper_mis;
    if (bad)
      ++s.bound_violations;
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepRow> &rows, bool footer) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto &r : rows) {
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.lower_woz << ','
        << r.lower_main << ',';
    optional_cell(out, r.constructed_cycles);
    out << ',';
    if (r.oracle_lambda2) {
      if (*r.oracle_lambda2)
        out << **r.oracle_lambda2;
      else
        out << "none";
    }
    out << ',';
    optional_cell(out, r.upper_mis);
    out << ',' << (r.fallback_used ? 1 : 0) << ',' << r.elapsed_micros << '\n';
  }
  if (footer) {
    const SweepSummary s = summarize(rows);
    auto cell = [](const std::optional<std::int64_t> &v) {
      return v ? std::to_string(*v) : std::string("na");
    };
    out << "# rows=" << s.rows << " verified=" << s.verified
        << " failures=" << s.failures
        << " fallback_incidents=" << s.fallback_incidents
        << " bound_violations=" << s.bound_violations << '\n'
        << "# constructed_minus_lower_main min=" << cell(s.min_constructed_minus_lower)
        << " max=" << cell(s.max_constructed_minus_lower) << '\n'
        << "# upper_mis_minus_constructed min=" << cell(s.min_upper_minus_constructed)
        << " max=" << cell(s.max_upper_minus_constructed) << '\n';
  }
  return out.str();
}

} // namespace lpack
