#pragma once

// Sweeps checks over prime ranges, in parallel across primes.  Per-prime
// special-number tables are built once and shared by every check evaluated
// at that prime.  Output is sorted by (check id, p) regardless of execution
// order, so runs with different job counts render identically apart from
// the elapsed-time fields.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "supercong/registry.hpp"

namespace supercong {

/// Odd primes in [lo, hi].
inline std::vector<std::int64_t> primes_in_range(std::int64_t lo,
                                                 std::int64_t hi) {
  if (lo > hi) raise(errc::invalid_range, "empty prime range");
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 3; i <= hi; i += 2) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::int64_t j = i * i; j <= hi; j += 2 * i) composite[j] = true;
  }
  return out;
}

enum class ReportFormat { table, jsonl };

struct SweepConfig {
  std::vector<std::string> check_ids;  // empty means the whole catalog
  std::int64_t prime_lo = 5;
  std::int64_t prime_hi = 5;
  int jobs = 1;
  ReportFormat format = ReportFormat::table;
};

struct SweepSummary {
  std::vector<CheckReport> reports;  // sorted by (id, p)
  std::size_t passed = 0, failed = 0, skipped = 0;
};

inline SweepSummary run_sweep(const SweepConfig& cfg) {
  if (cfg.prime_lo > cfg.prime_hi || cfg.prime_lo <= 3)
    raise(errc::invalid_range, "prime range must satisfy 3 < lo <= hi");
  if (cfg.jobs < 1) raise(errc::invalid_range, "jobs must be >= 1");

  std::vector<const detail::Entry*> entries;
  if (cfg.check_ids.empty()) {
    for (const auto& e : detail::catalog()) entries.push_back(&e);
  } else {
    for (const auto& id : cfg.check_ids)
      entries.push_back(&detail::find_entry(id));
  }

  std::vector<std::int64_t> primes =
      primes_in_range(cfg.prime_lo, cfg.prime_hi);

  // one result slot per prime; workers claim primes via an atomic cursor
  std::vector<std::vector<CheckReport>> slots(primes.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= primes.size()) return;
      std::int64_t p = primes[i];
      PrimeTables tables(p);
      slots[i].reserve(entries.size());
      for (const detail::Entry* e : entries)
        slots[i].push_back(detail::run_entry(*e, p, &tables));
    }
  };
  int jobs = static_cast<int>(
      std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(primes.size(), 1)));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SweepSummary summary;
  for (auto& slot : slots)
    for (auto& rep : slot) summary.reports.push_back(std::move(rep));
  std::sort(summary.reports.begin(), summary.reports.end(),
            [](const CheckReport& a, const CheckReport& b) {
              if (a.id != b.id) return a.id < b.id;
              return a.p < b.p;
            });
  for (const auto& r : summary.reports) {
    switch (r.status) {
      case CheckStatus::pass: ++summary.passed; break;
      case CheckStatus::fail: ++summary.failed; break;
      case CheckStatus::skip: ++summary.skipped; break;
    }
  }
  return summary;
}

inline std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

inline void render_jsonl(const SweepSummary& s, std::ostream& os) {
  for (const auto& r : s.reports) {
    os << "{\"check\":\"" << r.id << "\",\"p\":" << r.p << ",\"modulus\":\""
       << modulus_string(r) << "\",\"status\":\"" << to_string(r.status)
       << "\",\"lhs\":\"" << r.lhs << "\",\"rhs\":\"" << r.rhs
       << "\",\"ms\":" << format_ms(r.ms) << "}\n";
  }
}

inline void render_table(const SweepSummary& s, std::ostream& os) {
  os << "check                    p        modulus    status  lhs / rhs\n";
  for (const auto& r : s.reports) {
    char head[64];
    std::snprintf(head, sizeof(head), "%-24s %-8lld %-10s %-7s",
                  r.id.c_str(), static_cast<long long>(r.p),
                  modulus_string(r).c_str(), to_string(r.status));
    os << head;
    if (r.status == CheckStatus::skip)
      os << "-";
    else if (r.lhs == r.rhs)
      os << r.lhs;
    else
      os << r.lhs << " != " << r.rhs;
    os << "\n";
  }
}

inline void render_summary(const SweepSummary& s, std::ostream& os) {
  os << "pass=" << s.passed << " fail=" << s.failed << " skip=" << s.skipped
     << "\n";
}

/// Exact WZ grids: certificate relation on 1 <= k <= n+1 <= grid_n, summand
/// and reformulation rows up to grid_n, both telescoped sums to
/// telescope_max.  Deterministic; counts failures.
struct WzSummary {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::vector<std::string> failure_lines;
};

inline WzSummary run_wz(std::int64_t grid_n, std::int64_t telescope_max) {
  if (grid_n < 1) raise(errc::out_of_range, "grid bound must be >= 1");
  if (telescope_max < 1)
    raise(errc::out_of_range, "telescope bound must be >= 1");
  WzSummary s;
  wz::Engine eng;
  auto record = [&s](const std::string& what, const wz::SideValues& v) {
    ++s.checked;
    if (!v.equal) {
      ++s.failures;
      s.failure_lines.push_back(what + ": " + v.lhs.get_str() +
                                " != " + v.rhs.get_str());
    }
  };
  for (std::int64_t n = 0; n + 1 <= grid_n; ++n)
    for (std::int64_t k = 1; k <= n + 1; ++k)
      record("relation(" + std::to_string(n) + "," + std::to_string(k) + ")",
             eng.pair_check(n, k));
  for (std::int64_t n = 0; n <= grid_n; ++n)
    record("summand(" + std::to_string(n) + ")", eng.f_summand(n));
  for (std::int64_t n = 1; n <= grid_n; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      record("reform(" + std::to_string(n) + "," + std::to_string(k) + ")",
             eng.g_reform(n, k));
  for (std::int64_t m = 1; m <= telescope_max; m += 2)
    record("telescope_half(" + std::to_string(m) + ")",
           eng.telescope_half(m));
  for (std::int64_t m = 1; m <= telescope_max; ++m)
    record("telescope_full(" + std::to_string(m) + ")",
           eng.telescope_full(m));
  return s;
}

}  // namespace supercong
