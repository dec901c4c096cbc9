// Command-line front end: sweep congruence checks over prime ranges, run
// the exact WZ grids, query special numbers, and list the check catalog.
//
// Exit codes: 0 all requested checks passed, 1 at least one failed,
// 2 usage or internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supercong/registry.hpp"
#include "supercong/special.hpp"
#include "supercong/sweep.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& spec) {
  std::vector<std::string> ids;
  if (spec == "all") return ids;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(item);
  return ids;
}

bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
  auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoll(text.substr(0, pos));
    hi = std::stoll(text.substr(pos + 2));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool parse_rational(const std::string& text, std::int64_t& num,
                    std::int64_t& den) {
  auto pos = text.find('/');
  try {
    if (pos == std::string::npos) {
      num = std::stoll(text);
      den = 1;
    } else {
      num = std::stoll(text.substr(0, pos));
      den = std::stoll(text.substr(pos + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return den != 0;
}

int cmd_verify(const std::string& checks, const std::string& primes, int jobs,
               const std::string& format, const std::string& out) {
  std::int64_t lo = 0, hi = 0;
  if (!parse_range(primes, lo, hi)) {
    std::cerr << "error: --primes expects <lo>..<hi>\n";
    return 2;
  }
  supercong::SweepConfig cfg;
  cfg.check_ids = split_ids(checks);
  cfg.prime_lo = lo;
  cfg.prime_hi = hi;
  cfg.jobs = jobs;
  cfg.format = format == "jsonl" ? supercong::ReportFormat::jsonl
                                 : supercong::ReportFormat::table;
  supercong::SweepSummary summary = supercong::run_sweep(cfg);

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) {
      std::cerr << "error: cannot open " << out << "\n";
      return 2;
    }
    sink = &file;
  }
  if (cfg.format == supercong::ReportFormat::jsonl)
    supercong::render_jsonl(summary, *sink);
  else
    supercong::render_table(summary, *sink);
  supercong::render_summary(summary, std::cout);
  return summary.failed == 0 ? 0 : 1;
}

int cmd_wz(std::int64_t grid, std::int64_t telescope) {
  supercong::WzSummary s = supercong::run_wz(grid, telescope);
  for (const auto& line : s.failure_lines) std::cout << "FAIL " << line << "\n";
  std::cout << "wz checks=" << s.checked << " failures=" << s.failures << "\n";
  return s.failures == 0 ? 0 : 1;
}

int cmd_special(const std::string& kind, std::int64_t p, std::int64_t n,
                const std::string& x_text) {
  std::int64_t xn = 0, xd = 1;
  if (!parse_rational(x_text, xn, xd)) {
    std::cerr << "error: --x expects a rational like 1/4\n";
    return 2;
  }
  using namespace supercong;
  if (kind == "euler") {
    EulerTable t = euler_numbers_mod_p(p, n);
    std::cout << "E_" << n << " mod " << p << " = " << t.values.at(n) << "\n";
    std::cout << "E_" << n << " = " << euler_exact(n).get_str() << "\n";
  } else if (kind == "bernoulli") {
    BernoulliTable t = bernoulli_numbers_mod_p(p, n);
    std::cout << "B_" << n << " mod " << p << " = " << t.values.at(n) << "\n";
    std::cout << "B_" << n << " = " << bernoulli_exact(n).get_str() << "\n";
  } else if (kind == "euler-poly") {
    Residue r = euler_poly_mod_p(n, xn, xd, p);
    std::cout << "E_" << n << "(" << xn << "/" << xd << ") mod " << p << " = "
              << r.value() << "\n";
    std::cout << "E_" << n << "(" << xn << "/" << xd << ") = "
              << euler_poly_exact(n, make_rat(BigInt(xn), BigInt(xd))).get_str()
              << "\n";
  } else if (kind == "bernoulli-poly") {
    Residue r = bernoulli_poly_mod_p(n, xn, xd, p);
    std::cout << "B_" << n << "(" << xn << "/" << xd << ") mod " << p << " = "
              << r.value() << "\n";
    std::cout << "B_" << n << "(" << xn << "/" << xd << ") = "
              << bernoulli_poly_exact(n, make_rat(BigInt(xn), BigInt(xd)))
                     .get_str()
              << "\n";
  } else {
    std::cerr << "error: unknown kind " << kind << "\n";
    return 2;
  }
  return 0;
}

int cmd_list() {
  for (const auto& d : supercong::registry_list()) {
    std::cout << d.id << "\n  kind: "
              << (d.kind == supercong::CheckKind::congruence
                      ? "congruence mod p^" + std::to_string(d.exponent) +
                            ", primes p > " + std::to_string(d.min_p)
                      : "exact identity, " + d.range)
              << "\n  " << d.statement << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of binomial-sum supercongruences and "
               "their WZ certificates"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "sweep checks over a prime range");
  std::string checks = "all", primes, format = "table", out;
  int jobs = 1;
  verify->add_option("--checks", checks, "comma-separated check ids, or all");
  verify->add_option("--primes", primes, "prime range <lo>..<hi>")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "table or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));
  verify->add_option("--out", out, "write the report to a file");

  auto* wz = app.add_subcommand("wz", "run the exact WZ grids");
  std::int64_t grid = 60, telescope = 99;
  wz->add_option("--grid", grid, "pair/summand/reformulation grid bound");
  wz->add_option("--telescope", telescope, "telescoping sum bound");

  auto* special = app.add_subcommand("special", "query special numbers");
  std::string kind, x_text = "0/1";
  std::int64_t sp = 0, sn = 0;
  special->add_option("kind", kind,
                      "euler | bernoulli | euler-poly | bernoulli-poly")
      ->required();
  special->add_option("--p", sp, "odd prime")->required();
  special->add_option("--n", sn, "index")->required();
  special->add_option("--x", x_text, "rational argument A/B for polynomials");

  auto* list = app.add_subcommand("list", "print the check catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify(checks, primes, jobs, format, out);
    if (wz->parsed()) return cmd_wz(grid, telescope);
    if (special->parsed()) return cmd_special(kind, sp, sn, x_text);
    if (list->parsed()) return cmd_list();
  } catch (const supercong::arith_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
