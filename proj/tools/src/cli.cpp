#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include "expanderlab/errors.hpp"
#include "expanderlab/fp_sets.hpp"
#include "expanderlab/report.hpp"
#include "expanderlab/spgraph.hpp"

namespace expanderlab::cli {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

std::uint32_t checked_prime(std::uint64_t v) {
  if (v < PrimeModulus::kMin || v > PrimeModulus::kMax || !is_prime(v)) {
    throw UsageError(std::to_string(v) + " is not a prime in [5, 2^31)");
  }
  return static_cast<std::uint32_t>(v);
}

void write_families(const RunConfig& cfg, std::ostream& out) {
  const auto primes = cfg.primes.empty() ? parse_primes("7,11,13") : cfg.primes;
  for (auto pv : primes) {
    const PrimeModulus p(pv);
    std::vector<FamilySpec> specs;
    if (cfg.families.empty()) {
      specs = structured_families(p);
    } else {
      for (const auto& f : cfg.families) {
        try {
          specs.push_back(parse_family(f));
        } catch (const DomainError& e) {
          throw UsageError("bad family '" + f + "': " + e.what());
        }
      }
    }
    for (const auto& spec : specs) {
      FpSet s(p);
      try {
        s = generate(spec, p);
      } catch (const DomainError& e) {
        throw UsageError("family " + describe(spec) + " is not available for p=" + std::to_string(pv) +
                         ": " + e.what());
      }
      out << pv << '\t' << describe(spec) << '\t' << s.size() << '\t' << s.to_string() << '\n';
    }
  }
}

void write_dump(const RunConfig& cfg) {
  const auto primes = cfg.primes.empty() ? parse_primes("7") : cfg.primes;
  const PrimeModulus p(primes.front());
  const auto graph = SumProductGraph::build(EdgeRule::standard(FuncTable::identity(FpSet::multiplicative_group(p))));
  std::ofstream os(cfg.dump_path, std::ios::binary);
  if (!os) throw UsageError("cannot open " + cfg.dump_path);
  dump_gram(gram(graph), os);
}

template <class Writer>
void write_file(const std::string& path, const std::vector<BoundReport>& reports, Writer w) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open " + path);
  w(os, reports);
  if (!os) throw UsageError("write failed for " + path);
}

std::string describe_failure(const BoundReport& r) {
  std::ostringstream os;
  os << "FAIL " << r.suite << '/' << r.theorem_id << " p=" << r.p << " family=" << r.family
     << " seed=" << r.seed << " lhs=" << r.lhs << " rhs=" << format_double(r.rhs);
  return os.str();
}

}  // namespace

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (std::regex_match(item, m, range)) {
      const auto lo = parse_u64(m[1], "prime range"), hi = parse_u64(m[2], "prime range");
      if (lo > hi || hi > PrimeModulus::kMax) throw UsageError("bad prime range '" + item + "'");
      if (hi - lo > 100000) throw UsageError("prime range too wide '" + item + "'");
      for (auto v = std::max<std::uint64_t>(lo, PrimeModulus::kMin); v <= hi; ++v) {
        if (is_prime(v)) out.push_back(static_cast<std::uint32_t>(v));
      }
    } else {
      const auto first = item.find_first_not_of(" \t");
      const auto last = item.find_last_not_of(" \t");
      if (first == std::string::npos) throw UsageError("empty entry in prime list '" + text + "'");
      out.push_back(checked_prime(parse_u64(item.substr(first, last - first + 1), "prime")));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw UsageError("no primes in '" + text + "'");
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.jobs == 0) throw UsageError("--jobs must be positive");
    if (cfg.command == "families") {
      write_families(cfg, out);
      return 0;
    }
    auto reports = run_suite(cfg);
    if (!cfg.inject_fault.empty()) {
      bool hit = false;
      for (auto& r : reports) {
        if (r.theorem_id == cfg.inject_fault) {
          r.holds = false;
          hit = true;
        }
      }
      if (!hit) throw UsageError("--inject-fault: no record has theorem id '" + cfg.inject_fault + "'");
    }
    if (!cfg.dump_path.empty()) {
      if (cfg.command != "graph") throw UsageError("--dump applies to the graph command");
      write_dump(cfg);
    }
    if (cfg.csv_path.empty() && cfg.json_path.empty()) write_csv(out, reports);
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, reports, write_csv);
    if (!cfg.json_path.empty()) write_file(cfg.json_path, reports, write_json);

    std::size_t failures = 0;
    for (const auto& r : reports) {
      if (r.holds && !*r.holds) {
        err << describe_failure(r) << '\n';
        ++failures;
      }
    }
    if (failures > 0) {
      err << failures << " of " << reports.size() << " records failed\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"expanderlab: sum-product expansion experiments over F_p and R"};
  app.set_config("--config", "", "Read options from a 'key = value' file; flags override it");
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::string primes, method = "automatic";
  std::optional<std::size_t> jobs;
  app.add_option("--p", primes, "Primes: list and ranges, e.g. 7..31 or 7,11,13");
  app.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per prime (suite default otherwise)");
  app.add_option("--jobs", jobs, "Worker threads (default EXPANDERLAB_JOBS or 1)");
  app.add_option("--family", cfg.families, "Set family, repeatable: interval(s,l) geometric(r,l[,s]) "
                                           "random(n,seed) subgroup(full|k=K|{...})");
  app.add_option("--tables", cfg.tables, "Function tables g, h: id or random")->capture_default_str();
  app.add_option("--k", cfg.k, "Exponent k (rational for real pp71, integer for t3)")->capture_default_str();
  app.add_option("--u", cfg.u, "Exponent u")->capture_default_str();
  app.add_option("--v", cfg.v, "Exponent v")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Admissibility cap for m")->capture_default_str();
  app.add_option("--max-param", cfg.max_param, "Curve parameters range over 1..N")->capture_default_str();
  app.add_option("--tolerance", cfg.spectral.tolerance, "Eigensolver Rayleigh tolerance")->capture_default_str();
  app.add_option("--residual-tolerance", cfg.spectral.residual_tolerance, "Eigensolver residual target")
      ->capture_default_str();
  app.add_option("--dense-limit", cfg.spectral.dense_limit, "Largest n for the dense solver")->capture_default_str();
  app.add_option("--max-iterations", cfg.spectral.max_iterations, "Power iteration cap")->capture_default_str();
  app.add_option("--method", method, "automatic, dense or power")
      ->check(CLI::IsMember({"automatic", "dense", "power"}))
      ->capture_default_str();
  app.add_option("--csv", cfg.csv_path, "Write CSV here (stdout when no output is given)");
  app.add_option("--json", cfg.json_path, "Write JSON here");
  app.add_option("--dump", cfg.dump_path, "graph: write the Gram matrix of the first prime");
  app.add_option("--inject-fault", cfg.inject_fault)->group("");

  auto* graph = app.add_subcommand("graph", "Regularity, Gram decomposition and oracle checks");
  graph->add_option("action", cfg.action, "verify: also check the Gram matrix")
      ->check(CLI::IsMember({"verify"}));
  app.add_subcommand("spectral", "Top eigenvalues, Perron check and discrepancy");
  auto* bounds = app.add_subcommand("bounds", "Finite-field expansion bounds");
  bounds->require_subcommand(1);
  for (const char* name : {"t1", "t2", "t3", "nnn1", "corollaries", "growth", "shifted"}) {
    bounds->add_subcommand(name);
  }
  auto* real = app.add_subcommand("real", "Expansion over the reals");
  real->require_subcommand(1);
  for (const char* name : {"energy", "pp71", "pp73", "curves"}) real->add_subcommand(name);
  app.add_subcommand("sweep", "All bounds suites plus a min-ratio summary");
  app.add_subcommand("families", "List the set families for each prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    for (auto* group : {bounds, real}) {
      if (group->parsed()) cfg.action = group->get_subcommands().front()->get_name();
    }
    if (!primes.empty()) cfg.primes = parse_primes(primes);
    cfg.spectral.method = method == "dense"   ? EigenMethod::dense
                          : method == "power" ? EigenMethod::deflated_power
                                              : EigenMethod::automatic;
    if (jobs) {
      cfg.jobs = *jobs;
    } else if (const char* env = std::getenv("EXPANDERLAB_JOBS"); env != nullptr && *env != '\0') {
      cfg.jobs = parse_u64(env, "EXPANDERLAB_JOBS");
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace expanderlab::cli
