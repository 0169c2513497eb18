// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "expanderlab/fp_sets.hpp"
#include "expanderlab/real_expand.hpp"

using namespace expanderlab;
using namespace expanderlab::cli;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

RunConfig config(const std::string& command, const std::string& action, const std::string& primes) {
  RunConfig cfg;
  cfg.command = command;
  cfg.action = action;
  if (!primes.empty()) cfg.primes = parse_primes(primes);
  return cfg;
}

std::vector<BoundReport> only(const std::vector<BoundReport>& all, const std::string& id) {
  std::vector<BoundReport> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const auto& r) { return r.theorem_id == id; });
  return out;
}

// Every record of `id` has holds == true; returns the count.
std::size_t all_hold(Verdict& v, const std::vector<BoundReport>& all, const std::string& id) {
  const auto recs = only(all, id);
  v.require(!recs.empty(), "no " + id + " records");
  for (const auto& r : recs) {
    if (!(r.holds && *r.holds)) {
      v.require(false, id + " fails at p=" + std::to_string(r.p) + " " + r.family);
      break;
    }
  }
  return recs.size();
}

std::map<std::uint32_t, std::size_t> per_prime(const std::vector<BoundReport>& recs) {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& r : recs) ++out[r.p];
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

Verdict graph_structure() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  auto cfg = config("graph", "verify", "7..31");
  cfg.trials = 5;
  const auto recs = run_suite(cfg);
  const auto primes = parse_primes("7..31");
  const auto reg = all_hold(v, recs, "regularity");
  all_hold(v, recs, "gram_decomposition");
  const auto counts = per_prime(only(recs, "gram_decomposition"));
  for (auto p : primes) v.require(counts.count(p) && counts.at(p) >= 6, "fewer than 5 random pairs at p=" + std::to_string(p));
  const double secs = seconds_since(t0);
  v.require(secs < 60, "runtime " + fmt(secs) + " s");
  if (v.pass) v.detail = std::to_string(reg) + " graphs over p in 7..31, " + fmt(secs) + " s";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  auto cfg = config("graph", "verify", "7..31");
  cfg.trials = 1;
  const auto recs = only(run_suite(cfg), "oracle");
  std::uint64_t compared = 0;
  for (const auto& r : recs) {
    const std::uint64_t n = (r.p - 1ULL) * (r.p - 1ULL);
    const std::uint64_t expected = r.p <= 13 ? n * n : 1000;
    v.require(static_cast<std::uint64_t>(r.rhs) == expected, "wrong comparison count at p=" + std::to_string(r.p));
    v.require(r.holds && *r.holds, "gram differs from count_solutions at p=" + std::to_string(r.p));
    compared += static_cast<std::uint64_t>(r.rhs);
  }
  v.require(per_prime(recs).size() == parse_primes("7..31").size(), "missing primes");
  if (v.pass) v.detail = std::to_string(compared) + " entries compared";
  return v;
}

std::vector<BoundReport> spectral_records(double& secs) {
  const auto t0 = std::chrono::steady_clock::now();
  auto cfg = config("spectral", "", "7..61");
  cfg.trials = 200;
  auto recs = run_suite(cfg);
  secs = seconds_since(t0);
  return recs;
}

Verdict spectra(const std::vector<BoundReport>& recs, double secs) {
  Verdict v;
  const auto primes = parse_primes("7..61");
  for (const char* id : {"theta1", "theta2", "orthogonality", "perron", "method_agreement"}) all_hold(v, recs, id);
  v.require(per_prime(only(recs, "theta2")).size() == primes.size(), "missing primes");
  std::size_t both = 0;
  for (auto p : primes) {
    const bool dense_runs = (p - 1ULL) * (p - 1ULL) <= SpectralOptions{}.dense_limit;
    const bool has = per_prime(only(recs, "method_agreement")).count(p) > 0;
    v.require(dense_runs == has, "method agreement missing at p=" + std::to_string(p));
    both += has;
  }
  v.require(secs < 600, "runtime " + fmt(secs) + " s");
  if (v.pass) {
    v.detail = "p in 7..61, dense vs power compared at " + std::to_string(both) + " primes, " + fmt(secs) + " s";
  }
  return v;
}

Verdict discrepancy(const std::vector<BoundReport>& recs) {
  Verdict v;
  std::size_t pairs = 0;
  const auto th1 = only(recs, "th1");
  const auto counts = per_prime(th1);
  for (std::uint32_t p : {7u, 11u, 13u, 31u}) {
    v.require(counts.count(p) && counts.at(p) == 200, "expected 200 pairs at p=" + std::to_string(p));
    for (const auto& r : th1) {
      if (r.p != p) continue;
      v.require(r.holds && *r.holds, "discrepancy fails at p=" + std::to_string(p));
      ++pairs;
    }
  }
  if (v.pass) v.detail = std::to_string(pairs) + " (S,T) pairs, zero failures";
  return v;
}

Verdict theorem_t1(std::vector<BoundReport>& t1_all) {
  Verdict v;
  std::size_t structured = 0, random = 0;
  for (const char* tables : {"id", "random"}) {
    auto cfg = config("bounds", "t1", "7,11,13");
    cfg.trials = 100;
    cfg.tables = tables;
    const auto recs = run_suite(cfg);
    t1_all.insert(t1_all.end(), recs.begin(), recs.end());
    const auto t1 = only(recs, "t1");
    all_hold(v, recs, "t1");
    for (std::uint32_t p : {7u, 11u, 13u}) {
      std::size_t rnd = 0, fam = 0;
      for (const auto& r : t1) {
        if (r.p != p) continue;
        (r.family.rfind("random(", 0) == 0 && r.family.find(';') != std::string::npos ? rnd : fam) += 1;
      }
      const auto expected = structured_families(PrimeModulus(p)).size();
      v.require(rnd == 100, "expected 100 random triples at p=" + std::to_string(p));
      v.require(fam == expected, "structured families missing at p=" + std::to_string(p));
      random += rnd;
      structured += fam;
    }
  }
  if (v.pass) {
    v.detail = std::to_string(random) + " random triples and " + std::to_string(structured) +
               " structured sets, identity and random tables";
  }
  return v;
}

Verdict proof_constructions(const std::vector<BoundReport>& t1_recs) {
  Verdict v;
  const auto t1 = all_hold(v, t1_recs, "t1_proof_sets");
  const auto eq = only(t1_recs, "eqca");
  all_hold(v, t1_recs, "eqca");
  for (const auto& r : eq) v.require(r.m && r.lhs <= *r.m, "eqca count above m");
  std::size_t t2 = 0;
  for (const char* tables : {"id", "random"}) {
    auto cfg = config("bounds", "t2", "7,11,13");
    cfg.trials = 100;
    cfg.tables = tables;
    t2 += all_hold(v, run_suite(cfg), "t2_proof_sets");
  }
  if (v.pass) {
    v.detail = std::to_string(t1) + " t1 and " + std::to_string(t2) + " t2 constructions, " +
               std::to_string(eq.size() * 1000) + " eqca samples";
  }
  return v;
}

Verdict growth() {
  Verdict v;
  auto cfg = config("bounds", "growth", "5,11,17,23,29");
  cfg.trials = 50;
  const auto injective = run_suite(cfg);
  cfg.primes = parse_primes("7,13,19,31");
  const auto other = run_suite(cfg);
  std::size_t sets = 0;
  for (const auto* recs : {&injective, &other}) {
    sets += all_hold(v, *recs, "growth_containment");
    all_hold(v, *recs, "plunnecke");
  }
  for (const char* id : {"growth_equality", "growth_gamma"}) {
    all_hold(v, injective, id);
    for (const auto& r : only(injective, id)) v.require(r.holds.has_value(), std::string(id) + " not asserted");
  }
  if (v.pass) v.detail = std::to_string(sets) + " sets; equality asserted for p in {5,11,17,23,29}";
  return v;
}

Verdict real_curves() {
  Verdict v;
  auto cfg = config("real", "curves", "");
  cfg.max_param = 6;
  const auto recs = run_suite(cfg);
  const auto pairs = all_hold(v, recs, "curves");
  all_hold(v, recs, "duality");
  for (const auto& r : only(recs, "duality")) v.require(r.rhs >= 1000, "fewer than 1000 duality checks");

  const auto pts = curve_intersect(CurveParams(1, 2), CurveParams(2, 1));
  v.require(pts.size() == 3, "gamma(1,2) and gamma(2,1) do not meet in 3 points");
  bool found = false;
  for (const auto& pt : pts) {
    v.require(pt.verified, "unverified intersection point");
    found = found || (pt.y_exact && *pt.y_exact == -3 && pt.yp_exact && *pt.yp_exact == -3);
  }
  v.require(found, "(-3,-3) missing");
  if (v.pass) v.detail = std::to_string(pairs) + " curve records, 3 points on the known pair";
  return v;
}

Verdict real_chains() {
  Verdict v;
  const auto energy = run_suite(config("real", "energy", ""));
  const auto sets = all_hold(v, energy, "energy_cs");
  all_hold(v, energy, "dyadic");
  v.require(sets >= 1000, "fewer than 1000 energy sets");
  std::size_t chains = 0;
  for (const char* k : {"1", "2", "1/2", "-1"}) {
    auto cfg = config("real", "pp71", "");
    cfg.k = k;
    const auto recs = run_suite(cfg);
    chains += all_hold(v, recs, "pp71");
    all_hold(v, recs, "chain");
  }
  const auto pp73 = all_hold(v, run_suite(config("real", "pp73", "")), "pp73");
  v.require(mult_energy_real(RealSet::of({1, 2})).energy == 6, "E({1,2}) != 6");
  v.require(mult_energy_real(RealSet::geometric(1, 2, 5)).energy == 85, "E({1,...,16}) != 85");
  if (v.pass) {
    v.detail = std::to_string(sets) + " energy sets, " + std::to_string(chains) + " pp71 chains, " +
               std::to_string(pp73) + " pp73 pairs";
  }
  return v;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / "expanderlab_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"graph", "verify", "--p", "7..13"},      {"spectral", "--p", "7..19", "--trials", "50"},
      {"bounds", "t1", "--p", "7,11"},           {"bounds", "growth"},
      {"bounds", "shifted", "--tables", "random"}, {"real", "energy", "--trials", "200"},
      {"real", "pp71", "--k", "1/2"},           {"real", "curves", "--max-param", "4"},
      {"sweep", "--p", "7,11", "--trials", "10"}};
  int n = 0;
  for (const auto& cmd : commands) {
    std::string csv, json;
    for (const char* jobs : {"1", "1", "3"}) {
      auto args = cmd;
      const auto c = dir / (std::to_string(n) + ".csv"), j = dir / (std::to_string(n) + ".json");
      ++n;
      args.insert(args.begin(), "expanderlab");
      for (const auto& extra : {std::string("--jobs"), std::string(jobs), std::string("--csv"), c.string(),
                                std::string("--json"), j.string()}) {
        args.push_back(extra);
      }
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
      v.require(code == 0, cmd[0] + " exited " + std::to_string(code));
      const auto c_text = slurp(c), j_text = slurp(j);
      if (csv.empty()) {
        csv = c_text;
        json = j_text;
        v.require(!csv.empty(), "empty report");
      } else {
        v.require(csv == c_text && json == j_text, "reports differ for " + cmd[0] + " " + cmd[1]);
      }
    }
  }
  fs::remove_all(dir);
  if (v.pass) v.detail = std::to_string(commands.size()) + " commands, 3 runs each (jobs 1, 1, 3), CSV and JSON identical";
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Verdict()>& fn) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " " << title << ": " << v.detail << std::endl;
  };

  report(1, "graph structure", graph_structure);
  report(2, "oracle equivalence", oracle_equivalence);
  double spectral_secs = 0;
  std::vector<BoundReport> spectral;
  std::string spectral_error;
  try {
    spectral = spectral_records(spectral_secs);
  } catch (const std::exception& e) {
    spectral_error = e.what();
  }
  auto guarded = [&](auto fn) {
    return [&, fn] {
      if (!spectral_error.empty()) return Verdict{false, "exception: " + spectral_error};
      return fn();
    };
  };
  report(3, "spectra", guarded([&] { return spectra(spectral, spectral_secs); }));
  report(4, "discrepancy", guarded([&] { return discrepancy(spectral); }));
  std::vector<BoundReport> t1;
  report(5, "theorem t1", [&] { return theorem_t1(t1); });
  report(6, "proof constructions", [&] { return proof_constructions(t1); });
  report(7, "growth chain", growth);
  report(8, "real curves", real_curves);
  report(9, "real chains", real_chains);
  report(10, "determinism", determinism);
  std::cout << (10 - failures) << " of 10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
