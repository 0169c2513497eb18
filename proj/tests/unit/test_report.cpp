#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "expanderlab/report.hpp"

using namespace expanderlab;

namespace {

BoundReport sample() {
  BoundReport r;
  r.suite = "bounds";
  r.theorem_id = "t1";
  r.p = 7;
  r.family = "interval(1,3)";
  r.size_a = r.size_b = r.size_c = 6;
  r.m = 2;
  r.lhs = 60;
  r.rhs_exact = make_rational(21, 8);
  r.rhs = 21.0 / 8.0;
  r.ratio = 60.0 * 8.0 / 21.0;
  r.holds = true;
  r.exponent = 0.25;
  r.seed = 42;
  return r;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto end = s.find("\r\n", pos);
    out.push_back(s.substr(pos, end - pos));
    pos = end + 2;
  }
  return out;
}

}  // namespace

TEST(CsvEscape, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_escape("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(csv_escape(""), "");
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(2.625), "2.625");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(3.0), "3");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  for (double x : {1.0 / 3.0, 22.857142857142858, 1e-300, 6.02214076e23, -0.75}) {
    EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
  }
}

TEST(Csv, HeaderAndRecordLayout) {
  std::ostringstream os;
  auto r = sample();
  auto q = sample();
  q.family = "geometric(2,4)";
  q.rhs_exact.reset();
  q.rhs = 1.5;
  q.m.reset();
  q.holds.reset();
  q.exponent.reset();
  q.ratio = std::numeric_limits<double>::infinity();
  write_csv(os, {r, q});
  const auto text = os.str();
  EXPECT_EQ(text.substr(text.size() - 2), "\r\n");
  const auto lines = split_lines(text);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "suite,theorem_id,p,family,size_A,size_B,size_C,m,lhs,rhs,ratio,holds,exponent,seed");
  EXPECT_EQ(lines[1], "bounds,t1,7,\"interval(1,3)\",6,6,6,2,60,21/8," + format_double(r.ratio) + ",true,0.25,42");
  EXPECT_EQ(lines[2], "bounds,t1,7,\"geometric(2,4)\",6,6,6,,60,1.5,,,,42");
}

TEST(Csv, EmptyInputWritesHeaderOnly) {
  std::ostringstream os;
  write_csv(os, {});
  EXPECT_EQ(split_lines(os.str()).size(), 1u);
}

TEST(Json, SortedKeysAndNulls) {
  auto q = sample();
  q.holds.reset();
  q.m.reset();
  q.exponent.reset();
  std::ostringstream os;
  write_json(os, {sample(), q});
  const auto parsed = nlohmann::json::parse(os.str());
  ASSERT_TRUE(parsed.is_array());
  ASSERT_EQ(parsed.size(), 2u);
  const auto& a = parsed[0];
  EXPECT_EQ(a["rhs"], "21/8");
  EXPECT_EQ(a["holds"], true);
  EXPECT_EQ(a["lhs"], 60);
  EXPECT_EQ(a["m"], 2);
  EXPECT_EQ(a["family"], "interval(1,3)");
  EXPECT_EQ(a["size_A"], 6);
  EXPECT_TRUE(parsed[1]["holds"].is_null());
  EXPECT_TRUE(parsed[1]["m"].is_null());
  EXPECT_TRUE(parsed[1]["exponent"].is_null());

  std::vector<std::string> keys;
  for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(keys.size(), std::size(kReportColumns));
  // keys appear sorted in the raw text too, one record per line
  const auto text = os.str();
  EXPECT_LT(text.find("\"exponent\""), text.find("\"family\""));
  EXPECT_LT(text.find("\"size_C\""), text.find("\"suite\""));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);

  std::ostringstream empty;
  write_json(empty, {});
  EXPECT_EQ(empty.str(), "[]\n");
}

TEST(SortReports, KeyOrderAndStability) {
  std::vector<BoundReport> v;
  auto add = [&](const char* suite, const char* id, std::uint32_t p, std::uint64_t seed, const char* family) {
    BoundReport r;
    r.suite = suite;
    r.theorem_id = id;
    r.p = p;
    r.seed = seed;
    r.family = family;
    v.push_back(r);
  };
  add("real", "pp71", 0, 1, "x");
  add("bounds", "t2", 7, 1, "x");
  add("bounds", "t1", 11, 1, "x");
  add("bounds", "t1", 7, 5, "first");
  add("bounds", "t1", 7, 5, "second");
  add("bounds", "t1", 7, 2, "x");
  sort_reports(v);
  EXPECT_EQ(v[0].seed, 2u);
  EXPECT_EQ(v[1].family, "first");
  EXPECT_EQ(v[2].family, "second");
  EXPECT_EQ(v[3].p, 11u);
  EXPECT_EQ(v[4].theorem_id, "t2");
  EXPECT_EQ(v[5].suite, "real");
}
