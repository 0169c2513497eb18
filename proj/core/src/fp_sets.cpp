#include "expanderlab/fp_sets.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "expanderlab/errors.hpp"
#include "expanderlab/rng.hpp"

namespace expanderlab {

namespace {

void require_same(const FpSet& a, const FpSet& b) {
  if (!(a.modulus() == b.modulus())) throw DomainError("modulus mismatch");
}

}  // namespace

FpSet sumset(const FpSet& a, const FpSet& b) {
  require_same(a, b);
  const auto p = a.modulus();
  return image_of([p](Residue x, Residue y) { return p.add(x, y); }, a, b);
}

FpSet productset(const FpSet& a, const FpSet& b) {
  require_same(a, b);
  const auto p = a.modulus();
  FpSet out = image_of([p](Residue x, Residue y) { return p.mul(x, y); }, a, b);
  if (a.nonzero_only() && b.nonzero_only()) {
    FpSet nz(p, true);
    out.for_each([&](Residue x) { nz.insert_residue(x); });
    return nz;
  }
  return out;
}

FpSet difference_set(const FpSet& a, const FpSet& b) {
  require_same(a, b);
  const auto p = a.modulus();
  return image_of([p](Residue x, Residue y) { return p.sub(x, y); }, a, b);
}

FpSet power_set(const FpSet& a, std::uint32_t k) {
  const auto p = a.modulus();
  FpSet out(p, a.nonzero_only());
  a.for_each([&](Residue x) { out.insert_residue(p.pow(x, k)); });
  return out;
}

FpSet image(const FnForm& f, const FpSet& a, const FpSet& b) {
  require_same(a, b);
  if (!(f.modulus() == a.modulus())) throw DomainError("function modulus mismatch");
  return image_of(f, a, b);
}

std::uint64_t mult_energy(const FpSet& a) {
  if (a.contains(0)) throw DomainError("multiplicative energy needs a subset of F_p^*");
  const auto p = a.modulus();
  std::vector<std::uint64_t> r(p.value(), 0);
  a.for_each([&](Residue x) { a.for_each([&](Residue y) { ++r[p.mul(x, y)]; }); });
  std::uint64_t e = 0;
  for (auto c : r) e += c * c;
  return e;
}

FpSet generate(const FamilySpec& spec, PrimeModulus p, bool nonzero_only) {
  struct Visitor {
    PrimeModulus p;
    bool nonzero_only;
    FpSet operator()(const IntervalFamily& f) const {
      if (f.length > p.value() - (nonzero_only ? 1U : 0U)) {
        throw DomainError("interval longer than the field");
      }
      FpSet s(p, nonzero_only);
      for (std::uint32_t i = 0; i < f.length; ++i) s.insert(f.start + i);
      return s;
    }
    FpSet operator()(const GeometricFamily& f) const {
      FpSet s(p, nonzero_only);
      Residue x = p.reduce(f.start);
      const Residue r = p.reduce(f.ratio);
      if (r == 0 || x == 0) throw DomainError("geometric family needs nonzero ratio and start");
      for (std::uint32_t i = 0; i < f.length; ++i) {
        if (s.contains(x)) throw DomainError("geometric progression repeats before its length");
        s.insert_residue(x);
        x = p.mul(x, r);
      }
      return s;
    }
    FpSet operator()(const RandomFamily& f) const {
      const std::uint32_t lo = nonzero_only ? 1 : 0;
      if (f.size > p.value() - lo) throw DomainError("random family larger than the field");
      std::vector<Residue> pool(p.value() - lo);
      std::iota(pool.begin(), pool.end(), lo);
      Rng rng(f.seed);
      rng.partial_shuffle(pool, f.size);
      FpSet s(p, nonzero_only);
      for (std::uint32_t i = 0; i < f.size; ++i) s.insert_residue(pool[i]);
      return s;
    }
    FpSet operator()(const SubgroupFamily& f) const {
      FpSet g = materialize(f.subgroup, p);
      if (nonzero_only) return g;
      FpSet s(p, false);
      g.for_each([&](Residue x) { s.insert_residue(x); });
      return s;
    }
  };
  return std::visit(Visitor{p, nonzero_only}, spec);
}

std::string describe(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const IntervalFamily& f) const {
      return "interval(" + std::to_string(f.start) + "," + std::to_string(f.length) + ")";
    }
    std::string operator()(const GeometricFamily& f) const {
      std::string s = "geometric(" + std::to_string(f.ratio) + "," + std::to_string(f.length);
      if (f.start != 1) s += "," + std::to_string(f.start);
      return s + ")";
    }
    std::string operator()(const RandomFamily& f) const {
      return "random(" + std::to_string(f.size) + "," + std::to_string(f.seed) + ")";
    }
    std::string operator()(const SubgroupFamily& f) const {
      return "subgroup(" + describe(f.subgroup) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

namespace {

std::vector<std::int64_t> parse_ints(const std::string& body, char sep) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t next = std::min(body.find(sep, pos), body.size());
    const std::string tok = body.substr(pos, next - pos);
    if (tok.empty()) {
      if (next == body.size() && out.empty() && body.empty()) break;
      throw DomainError("empty field in family spec");
    }
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw DomainError("not an integer: '" + tok + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  static const std::regex shape(R"(\s*([a-z]+)\((.*)\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw DomainError("bad family spec: '" + text + "'");
  const std::string kind = m[1];
  std::string body = m[2];
  body.erase(std::remove(body.begin(), body.end(), ' '), body.end());

  if (kind == "subgroup") {
    if (body == "full") return SubgroupFamily{FullGroup{}};
    if (body.rfind("k=", 0) == 0) {
      const auto v = parse_ints(body.substr(2), ',');
      if (v.size() != 1 || v[0] < 1) throw DomainError("bad subgroup exponent in '" + text + "'");
      return SubgroupFamily{KthPowers{static_cast<std::uint32_t>(v[0])}};
    }
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
      return SubgroupFamily{ExplicitSubgroup{parse_ints(body.substr(1, body.size() - 2), ',')}};
    }
    throw DomainError("bad subgroup spec: '" + text + "'");
  }

  const auto v = parse_ints(body, ',');
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (v.size() < lo || v.size() > hi) throw DomainError("wrong argument count in '" + text + "'");
  };
  auto length = [&](std::int64_t x) {
    if (x < 0 || x > static_cast<std::int64_t>(PrimeModulus::kMax)) {
      throw DomainError("bad length in '" + text + "'");
    }
    return static_cast<std::uint32_t>(x);
  };
  if (kind == "interval") {
    need(2, 2);
    return IntervalFamily{v[0], length(v[1])};
  }
  if (kind == "geometric") {
    need(2, 3);
    return GeometricFamily{v[0], length(v[1]), v.size() == 3 ? v[2] : 1};
  }
  if (kind == "random") {
    need(2, 2);
    if (v[1] < 0) throw DomainError("seed must be nonnegative");
    return RandomFamily{length(v[0]), static_cast<std::uint64_t>(v[1])};
  }
  throw DomainError("unknown family kind '" + kind + "'");
}

std::vector<FamilySpec> structured_families(PrimeModulus p) {
  const std::uint32_t q = p.group_order();
  std::vector<FamilySpec> out;
  std::vector<std::uint32_t> lengths{1, 2, 3, q / 2, q};
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  for (auto len : lengths) out.push_back(IntervalFamily{1, len});
  for (std::int64_t r : {2, 3}) {
    const std::uint32_t ord = p.order(static_cast<Residue>(r));
    std::vector<std::uint32_t> glen{2, 3, 4, ord};
    std::sort(glen.begin(), glen.end());
    glen.erase(std::unique(glen.begin(), glen.end()), glen.end());
    for (auto len : glen) {
      if (len <= ord) out.push_back(GeometricFamily{r, len, 1});
    }
  }
  for (std::uint32_t k = 1; k <= q; ++k) {
    if (q % k == 0) out.push_back(SubgroupFamily{KthPowers{k}});
  }
  return out;
}

}  // namespace expanderlab
