#include "expanderlab/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "expanderlab/errors.hpp"

namespace expanderlab {

Rational rational_pow(const Rational& q, long e) {
  if (e < 0) {
    if (sgn(q) == 0) throw DomainError("zero to a negative power");
    return rational_pow(Rational(1 / q), -e);
  }
  Rational result(1), base(q);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double QPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out(c_);
  const Rational lead = c_.back();
  for (auto& c : out) c /= lead;
  return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> out(a.c_);
  for (auto& c : out) c *= s;
  return QPoly(std::move(out));
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

double RootInterval::approx() const {
  if (exact) return lo.get_d();
  return Rational((lo + hi) / 2).get_d();
}

SturmSequence::SturmSequence(const QPoly& squarefree) {
  if (squarefree.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  seq_.push_back(squarefree);
  seq_.push_back(squarefree.derivative());
  while (!seq_.back().is_zero()) {
    const QPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    seq_.push_back(Rational(-1) * r);
  }
  seq_.pop_back();
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no isolated roots");
  std::vector<RootInterval> out;
  const QPoly s = squarefree_part(p);
  if (s.degree() <= 0) return out;
  const SturmSequence sturm(s);

  // Cauchy bound: every root satisfies |r| < 1 + max |c_i / c_n|.
  Rational bound(0);
  for (int i = 0; i < s.degree(); ++i) {
    const Rational r = abs(Rational(s.coeff(static_cast<std::size_t>(i)) / s.leading()));
    if (r > bound) bound = r;
  }
  bound += 1;

  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int n = sturm.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });

  for (auto& [lo, hi] : isolated) {
    RootInterval ri{lo, hi};
    if (sgn(s(hi)) == 0) {
      ri = RootInterval{hi, hi, true};
    }
    while (!ri.exact && cmp(ri.hi - ri.lo, width) > 0) {
      const Rational mid = (ri.lo + ri.hi) / 2;
      if (sgn(s(mid)) == 0) {
        ri = RootInterval{mid, mid, true};
      } else if (sturm.count(ri.lo, mid) == 1) {
        ri.hi = mid;
      } else {
        ri.lo = mid;
      }
    }
    if (!ri.exact) {
      // A rational root hides behind its simplest representative.
      const Rational guess = simplest_between(ri.lo, ri.hi);
      if (cmp(guess, ri.lo) > 0 && sgn(s(guess)) == 0) ri = RootInterval{guess, guess, true};
    }
    out.push_back(std::move(ri));
  }
  return out;
}

bool shares_root(const QPoly& p, const RootInterval& root, const QPoly& q) {
  if (root.exact) return sgn(q(root.lo)) == 0;
  const QPoly g = gcd(p, q);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count(root.lo, root.hi) == 1;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (cmp(lo, hi) > 0) throw DomainError("empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (cmp(Rational(fl), lo) == 0) return lo;
  if (cmp(Rational(fl + 1), hi) <= 0) return Rational(fl + 1);
  const Rational inner = simplest_between(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
  return Rational(fl + 1 / inner);
}

}  // namespace expanderlab
