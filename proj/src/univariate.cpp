#include "apolar/univariate.hpp"

#include <algorithm>

#include "apolar/errors.hpp"

namespace apolar {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m = c_;
  const Rational lc = leading();
  for (auto& x : m) x /= lc;
  return UPoly(std::move(m));
}

UPoly operator-(const UPoly& a) {
  std::vector<Rational> n = a.c_;
  for (auto& x : n) x = -x;
  return UPoly(std::move(n));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational factor = rem[k + db] / lb;
    quo[k] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= factor * b.coefficients()[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = sgn(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

// Clears denominators and content; the leading coefficient of the result
// bounds the denominator of every rational root.
Integer integer_leading_coefficient(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, Integer(c.get_den()));
  Integer content = 0;
  for (const auto& c : p.coefficients()) content = gcd(content, Integer(c.get_num() * (l / c.get_den())));
  const Rational& lc = p.leading();
  Integer lead = lc.get_num() * (l / lc.get_den());
  return abs(lead / content);
}

}  // namespace

std::size_t count_real_roots(const UPoly& p, const Rational& a, const Rational& b) {
  const UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  const auto seq = sturm_sequence(q);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (lo == Rational(fl)) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  std::vector<Rational> roots;
  const UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return roots;
  if (q.degree() == 1) {
    roots.push_back(-q.coefficients()[0] / q.coefficients()[1]);
    return roots;
  }

  const auto seq = sturm_sequence(q);
  const Integer lead = integer_leading_coefficient(q);
  const Rational width(1, Integer(lead * lead * 2));

  // Cauchy bound: every real root lies strictly inside (-bound, bound).
  Rational bound = 0;
  for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, Rational(abs(q.coefficients()[i] / q.leading())));
  bound += 2;

  auto test = [&](const Rational& r) {
    if (sgn(q(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
      roots.push_back(r);
  };

  struct Interval {
    Rational lo, hi;
  };
  std::vector<Interval> work{{-bound, bound}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    const std::size_t n = sign_changes(seq, iv.lo) - sign_changes(seq, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (sgn(q(iv.hi)) == 0) {
        test(iv.hi);
        continue;
      }
      // The root is simple, so q has the sign of q(hi) exactly to its right.
      const int shi = sgn(q(iv.hi));
      while (iv.hi - iv.lo >= width) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        const int sm = sgn(q(mid));
        if (sm == 0) {
          test(mid);
          break;
        }
        if (sm == shi) {
          iv.hi = mid;
        } else {
          iv.lo = mid;
        }
      }
      test(simplest_rational_between(iv.lo, iv.hi));
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    test(mid);
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DimensionMismatch("interpolation data size");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * UPoly({-xs[k], Rational(1)}) + UPoly({coef[k]});
  }
  return result;
}

}  // namespace apolar
