#pragma once

#include <span>
#include <vector>

#include "apolar/linalg.hpp"

namespace apolar {

/// Dense univariate polynomial over Q; coefficient i multiplies u^i.
/// Always trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator-(const UPoly& a);
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// Distinct rational roots, ascending. Real roots are isolated with a Sturm
/// sequence and narrowed until at most one fraction with denominator bounded
/// by the leading coefficient fits, which is then tested exactly.
std::vector<Rational> rational_roots(const UPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t count_real_roots(const UPoly& p, const Rational& a, const Rational& b);

/// Fraction with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace apolar
