#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "apolar/linalg.hpp"

namespace apolar {

/// Exponent vector, one entry per ambient variable.
struct Monomial {
  std::vector<unsigned> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<unsigned>(nvars, 0));
  }
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t size() const noexcept { return exponents.size(); }
  unsigned degree() const noexcept;
  unsigned operator[](std::size_t i) const { return exponents[i]; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exponentwise difference; requires divides(other) from the right operand.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  // Lexicographic on exponent vectors: x0 > x1 > ... for equal degree.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree e in n variables, ordered lex-descending
/// (x0^e first), with an index lookup. Shared between threads once built.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Number of monomials of degree e in n variables, saturating at SIZE_MAX.
std::size_t monomial_count(std::size_t nvars, unsigned degree);

/// Cached basis; throws SizeLimitExceeded above the configured cap.
std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t nvars,
                                                    unsigned degree);

/// Guardrail on the number of monomials in any single graded piece.
std::size_t max_monomials();
void set_max_monomials(std::size_t cap);
inline constexpr std::size_t kDefaultMaxMonomials = 20000;

/// Ordered list of variable names. The dual variable of `x` is written `t_x`
/// and shares its index.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::string dual_name(std::size_t i) const { return "t_" + names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

/// Sparse polynomial with exact rational coefficients. The same type carries
/// forms in S (primal variables) and operators in T (dual variables); which
/// one is meant is up to the caller.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, Rational c);
  static Polynomial monomial(Ring ring, Monomial m, Rational c = 1);
  static Polynomial variable(Ring ring, std::size_t i);

  const Ring& ring() const noexcept { return ring_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Homogeneous degree, or nullopt for the zero polynomial and mixed degrees.
  std::optional<unsigned> degree() const noexcept { return degree_; }
  bool is_homogeneous() const noexcept { return degree_.has_value(); }
  unsigned max_degree() const noexcept;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  /// Coefficients in the lex monomial basis of T_d / S_d.
  std::vector<Rational> coefficients(const MonomialBasis& basis) const;
  static Polynomial from_coefficients(const Ring& ring, const MonomialBasis& basis,
                                      std::span<const Rational> coeffs);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Human-readable form in the primal names, e.g. "3/2*x^2*y - y^3".
  std::string to_string() const;
  /// Same, with dual names t_x.
  std::string to_dual_string() const;

 private:
  void refresh_degree();
  std::string render(bool dual) const;

  Ring ring_;
  std::map<Monomial, Rational> terms_;
  std::optional<unsigned> degree_;
};

/// Exact degree-1 form over the dual variables, as a coefficient vector.
struct LinearForm {
  std::vector<Rational> coefficients;

  static LinearForm variable(std::size_t nvars, std::size_t i);
  std::size_t size() const noexcept { return coefficients.size(); }
  bool is_zero() const;
  Polynomial to_polynomial(const Ring& ring) const;
  std::string to_string(const Ring& ring) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm operator+(const LinearForm& a, const LinearForm& b);

/// g acting on F by substituting d/dx_i for t_i. Both polynomials must share
/// the variable list; the result lives in S.
Polynomial apply_operator(const Polynomial& g, const Polynomial& F);
Polynomial apply_operator(const LinearForm& l, const Polynomial& F);

/// Parses the textual grammar: signed terms, each an optional integer or p/q
/// coefficient followed by `*`-separated powers `name^k`.
/// An empty ring means "infer variables from the text in natural order".
/// With `dual_names`, identifiers of the form t_name resolve to name.
Polynomial parse_poly(std::string_view text, const Ring& ring = {},
                      bool allow_zero = false, bool dual_names = false);

/// Variables named in `text`, natural-sorted (x2 before x10).
std::vector<std::string> scan_variables(std::string_view text);

/// Linear form in dual variables: accepts both `t_x` and `x` spellings.
LinearForm parse_linear_form(std::string_view text, const Ring& ring);

/// Homogeneous form of degree d with integer coefficients uniform in [-B, B],
/// never zero. Deterministic in `seed` across platforms.
Polynomial random_form(const Ring& ring, unsigned degree, unsigned bound,
                       std::uint64_t seed);

}  // namespace apolar
