#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/blocks.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/univariate.hpp"

namespace apolar {

// ------------------------------------------------------------- monomials

/// Waring rank of x_0^a_0 ... x_n^a_n (all a_i >= 1): the product of
/// (a_i + 1) over all exponents except one minimal one; 1 for a pure power.
std::size_t monomial_rank(std::span<const unsigned> exponents);

/// Cactus rank under a_0 + ... + a_{n-1} <= a_n (exponents sorted ascending):
/// the product of (a_i + 1) over all but the largest exponent.
/// Throws AssumptionNotSatisfied otherwise.
std::size_t monomial_crank(std::span<const unsigned> exponents);

/// Position of a minimal exponent, lowest position on ties. Its dual variable
/// computes the rank.
std::size_t monomial_computing_form(std::span<const unsigned> exponents);

// ---------------------------------------------------------- binary forms

/// Shape of F^⊥ = (g1, g2) for a binary form of degree d.
struct BinaryPerpProfile {
  unsigned degree = 0;
  unsigned d1 = 0;
  unsigned d2 = 0;
  Subspace g1_candidates;  // F^⊥_{d1} in lex coordinates of T_{d1}
  bool squarefree_at_d1 = false;
  unsigned rank = 0;
  unsigned crank = 0;
};

/// Binary form (over a 2-variable ring, in either S or T coordinates) given
/// by its coefficients c_j of a^(n-j) b^j.
std::vector<Rational> binary_coefficients(const Polynomial& g);

/// No repeated linear factor over the algebraic closure.
bool squarefree_test(const Polynomial& g);
bool squarefree_test(std::span<const Rational> binary_coeffs);

/// Rational linear factors of a binary form with their multiplicities.
struct LinearFactor {
  LinearForm form;
  unsigned multiplicity = 0;
};
std::vector<LinearFactor> rational_linear_factors(std::span<const Rational> binary_coeffs);

/// Discriminant of a binary form up to a nonzero constant: the resultant of
/// its two partial derivatives (Sylvester determinant).
Rational binary_discriminant(std::span<const Rational> binary_coeffs);

BinaryPerpProfile binary_profile(const Polynomial& F);

/// A rational linear form t with dim T/((F^⊥:t)+(t)) = rk(F).
/// Throws AlgebraicExtensionRequired when no rational candidate works.
LinearForm binary_computing_form(const Polynomial& F);

// ---------------------------------------------------------------- bounds

/// dim T/((F^⊥ : t) + (t)); a lower bound for rk(F) for every t.
std::size_t rank_lower_bound(const Polynomial& F, const LinearForm& t);

struct CrankBound {
  std::size_t value = 0;          // minimum over the samples
  bool samples_agreed = true;
  std::vector<LinearForm> forms;  // sampled l, in order
  std::vector<std::size_t> values;
};

/// dim T/(F^⊥ + (l)) minimized over `samples` random l with coefficients
/// in [-10, 10]; the generic value bounds crk(F) from below.
CrankBound crank_lower_bound(const Polynomial& F, std::size_t samples, std::uint64_t seed);
std::size_t crank_of_sample(const Polynomial& F, const LinearForm& l);

// ----------------------------------------------------- single forms

enum class FormClass { monomial, binary, other };

std::string to_string(FormClass c);

/// Closed-form rank of a monomial or a binary form with a witness when one
/// exists over Q (always for monomials).
struct FormRank {
  FormClass form_class = FormClass::other;
  std::optional<std::size_t> value;
  std::optional<LinearForm> witness;
  std::string note;
};

FormClass classify(const Polynomial& F);
FormRank waring_rank(const Polynomial& F);
FormRank cactus_rank(const Polynomial& F);

// ------------------------------------------------------------- additivity

enum class RankKind { waring, cactus };
enum class Verdict { certified_equal, bound_only };

std::string to_string(RankKind k);
std::string to_string(Verdict v);

struct RankCertificate {
  RankKind kind = RankKind::waring;
  std::size_t value = 0;
  std::size_t upper_bound = 0;
  std::size_t lower_bound = 0;
  /// Waring: one computing form per block, embedded in the ambient ring.
  /// Cactus: the sampled general forms.
  std::vector<LinearForm> witnesses;
  std::vector<std::size_t> block_values;
  std::vector<FormClass> block_classes;
  Verdict verdict = Verdict::bound_only;
  std::string lower_bound_method;
  /// Waring only: dim T/((F^⊥:t)+(t)) for t the sum of the block witnesses.
  std::optional<std::size_t> sum_witness_bound;
  /// Cactus only: generic value for F_1 + ... + F_k, k = 1..m.
  std::vector<std::size_t> partial_sums;
  bool samples_agreed = true;
  std::vector<std::string> notes;
};

/// rk(F_1 + ... + F_m) for coprime blocks, each a monomial or a binary form.
/// The lower bound is dim T/(J_1 ∩ ... ∩ J_m) + (m - 1) with
/// J_i = (F_i^⊥ : t_i) + (t_i) + (other blocks' variables), valid once every
/// t_i computes rk(F_i) and t_i.F_i != 0; both are checked.
RankCertificate additive_rank(const BlockDecomposition& bd);

/// crk(F_1 + ... + F_m); blocks are binary forms or monomials with
/// a_0 + ... + a_{n-1} <= a_n. Partial sums are folded left to right.
RankCertificate additive_crank(const BlockDecomposition& bd, std::size_t samples,
                               std::uint64_t seed);

/// J_i = (F_i^⊥ : t_i) + (t_i) + (variables of the other blocks), in the
/// ambient ring with top degree d + 1. `block_witness` is in block coordinates.
GradedIdeal waring_block_ideal(const BlockDecomposition& bd, std::size_t i,
                               const LinearForm& block_witness);

/// F_i^⊥ + (l_i) + (variables of the other blocks).
GradedIdeal cactus_block_ideal(const BlockDecomposition& bd, std::size_t i,
                               const LinearForm& block_form);

}  // namespace apolar
