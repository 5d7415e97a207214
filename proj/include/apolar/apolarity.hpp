#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// Homogeneous ideal I of T = Q[t_0..t_n], truncated at top degree D.
///
/// Each graded piece I_e is stored through its annihilator I_e^⊥ ⊂ S_e under
/// the apolarity pairing (the inverse system). Coordinates on S_e are divided
/// powers: the vector c stands for sum_b c_b x^b / b!, which makes the pairing
/// with T_e in monomial coordinates the ordinary dot product. So
///   I_e = (I_e^⊥)^⊥,  dim T_e/I_e = dim I_e^⊥,
/// and sums, intersections and containments of ideals become intersections,
/// sums and reversed containments of inverse systems. Pieces above D are taken
/// to be all of T_e; every ideal built from a degree-d form satisfies that for
/// D = d + 1.
class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(Ring ring, std::vector<Subspace> inverse_system);

  static GradedIdeal unit(Ring ring, unsigned top_degree);
  static GradedIdeal zero(Ring ring, unsigned top_degree);

  const Ring& ring() const noexcept { return ring_; }
  unsigned top_degree() const noexcept {
    return static_cast<unsigned>(dual_.size() - 1);
  }

  /// I_e^⊥ in divided-power coordinates of S_e.
  const Subspace& inverse_system(unsigned e) const { return dual_.at(e); }

  /// I_e itself, as a subspace of T_e in lex monomial coordinates.
  /// Materializes a basis of size up to dim T_e.
  Subspace piece(unsigned e) const;
  std::size_t piece_dim(unsigned e) const;

  bool is_unit() const;

  /// I_e * T_1 ⊆ I_{e+1} for every e < D.
  bool satisfies_ideal_property() const;

  friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;

 private:
  Ring ring_;
  std::vector<Subspace> dual_;
};

struct HilbertFunction {
  std::vector<std::size_t> values;

  std::size_t total() const {
    return std::accumulate(values.begin(), values.end(), std::size_t{0});
  }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Matrix of h -> h.F from T_e to S_{d-e}; rows indexed by S_{d-e}, columns by
/// T_e, both in lex monomial order. Its kernel is F^⊥_e.
QMatrix catalecticant_matrix(const Polynomial& F, unsigned e);

/// F^⊥ with D = d + 1. The inverse system in degree e is spanned by the
/// derivatives of F of order d - e.
GradedIdeal perp_graded(const Polynomial& F);

/// (I : t) = {h : t h ∈ I}.
GradedIdeal colon_by_linear(const GradedIdeal& I, const LinearForm& t);
/// (F^⊥ : t).
GradedIdeal colon_by_linear(const Polynomial& F, const LinearForm& t);

/// I + (l_1, ..., l_k).
GradedIdeal add_linear_forms(const GradedIdeal& I, std::span<const LinearForm> forms);
inline GradedIdeal add_linear_form(const GradedIdeal& I, const LinearForm& l) {
  return add_linear_forms(I, std::span<const LinearForm>(&l, 1));
}

/// I T for an ideal I of the polynomial ring on `vars` ⊂ ambient.
GradedIdeal extend_to_ambient(const GradedIdeal& I, const std::vector<std::size_t>& vars,
                              const Ring& ambient);

/// I T + (all dual variables outside `vars`); equal to
/// add_linear_forms(extend_to_ambient(I, ...), complement variables) but built
/// without materializing the extension.
GradedIdeal extend_with_complement(const GradedIdeal& I,
                                   const std::vector<std::size_t>& vars,
                                   const Ring& ambient);

GradedIdeal graded_intersect(std::span<const GradedIdeal> ideals);
GradedIdeal graded_sum(const GradedIdeal& a, const GradedIdeal& b);

/// True iff small ⊆ big in every degree 0..D.
bool graded_contains(const GradedIdeal& big, const GradedIdeal& small);

HilbertFunction hilbert_function(const GradedIdeal& I);

/// Sum of the Hilbert values; throws NonArtinian when H(D) != 0.
std::size_t quotient_total_dim(const GradedIdeal& I);

}  // namespace apolar
