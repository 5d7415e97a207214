#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apolar;
using apolar::testing::dual_var;
using apolar::testing::ring_of;

namespace {

// Degreewise count of monomials outside the ideal generated by `gens`, by
// enumeration.
std::vector<std::size_t> standard_monomial_counts(std::size_t n,
                                                  const std::vector<Monomial>& gens,
                                                  unsigned top) {
  std::vector<std::size_t> h;
  for (unsigned e = 0; e <= top; ++e) {
    std::size_t count = 0;
    const MonomialBasis basis(n, e);
    for (const Monomial& m : basis.monomials()) {
      bool inside = false;
      for (const Monomial& g : gens) inside = inside || g.divides(m);
      if (!inside) ++count;
    }
    h.push_back(count);
  }
  return h;
}

}  // namespace

TEST_CASE("catalecticant matrices") {
  SUBCASE("pure power in one variable") {
    const QMatrix m = catalecticant_matrix(parse_poly("x^4"), 4);
    CHECK(m == QMatrix{{24}});
  }
  SUBCASE("x^3 + y^3 in degree 1 has trivial kernel") {
    CHECK(kernel_basis(catalecticant_matrix(parse_poly("x^3 + y^3"), 1)).dim() == 0);
  }
  SUBCASE("x^3 + y^3 in degree 2 has kernel t_x t_y") {
    const Subspace k = kernel_basis(catalecticant_matrix(parse_poly("x^3 + y^3"), 2));
    CHECK(k.dim() == 1);
    // lex basis of T_2: t_x^2, t_x t_y, t_y^2
    CHECK(k.contains(apolar::testing::vec({0, 1, 0})));
  }
  SUBCASE("degree out of range") {
    CHECK_THROWS_AS(catalecticant_matrix(parse_poly("x^2"), 3), InvalidArgument);
  }
}

TEST_CASE("perp pieces agree with catalecticant kernels") {
  const Ring r = ring_of({"x", "y", "z"});
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned d = 1 + trial % 5;
    const Polynomial F = trial % 3 == 0 ? parse_poly("x^2*y*z^" + std::to_string(d), r)
                                        : random_form(r, d, 2, gen());
    const GradedIdeal perp = perp_graded(F);
    const unsigned deg = *F.degree();
    CHECK(perp.top_degree() == deg + 1);
    for (unsigned e = 0; e <= deg; ++e)
      CHECK(perp.piece(e) == kernel_basis(catalecticant_matrix(F, e)));
    CHECK(perp.piece(deg + 1).is_full());
    CHECK(perp.piece_dim(deg) == monomial_count(3, deg) - 1);
    CHECK(perp.satisfies_ideal_property());
  }
}

TEST_CASE("perp of monomials is generated by powers of the dual variables") {
  const Ring r = ring_of({"x0", "x1", "x2"});
  const Polynomial F = parse_poly("x0*x1^2*x2^3", r);
  const GradedIdeal perp = perp_graded(F);
  const std::vector<Monomial> gens = {Monomial({2, 0, 0}), Monomial({0, 3, 0}),
                                      Monomial({0, 0, 4})};
  CHECK(hilbert_function(perp).values == standard_monomial_counts(3, gens, 7));
  CHECK(quotient_total_dim(perp) == 2 * 3 * 4);
}

TEST_CASE("perp of simple forms") {
  SUBCASE("pure power: pieces below degree d+1 vanish") {
    const GradedIdeal perp = perp_graded(parse_poly("x^5"));
    for (unsigned e = 0; e <= 5; ++e) CHECK(perp.piece_dim(e) == 0);
    CHECK(perp.piece_dim(6) == 1);
  }
  SUBCASE("x^2 y") {
    const Ring r = ring_of({"x", "y"});
    const GradedIdeal perp = perp_graded(parse_poly("x^2*y", r));
    CHECK(perp.piece_dim(1) == 0);
    CHECK(perp.piece_dim(2) == 1);
    CHECK(perp.piece(2).contains(apolar::testing::vec({0, 0, 1})));  // t_y^2
    CHECK(perp.piece_dim(3) == 3);
  }
  SUBCASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(perp_graded(Polynomial(ring_of({"x"}))), InvalidArgument);
  }
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(perp_graded(parse_poly("x^3 + y^3"))).values ==
        std::vector<std::size_t>{1, 2, 2, 1, 0});
  CHECK(quotient_total_dim(perp_graded(parse_poly("x^3 + y^3"))) == 6);
  CHECK(hilbert_function(perp_graded(parse_poly("x0*x1"))).values ==
        std::vector<std::size_t>{1, 2, 1, 0});
  const GradedIdeal unit = GradedIdeal::unit(ring_of({"x", "y"}), 3);
  CHECK(hilbert_function(unit).values == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(quotient_total_dim(unit) == 0);
  CHECK(unit.is_unit());
  CHECK_THROWS_AS(quotient_total_dim(GradedIdeal::zero(ring_of({"x"}), 2)), NonArtinian);
}

TEST_CASE("Gorenstein symmetry of random perps") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Ring r = trial % 2 ? ring_of({"x", "y", "z"}) : ring_of({"x", "y"});
    const unsigned d = 1 + trial % 6;
    const auto h = hilbert_function(perp_graded(random_form(r, d, 4, gen()))).values;
    CHECK(h.front() == 1);
    CHECK(h[d] == 1);
    for (unsigned e = 0; e <= d; ++e) CHECK(h[e] == h[d - e]);
  }
}

TEST_CASE("colon by a linear form") {
  SUBCASE("square-free monomial, colon by t0") {
    const Ring r = ring_of({"x0", "x1", "x2"});
    const Polynomial F = parse_poly("x0*x1*x2", r);
    const GradedIdeal colon = colon_by_linear(F, dual_var(r, "x0"));
    const std::vector<Monomial> gens = {Monomial({1, 0, 0}), Monomial({0, 2, 0}),
                                        Monomial({0, 0, 2})};
    CHECK(hilbert_function(colon).values == standard_monomial_counts(3, gens, 4));
    for (unsigned e = 3; e <= 4; ++e) CHECK(colon.piece(e).is_full());
  }
  SUBCASE("colon by an element of the perp is the unit ideal") {
    const Ring r = ring_of({"x", "y"});
    const GradedIdeal colon = colon_by_linear(parse_poly("x^2", r), dual_var(r, "y"));
    CHECK(colon.is_unit());
    CHECK(colon.piece(0).is_full());
  }
  SUBCASE("binary form: dim T/(F^perp : t) = (d1 - 1) d2 for t dividing g1") {
    // F = x^2 y^3: perp = (t_x^3, t_y^4), g1 = t_x^3, t = t_x.
    const Ring r = ring_of({"x", "y"});
    const GradedIdeal colon = colon_by_linear(parse_poly("x^2*y^3", r), dual_var(r, "x"));
    CHECK(quotient_total_dim(colon) == (3 - 1) * 4);
    // F = x^4 + y^4: g1 = t_x t_y (d1 = 2), g2 = t_x^4 - t_y^4 (d2 = 4).
    const GradedIdeal colon2 =
        colon_by_linear(parse_poly("x^4 + y^4", r), dual_var(r, "y"));
    CHECK(quotient_total_dim(colon2) == (2 - 1) * 4);
  }
  SUBCASE("zero linear form") {
    CHECK_THROWS_AS(colon_by_linear(parse_poly("x^2"), LinearForm{{0}}), InvalidArgument);
  }
  SUBCASE("colon pieces are full from degree d on") {
    const Ring r = ring_of({"x", "y", "z"});
    const Polynomial F = random_form(r, 4, 3, 2);
    const GradedIdeal colon = colon_by_linear(F, LinearForm{{1, 2, -1}});
    CHECK(colon.piece_dim(4) == monomial_count(3, 4));
    CHECK(colon.satisfies_ideal_property());
  }
}

TEST_CASE("adding linear forms") {
  SUBCASE("zero ideal plus all variables leaves the constants") {
    const Ring r = ring_of({"x", "y", "z"});
    const std::vector<LinearForm> vars = {dual_var(r, "x"), dual_var(r, "y"),
                                          dual_var(r, "z")};
    const GradedIdeal I = add_linear_forms(GradedIdeal::zero(r, 3), vars);
    CHECK(hilbert_function(I).values == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(quotient_total_dim(I) == 1);
  }
  SUBCASE("monomial perp plus t0") {
    const Ring r = ring_of({"x0", "x1"});
    const GradedIdeal I =
        add_linear_form(perp_graded(parse_poly("x0*x1", r)), dual_var(r, "x0"));
    CHECK(hilbert_function(I).values == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK(quotient_total_dim(I) == 2);
    CHECK(I.satisfies_ideal_property());
  }
  SUBCASE("agrees with the primal sum on random inputs") {
    const Ring r = ring_of({"x", "y", "z"});
    std::mt19937_64 gen(23);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const GradedIdeal perp = perp_graded(random_form(r, 3, 3, gen()));
      const LinearForm l{{c(gen), c(gen), 1}};
      const GradedIdeal sum = add_linear_form(perp, l);
      for (unsigned e = 1; e <= 4; ++e) {
        // primal: I_e + l * T_{e-1}
        Subspace expected = perp.piece(e);
        const auto lower = monomial_basis(3, e - 1);
        const auto upper = monomial_basis(3, e);
        QMatrix multiples(0, upper->size());
        for (const Monomial& m : lower->monomials()) {
          const Polynomial lm = l.to_polynomial(r) * Polynomial::monomial(r, m);
          multiples.append_row(lm.coefficients(*upper));
        }
        expected = subspace_sum(expected, Subspace::span(multiples));
        CHECK(sum.piece(e) == expected);
      }
    }
  }
}

TEST_CASE("extension from a block to the ambient ring") {
  const Ring block = ring_of({"x"});
  const Ring ambient = ring_of({"x", "y"});
  const std::vector<std::size_t> vars = {0};
  SUBCASE("unit and zero ideals") {
    CHECK(extend_to_ambient(GradedIdeal::unit(block, 3), vars, ambient) ==
          GradedIdeal::unit(ambient, 3));
    CHECK(extend_to_ambient(GradedIdeal::zero(block, 3), vars, ambient) ==
          GradedIdeal::zero(ambient, 3));
  }
  SUBCASE("(t_x) extended to {x, y}") {
    const GradedIdeal tx = add_linear_form(GradedIdeal::zero(block, 3), LinearForm{{1}});
    const GradedIdeal ext = extend_to_ambient(tx, vars, ambient);
    CHECK(hilbert_function(ext).values == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(ext.satisfies_ideal_property());
  }
  SUBCASE("fused extension with complement variables matches the composition") {
    const Ring amb = ring_of({"a", "x", "b", "y"});
    const Ring blk = ring_of({"x", "y"});
    const std::vector<std::size_t> idx = {1, 3};
    const GradedIdeal I = colon_by_linear(parse_poly("x^2*y + y^3", blk), LinearForm{{1, 1}});
    const std::vector<LinearForm> others = {dual_var(amb, "a"), dual_var(amb, "b")};
    CHECK(extend_with_complement(I, idx, amb) ==
          add_linear_forms(extend_to_ambient(I, idx, amb), others));
  }
}

TEST_CASE("graded intersection") {
  const Ring r = ring_of({"x", "y", "z"});
  const GradedIdeal I = perp_graded(parse_poly("x*y*z + y^3", r));
  const GradedIdeal unit = GradedIdeal::unit(r, I.top_degree());
  const GradedIdeal both[] = {I, unit};
  CHECK(graded_intersect(both) == I);
  const GradedIdeal same[] = {I, I};
  CHECK(graded_intersect(same) == I);
  const GradedIdeal mismatched[] = {I, GradedIdeal::unit(r, 2)};
  CHECK_THROWS_AS(graded_intersect(mismatched), DimensionMismatch);

  // agrees with primal subspace intersection
  const GradedIdeal J = add_linear_form(perp_graded(parse_poly("x^2*z", r)), LinearForm{{1, 1, 0}});
  const GradedIdeal IJ[] = {I, J};
  const GradedIdeal meet = graded_intersect(IJ);
  for (unsigned e = 0; e <= 4; ++e)
    CHECK(meet.piece(e) == subspace_intersect(I.piece(e), J.piece(e)));
  CHECK(graded_contains(I, meet));
  CHECK(graded_contains(J, meet));
  CHECK(graded_contains(graded_sum(I, J), I));
}

TEST_CASE("size guardrail") {
  const std::size_t saved = max_monomials();
  set_max_monomials(10);
  CHECK_THROWS_AS(perp_graded(parse_poly("x*y*z*w")), SizeLimitExceeded);
  set_max_monomials(saved);
  CHECK_NOTHROW(perp_graded(parse_poly("x*y*z*w")));
}
