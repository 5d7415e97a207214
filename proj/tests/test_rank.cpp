#include <algorithm>
#include <array>
#include <random>

#include "apolar/blocks.hpp"
#include "apolar/errors.hpp"
#include "apolar/rank.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apolar;
using apolar::testing::dual_var;
using apolar::testing::ring_of;
using apolar::testing::vec;

namespace {

std::vector<unsigned> exps(std::initializer_list<unsigned> e) { return e; }

LinearForm lin(std::initializer_list<long> c) {
  LinearForm l;
  for (long x : c) l.coefficients.emplace_back(x);
  return l;
}

// sum_i c_i (a_i x + b_i y)^d over the ring (x, y).
Polynomial power_sum(const Ring& r, unsigned d,
                     const std::vector<std::array<long, 3>>& terms) {
  Polynomial f(r);
  for (const auto& [c, a, b] : terms) {
    Polynomial l(r);
    l.add_term(Monomial({1, 0}), Rational(a));
    l.add_term(Monomial({0, 1}), Rational(b));
    Polynomial p = Polynomial::constant(r, Rational(c));
    for (unsigned k = 0; k < d; ++k) p = p * l;
    f += p;
  }
  return f;
}

}  // namespace

TEST_CASE("monomial rank formula") {
  CHECK(monomial_rank(exps({1, 2, 2})) == 9);
  CHECK(monomial_rank(exps({5})) == 1);
  CHECK(monomial_rank(exps({2, 1})) == 3);
  CHECK(monomial_rank(exps({1, 1})) == 2);
  CHECK(monomial_rank(exps({3, 3, 3})) == 16);
  CHECK_THROWS_AS(monomial_rank(exps({})), InvalidArgument);
  CHECK_THROWS_AS(monomial_rank(exps({0, 2})), InvalidArgument);
}

TEST_CASE("monomial computing form takes the lowest minimal exponent") {
  CHECK(monomial_computing_form(exps({1, 2, 2})) == 0);
  CHECK(monomial_computing_form(exps({2, 1})) == 1);
  CHECK(monomial_computing_form(exps({3, 2, 2})) == 1);
}

TEST_CASE("monomial cactus rank formula") {
  CHECK(monomial_crank(exps({1, 1, 2})) == 4);
  CHECK(monomial_crank(exps({1, 2})) == 2);
  CHECK(monomial_crank(exps({4})) == 1);
  CHECK(monomial_crank(exps({1, 1, 1, 3})) == 8);
  CHECK_THROWS_AS(monomial_crank(exps({1, 2, 2})), AssumptionNotSatisfied);
  CHECK_THROWS_AS(monomial_crank(exps({2, 1})), AssumptionNotSatisfied);
}

TEST_CASE("rank lower bound") {
  SUBCASE("monomial with its minimal-exponent witness") {
    const Polynomial F = parse_poly("x0*x1^2*x2^2");
    CHECK(rank_lower_bound(F, dual_var(F.ring(), "x0")) == 9);
    // Any other variable gives a smaller bound.
    CHECK(rank_lower_bound(F, dual_var(F.ring(), "x1")) < 9);
  }
  SUBCASE("the summed block witnesses do not certify x*y + z*w") {
    const Polynomial F = parse_poly("x*y + z*w");
    CHECK(rank_lower_bound(F, lin({0, 1, 0, 1})) == 2);  // order w, x, y, z
    CHECK(F.ring().names() == std::vector<std::string>{"w", "x", "y", "z"});
  }
  SUBCASE("a witness in the perp gives 0") {
    const Ring r = ring_of({"x", "y"});
    CHECK(rank_lower_bound(parse_poly("x^3", r), dual_var(r, "y")) == 0);
    CHECK(rank_lower_bound(parse_poly("x^2 + 2*x*y + y^2", r), lin({1, -1})) == 0);
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(rank_lower_bound(parse_poly("x*y"), lin({1})), DimensionMismatch);
  }
}

TEST_CASE("binary coefficients and square-freeness") {
  const Ring r = ring_of({"a", "b"});
  CHECK(binary_coefficients(parse_poly("a^3 - 2*a*b^2 + 5*b^3", r)) == vec({1, 0, -2, 5}));
  CHECK(squarefree_test(parse_poly("a*b", r)));
  CHECK(squarefree_test(parse_poly("a^2 + b^2", r)));
  CHECK_FALSE(squarefree_test(parse_poly("a^2*b", r)));
  CHECK_FALSE(squarefree_test(parse_poly("a*b^2", r)));
  CHECK_FALSE(squarefree_test(parse_poly("a^2 - 2*a*b + b^2", r)));
  CHECK(squarefree_test(parse_poly("a + b", r)));
  CHECK_THROWS_AS(squarefree_test(vec({0, 0})), InvalidArgument);

  // Square-free exactly when the discriminant is nonzero.
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> g(2 + trial % 5);
    for (auto& x : g) x = c(gen);
    if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
    if (sgn(g.front()) == 0) continue;  // keep the full degree for the resultant
    CHECK(squarefree_test(g) == (sgn(binary_discriminant(g)) != 0));
  }
}

TEST_CASE("rational linear factors") {
  // (a - 2b)^2 (3a + b) b
  const Ring r = ring_of({"a", "b"});
  const Polynomial f = parse_poly("a^2 - 4*a*b + 4*b^2", r) * parse_poly("3*a*b + b^2", r);
  const auto coeffs = binary_coefficients(f);
  const auto factors = rational_linear_factors(coeffs);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0].form == lin({0, 1}));
  CHECK(factors[0].multiplicity == 1);
  CHECK(factors[1].form.coefficients == std::vector<Rational>{1, Rational(1, 3)});
  CHECK(factors[1].multiplicity == 1);
  CHECK(factors[2].form == lin({1, -2}));
  CHECK(factors[2].multiplicity == 2);
  CHECK(rational_linear_factors(vec({1, 0, 1})).empty());
}

TEST_CASE("binary profile") {
  const Ring r = ring_of({"x", "y"});
  SUBCASE("x^4 + y^4") {
    const auto p = binary_profile(parse_poly("x^4 + y^4", r));
    CHECK(p.d1 == 2);
    CHECK(p.d2 == 4);
    CHECK(p.squarefree_at_d1);
    CHECK(p.rank == 2);
    CHECK(p.crank == 2);
  }
  SUBCASE("x^2 y^3: g1 = t_x^3 is not square-free") {
    const auto p = binary_profile(parse_poly("x^2*y^3", r));
    CHECK(p.d1 == 3);
    CHECK(p.d2 == 4);
    CHECK_FALSE(p.squarefree_at_d1);
    CHECK(p.rank == 4);
    CHECK(p.crank == 3);
  }
  SUBCASE("binary monomials agree with the monomial formula") {
    for (unsigned a = 1; a <= 6; ++a)
      for (unsigned b = 1; a + b <= 8; ++b) {
        Polynomial f = Polynomial::monomial(r, Monomial({a, b}));
        const unsigned e[] = {a, b};
        const auto p = binary_profile(f);
        CHECK(p.d1 + p.d2 == a + b + 2);
        CHECK(p.rank == monomial_rank(e));
      }
  }
  SUBCASE("sums of few general powers have rank equal to the number of terms") {
    CHECK(binary_profile(power_sum(r, 5, {{1, 1, 1}, {2, 1, -1}})).rank == 2);
    CHECK(binary_profile(power_sum(r, 6, {{1, 1, 2}, {1, 2, 1}, {3, 1, -3}})).rank == 3);
    CHECK(binary_profile(power_sum(r, 3, {{1, 1, 0}})).rank == 1);
  }
  SUBCASE("the profile requires a binary form") {
    CHECK_THROWS_AS(binary_profile(parse_poly("x*y*z")), InvalidArgument);
  }
}

TEST_CASE("binary computing forms") {
  const Ring r = ring_of({"x", "y"});
  auto attains = [&](const Polynomial& f) {
    const LinearForm t = binary_computing_form(f);
    return rank_lower_bound(f, t) == binary_profile(f).rank;
  };
  SUBCASE("g1 square-free of lower degree") {
    CHECK(attains(parse_poly("x^4 + y^4", r)));
    CHECK(attains(parse_poly("x^3 + y^3", r)));
    CHECK(attains(power_sum(r, 6, {{1, 1, 2}, {1, 2, 1}})));
  }
  SUBCASE("g1 with a repeated factor") {
    CHECK(attains(parse_poly("x^2*y^3", r)));
    CHECK(attains(parse_poly("x*y^4", r)));
  }
  SUBCASE("pencil with a rational member having a double factor") {
    CHECK(binary_profile(parse_poly("x^2*y^2", r)).d1 == 3);
    CHECK(attains(parse_poly("x^2*y^2", r)));
  }
  SUBCASE("pencil whose double-root members are irrational") {
    const Polynomial f = parse_poly("2*x^4 + x^2*y^2 + x*y^3 - y^4", r);
    CHECK(binary_profile(f).rank == 3);
    CHECK_THROWS_AS(binary_computing_form(f), AlgebraicExtensionRequired);
    // Brute force over small integer forms never reaches the rank.
    for (long p = -6; p <= 6; ++p)
      for (long q = -6; q <= 6; ++q)
        if (p || q) CHECK(rank_lower_bound(f, lin({p, q})) < 3);
  }
}

TEST_CASE("classification and closed forms") {
  CHECK(classify(parse_poly("x0*x1^2")) == FormClass::monomial);
  CHECK(classify(parse_poly("x^3 + y^3")) == FormClass::binary);
  CHECK(classify(parse_poly("x^3 + y^3 + z^3")) == FormClass::other);
  CHECK_THROWS_AS(classify(parse_poly("x^2 + y")), InvalidArgument);

  const FormRank m = waring_rank(parse_poly("x0*x1^2*x2^2"));
  CHECK(m.value == 9u);
  REQUIRE(m.witness);
  CHECK(*m.witness == lin({1, 0, 0}));

  const FormRank b = waring_rank(parse_poly("x^2*y + z^3 - z^3"));  // single term
  CHECK(b.form_class == FormClass::monomial);
  CHECK(b.value == 3u);
  CHECK(*b.witness == lin({0, 1, 0}));

  const FormRank binary = waring_rank(parse_poly("x^4 + y^4 + 0*z^4"));
  CHECK(binary.form_class == FormClass::binary);
  CHECK(binary.value == 2u);
  CHECK(binary.witness->coefficients[2] == 0);

  CHECK_FALSE(waring_rank(parse_poly("x^3 + y^3 + z^3")).value);

  CHECK(cactus_rank(parse_poly("x*y^2")).value == 2u);
  CHECK(cactus_rank(parse_poly("x^4")).value == 1u);
  CHECK(cactus_rank(parse_poly("x0*x1*x2^2")).value == 4u);
  CHECK(cactus_rank(parse_poly("x2*x1*x0^2")).value == 4u);  // exponent order irrelevant
  const FormRank outside = cactus_rank(parse_poly("x0^2*x1^2*x2"));
  CHECK_FALSE(outside.value);
  CHECK_FALSE(outside.note.empty());
}

TEST_CASE("cactus lower bound by sampling") {
  SUBCASE("closed forms") {
    CHECK(crank_lower_bound(parse_poly("x*y^2"), 3, 1).value == 2);
    CHECK(crank_lower_bound(parse_poly("x^4"), 3, 1).value == 1);
    CHECK(crank_lower_bound(parse_poly("x0*x1*x2^2"), 3, 1).value == 4);
    CHECK(crank_lower_bound(parse_poly("x^5 + y^5"), 3, 1).value == 2);
  }
  SUBCASE("deterministic in the seed") {
    const Polynomial F = parse_poly("x^3 + x*y*z + z^3");
    const CrankBound a = crank_lower_bound(F, 4, 17);
    const CrankBound b = crank_lower_bound(F, 4, 17);
    CHECK(a.forms == b.forms);
    CHECK(a.values == b.values);
    CHECK(a.forms.size() == 4);
    for (const auto& l : a.forms)
      for (const auto& c : l.coefficients) CHECK(abs(c) <= 10);
    CHECK(crank_lower_bound(F, 4, 18).forms != a.forms);
  }
  SUBCASE("special forms can only give larger values") {
    const Polynomial F = parse_poly("x*y^2");
    CHECK(crank_of_sample(F, lin({1, 0})) >= 2);
  }
  SUBCASE("at least one sample") {
    CHECK_THROWS_AS(crank_lower_bound(parse_poly("x^2"), 0, 1), InvalidArgument);
  }
}

TEST_CASE("additive Waring rank") {
  SUBCASE("x*y + z*w") {
    const auto cert = additive_rank(parse_blocks("x,y: x*y ; z,w: z*w"));
    CHECK(cert.verdict == Verdict::certified_equal);
    CHECK(cert.value == 4);
    CHECK(cert.lower_bound == 4);
    CHECK(cert.upper_bound == 4);
    CHECK(cert.sum_witness_bound == 2u);
    REQUIRE(cert.witnesses.size() == 2);
    CHECK(cert.witnesses[0] == lin({1, 0, 0, 0}));
    CHECK(cert.witnesses[1] == lin({0, 0, 1, 0}));
  }
  SUBCASE("monomial plus binary block") {
    const auto cert =
        additive_rank(parse_blocks("x0,x1,x2: x0*x1^2*x2^2 ; y0,y1: y0^5 + y1^5"));
    CHECK(cert.verdict == Verdict::certified_equal);
    CHECK(cert.value == 11);
    CHECK(cert.block_values == std::vector<std::size_t>{9, 2});
  }
  SUBCASE("three blocks") {
    const auto cert = additive_rank(parse_blocks("a: a^3 ; b,c: b^2*c ; d,e: d^3 + e^3"));
    CHECK(cert.verdict == Verdict::certified_equal);
    CHECK(cert.value == 1 + 3 + 2);
  }
  SUBCASE("one block is the rank of that block") {
    const auto cert = additive_rank(parse_blocks("x,y: x^2*y^3"));
    CHECK(cert.value == 4);
    CHECK(cert.verdict == Verdict::certified_equal);
  }
  SUBCASE("invalid decompositions") {
    CHECK_THROWS_AS(additive_rank(parse_blocks("x,y: x*y ; y,z: y*z")), InvalidArgument);
    CHECK_THROWS_AS(additive_rank(parse_blocks("x,y,z: x*y*z + x^3 ; w: w^3")),
                    InvalidArgument);
  }
  SUBCASE("a block without a rational witness") {
    CHECK_THROWS_AS(
        additive_rank(parse_blocks("x,y: 2*x^4 + x^2*y^2 + x*y^3 - y^4 ; z: z^4")),
        AlgebraicExtensionRequired);
  }
}

TEST_CASE("additive cactus rank") {
  SUBCASE("monomial and binary blocks") {
    const auto cert =
        additive_crank(parse_blocks("x0,x1,x2: x0*x1*x2^2 ; y,z: y^4 + z^4"), 3, 1);
    CHECK(cert.verdict == Verdict::certified_equal);
    CHECK(cert.value == 6);
    CHECK(cert.partial_sums == std::vector<std::size_t>{4, 6});
    CHECK(cert.samples_agreed);
  }
  SUBCASE("x y^2 + z w^2") {
    const auto cert = additive_crank(parse_blocks("x,y: x*y^2 ; z,w: z*w^2"), 3, 5);
    CHECK(cert.value == 4);
    CHECK(cert.verdict == Verdict::certified_equal);
  }
  SUBCASE("a monomial block outside the hypothesis") {
    CHECK_THROWS_AS(additive_crank(parse_blocks("a,b,c: a^2*b^2*c ; d: d^5"), 3, 1),
                    AssumptionNotSatisfied);
  }
}

TEST_CASE("block ideals") {
  const BlockDecomposition bd = parse_blocks("x,y: x*y ; z,w: z*w");
  const GradedIdeal j1 = waring_block_ideal(bd, 0, lin({1, 0}));
  CHECK(j1.top_degree() == 3);
  CHECK(quotient_total_dim(j1) == 2);
  const GradedIdeal c1 = cactus_block_ideal(bd, 0, lin({1, 1}));
  CHECK(quotient_total_dim(c1) == 2);
}
