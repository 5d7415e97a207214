#include "apolar/rank.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/random.hpp"

namespace apolar {

// ------------------------------------------------------------- monomials

namespace {

void require_positive_exponents(std::span<const unsigned> exponents) {
  if (exponents.empty()) throw InvalidArgument("monomial of degree 0");
  for (unsigned a : exponents)
    if (a == 0) throw InvalidArgument("exponents must be positive");
}

std::size_t checked_product(std::size_t acc, unsigned a) {
  const std::size_t f = a + 1;
  if (acc > std::numeric_limits<std::size_t>::max() / f)
    throw SizeLimitExceeded("rank does not fit in 64 bits");
  return acc * f;
}

}  // namespace

std::size_t monomial_computing_form(std::span<const unsigned> exponents) {
  require_positive_exponents(exponents);
  return static_cast<std::size_t>(
      std::min_element(exponents.begin(), exponents.end()) - exponents.begin());
}

std::size_t monomial_rank(std::span<const unsigned> exponents) {
  const std::size_t skip = monomial_computing_form(exponents);
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (i != skip) r = checked_product(r, exponents[i]);
  return r;
}

std::size_t monomial_crank(std::span<const unsigned> exponents) {
  require_positive_exponents(exponents);
  if (!std::is_sorted(exponents.begin(), exponents.end()))
    throw AssumptionNotSatisfied("exponents must be listed in ascending order");
  unsigned long long head = 0;
  for (std::size_t i = 0; i + 1 < exponents.size(); ++i) head += exponents[i];
  if (head > exponents.back()) {
    std::ostringstream msg;
    msg << "the smaller exponents sum to " << head << ", more than the largest ("
        << exponents.back() << ")";
    throw AssumptionNotSatisfied(msg.str());
  }
  std::size_t r = 1;
  for (std::size_t i = 0; i + 1 < exponents.size(); ++i) r = checked_product(r, exponents[i]);
  return r;
}

// ---------------------------------------------------------- binary forms

namespace {

void require_binary(const Polynomial& g) {
  if (g.ring().size() != 2) throw InvalidArgument("binary form expected (2 variables)");
  if (g.is_zero()) throw InvalidArgument("zero polynomial");
  if (!g.degree()) throw InvalidArgument("form must be homogeneous");
}

std::size_t leading_zero_count(std::span<const Rational> c) {
  std::size_t j = 0;
  while (j < c.size() && sgn(c[j]) == 0) ++j;
  return j;
}

// g(u, 1) for g = sum c_j a^(n-j) b^j; coefficient of u^k is c_{n-k}.
UPoly dehomogenize(std::span<const Rational> c) {
  std::vector<Rational> p(c.size());
  const std::size_t n = c.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) p[k] = c[n - k];
  return UPoly(std::move(p));
}

bool all_zero(std::span<const Rational> c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace

std::vector<Rational> binary_coefficients(const Polynomial& g) {
  require_binary(g);
  const unsigned n = *g.degree();
  std::vector<Rational> c(n + 1);
  for (const auto& [m, coeff] : g.terms()) c[m[1]] = coeff;
  return c;
}

bool squarefree_test(const Polynomial& g) {
  const auto c = binary_coefficients(g);
  return squarefree_test(std::span<const Rational>(c));
}

bool squarefree_test(std::span<const Rational> c) {
  if (c.empty() || all_zero(c)) throw InvalidArgument("zero binary form");
  const std::size_t n = c.size() - 1;
  if (n <= 1) return true;
  if (leading_zero_count(c) >= 2) return false;
  const UPoly p = dehomogenize(c);
  return gcd(p, p.derivative()).degree() <= 0;
}

std::vector<LinearFactor> rational_linear_factors(std::span<const Rational> c) {
  if (c.empty() || all_zero(c)) throw InvalidArgument("zero binary form");
  std::vector<LinearFactor> out;
  const std::size_t mult_b = leading_zero_count(c);
  if (mult_b > 0)
    out.push_back({LinearForm{{Rational(0), Rational(1)}}, static_cast<unsigned>(mult_b)});
  UPoly p = dehomogenize(c);
  if (p.degree() <= 0) return out;
  for (const Rational& r : rational_roots(p)) {
    const UPoly factor({-r, Rational(1)});
    unsigned mult = 0;
    UPoly q = p;
    while (true) {
      DivMod dm = divmod(q, factor);
      if (!dm.remainder.is_zero()) break;
      q = std::move(dm.quotient);
      ++mult;
    }
    out.push_back({LinearForm{{Rational(1), -r}}, mult});
  }
  return out;
}

Rational binary_discriminant(std::span<const Rational> c) {
  if (c.empty()) throw InvalidArgument("empty binary form");
  const std::size_t n = c.size() - 1;
  if (n <= 1) return 1;
  const std::size_t m = n - 1;  // degree of both partial derivatives
  std::vector<Rational> da(m + 1), db(m + 1);
  for (std::size_t j = 0; j < n; ++j) da[j] = c[j] * static_cast<long>(n - j);
  for (std::size_t j = 1; j <= n; ++j) db[j - 1] = c[j] * static_cast<long>(j);
  QMatrix s(2 * m, 2 * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= m; ++j) {
      s(r, r + j) = da[j];
      s(m + r, r + j) = db[j];
    }
  return determinant(std::move(s));
}

BinaryPerpProfile binary_profile(const Polynomial& F) {
  require_binary(F);
  BinaryPerpProfile p;
  p.degree = *F.degree();
  const GradedIdeal perp = perp_graded(F);
  unsigned d1 = 1;
  while (perp.piece_dim(d1) == 0) ++d1;
  p.d1 = d1;
  p.d2 = p.degree + 2 - d1;
  p.g1_candidates = perp.piece(d1);
  const std::size_t expected = d1 < p.d2 ? 1 : 2;
  if (p.g1_candidates.dim() != expected)
    throw std::logic_error("unexpected dimension of the first generator space");

  const QMatrix& b = p.g1_candidates.basis();
  if (d1 < p.d2) {
    p.squarefree_at_d1 = squarefree_test(b.row(0));
  } else {
    // A base-point-free pencil has a squarefree member among any 2(d1-1)+1
    // members g1 + s g2.
    for (unsigned s = 0; s <= 2 * (d1 - 1) && !p.squarefree_at_d1; ++s) {
      std::vector<Rational> member(b.cols());
      for (std::size_t j = 0; j < b.cols(); ++j) member[j] = b(0, j) + Rational(s) * b(1, j);
      if (!all_zero(member) && squarefree_test(member)) p.squarefree_at_d1 = true;
    }
  }
  p.rank = p.squarefree_at_d1 ? p.d1 : p.d2;
  p.crank = p.d1;
  return p;
}

namespace {

std::vector<LinearForm> small_binary_forms(std::size_t count) {
  std::vector<LinearForm> out;
  out.push_back({{Rational(1), Rational(0)}});
  out.push_back({{Rational(0), Rational(1)}});
  for (long h = 1; out.size() < count; ++h) {
    for (long q = -h; q <= h && out.size() < count; ++q) {
      if (q == 0) continue;
      // Forms t_a + q t_b and q t_a + t_b up to height h, skipping repeats.
      if (std::abs(q) == h) {
        out.push_back({{Rational(1), Rational(q)}});
        if (h > 1 && out.size() < count) out.push_back({{Rational(q), Rational(1)}});
      }
    }
  }
  return out;
}

}  // namespace

LinearForm binary_computing_form(const Polynomial& F) {
  const BinaryPerpProfile p = binary_profile(F);
  const std::size_t target = p.rank;
  const QMatrix& b = p.g1_candidates.basis();
  std::vector<LinearForm> candidates;

  if (p.d1 < p.d2 && p.squarefree_at_d1) {
    // Any t not vanishing at a root of g1 works; g1 has at most d1 roots.
    candidates = small_binary_forms(2 * (p.d1 + 2));
  } else {
    std::vector<std::vector<Rational>> members;
    auto row = [&](std::size_t r) { return std::vector<Rational>(b.row(r).begin(), b.row(r).end()); };
    if (p.d1 < p.d2) {
      members.push_back(row(0));
    } else {
      // Members g1 + s g2 with a repeated factor are the roots of the
      // discriminant D(s), a polynomial of degree at most 2(d1 - 1).
      const unsigned n = p.d1;
      std::vector<Rational> xs, ys;
      for (unsigned s = 0; s <= 2 * (n - 1); ++s) {
        std::vector<Rational> member(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) member[j] = b(0, j) + Rational(s) * b(1, j);
        xs.emplace_back(s);
        ys.push_back(binary_discriminant(member));
      }
      const UPoly disc = interpolate(xs, ys);
      if (disc.is_zero()) {
        members.push_back(row(0));
      } else {
        for (const Rational& s : rational_roots(disc)) {
          std::vector<Rational> member(b.cols());
          for (std::size_t j = 0; j < b.cols(); ++j) member[j] = b(0, j) + s * b(1, j);
          members.push_back(std::move(member));
        }
      }
      members.push_back(row(1));
    }
    for (const auto& member : members) {
      if (all_zero(member)) continue;
      for (const auto& f : rational_linear_factors(member))
        if (f.multiplicity >= 2) candidates.push_back(f.form);
    }
  }

  for (const auto& t : candidates)
    if (rank_lower_bound(F, t) == target) return t;
  throw AlgebraicExtensionRequired(
      "no computing linear form with rational coefficients was found for " + F.to_string());
}

// ---------------------------------------------------------------- bounds

std::size_t rank_lower_bound(const Polynomial& F, const LinearForm& t) {
  if (t.size() != F.ring().size()) throw DimensionMismatch("linear form arity");
  return quotient_total_dim(add_linear_form(colon_by_linear(F, t), t));
}

std::size_t crank_of_sample(const Polynomial& F, const LinearForm& l) {
  if (l.size() != F.ring().size()) throw DimensionMismatch("linear form arity");
  return quotient_total_dim(add_linear_form(perp_graded(F), l));
}

namespace {

LinearForm random_linear_form(Rng& rng, std::size_t n) {
  while (true) {
    LinearForm l;
    for (std::size_t i = 0; i < n; ++i) l.coefficients.emplace_back(rng.uniform(-10, 10));
    if (!l.is_zero()) return l;
  }
}

}  // namespace

CrankBound crank_lower_bound(const Polynomial& F, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("at least one sample is required");
  const GradedIdeal perp = perp_graded(F);
  Rng rng(seed);
  CrankBound out;
  for (std::size_t s = 0; s < samples; ++s) {
    LinearForm l = random_linear_form(rng, F.ring().size());
    out.values.push_back(quotient_total_dim(add_linear_form(perp, l)));
    out.forms.push_back(std::move(l));
  }
  out.value = *std::min_element(out.values.begin(), out.values.end());
  out.samples_agreed = std::all_of(out.values.begin(), out.values.end(),
                                   [&](std::size_t v) { return v == out.value; });
  return out;
}

// ----------------------------------------------------- single forms

std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::monomial: return "monomial";
    case FormClass::binary: return "binary";
    case FormClass::other: return "other";
  }
  return "other";
}

FormClass classify(const Polynomial& F) {
  if (F.is_zero()) throw InvalidArgument("zero polynomial");
  if (!F.degree()) throw InvalidArgument("form must be homogeneous");
  if (F.terms().size() == 1) return FormClass::monomial;
  if (F.support().size() <= 2) return FormClass::binary;
  return FormClass::other;
}

namespace {

std::vector<unsigned> support_exponents(const Polynomial& F, const std::vector<std::size_t>& support) {
  const Monomial& m = F.terms().begin()->first;
  std::vector<unsigned> e;
  for (std::size_t i : support) e.push_back(m[i]);
  return e;
}

Ring sub_ring(const Ring& ring, const std::vector<std::size_t>& vars) {
  std::vector<std::string> names;
  for (std::size_t i : vars) names.push_back(ring.names()[i]);
  return Ring(names);
}

}  // namespace

FormRank waring_rank(const Polynomial& F) {
  FormRank out;
  out.form_class = classify(F);
  const auto support = F.support();
  switch (out.form_class) {
    case FormClass::monomial: {
      if (support.empty()) {
        out.value = 1;
        out.note = "nonzero constant";
        return out;
      }
      const auto e = support_exponents(F, support);
      out.value = monomial_rank(e);
      out.witness = LinearForm::variable(F.ring().size(), support[monomial_computing_form(e)]);
      return out;
    }
    case FormClass::binary: {
      const Ring br = sub_ring(F.ring(), support);
      const Polynomial g = restrict_to(F, support, br);
      out.value = binary_profile(g).rank;
      try {
        out.witness = embed_into(binary_computing_form(g), support, F.ring().size());
      } catch (const AlgebraicExtensionRequired& e) {
        out.note = e.what();
      }
      return out;
    }
    case FormClass::other:
      out.note = "no closed form; only lower bounds are available";
      return out;
  }
  return out;
}

FormRank cactus_rank(const Polynomial& F) {
  FormRank out;
  out.form_class = classify(F);
  const auto support = F.support();
  switch (out.form_class) {
    case FormClass::monomial: {
      if (support.empty()) {
        out.value = 1;
        out.note = "nonzero constant";
        return out;
      }
      auto e = support_exponents(F, support);
      std::sort(e.begin(), e.end());
      try {
        out.value = monomial_crank(e);
      } catch (const AssumptionNotSatisfied& err) {
        out.note = err.what();
      }
      return out;
    }
    case FormClass::binary: {
      const Ring br = sub_ring(F.ring(), support);
      out.value = binary_profile(restrict_to(F, support, br)).crank;
      return out;
    }
    case FormClass::other:
      out.note = "no closed form; only lower bounds are available";
      return out;
  }
  return out;
}

// ------------------------------------------------------------- additivity

std::string to_string(RankKind k) { return k == RankKind::waring ? "waring" : "cactus"; }

std::string to_string(Verdict v) {
  return v == Verdict::certified_equal ? "certified_equal" : "bound_only";
}

namespace {

void require_valid_blocks(const BlockDecomposition& bd) {
  const auto problems = block_violations(bd);
  if (problems.empty()) return;
  std::string msg = "invalid block decomposition:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw InvalidArgument(msg);
}

// The block form with its own variables, restricted to the support when the
// block is binary so closed forms apply.
struct BlockView {
  FormClass form_class;
  Polynomial form;  // over the block ring
};

BlockView view_block(const BlockDecomposition& bd, std::size_t i) {
  Polynomial f = bd.block_form(i);
  const FormClass c = classify(f);
  if (c == FormClass::other)
    throw InvalidArgument("block " + std::to_string(i + 1) +
                          " is neither a monomial nor a binary form");
  return {c, std::move(f)};
}

}  // namespace

GradedIdeal waring_block_ideal(const BlockDecomposition& bd, std::size_t i,
                               const LinearForm& block_witness) {
  const Polynomial f = bd.block_form(i);
  const GradedIdeal local = add_linear_form(colon_by_linear(f, block_witness), block_witness);
  return extend_with_complement(local, bd.blocks.at(i), bd.ambient);
}

GradedIdeal cactus_block_ideal(const BlockDecomposition& bd, std::size_t i,
                               const LinearForm& block_form) {
  const Polynomial f = bd.block_form(i);
  const GradedIdeal local = add_linear_form(perp_graded(f), block_form);
  return extend_with_complement(local, bd.blocks.at(i), bd.ambient);
}

RankCertificate additive_rank(const BlockDecomposition& bd) {
  require_valid_blocks(bd);
  RankCertificate cert;
  cert.kind = RankKind::waring;
  cert.lower_bound_method = "intersection of block ideals J_i plus (m - 1)";

  std::vector<GradedIdeal> js;
  bool witnesses_valid = true;
  LinearForm sum(std::vector<Rational>(bd.ambient.size()));
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const BlockView v = view_block(bd, i);
    const FormRank fr = waring_rank(v.form);
    cert.block_classes.push_back(v.form_class);
    cert.block_values.push_back(*fr.value);
    cert.upper_bound += *fr.value;
    if (!fr.witness)
      throw AlgebraicExtensionRequired("block " + std::to_string(i + 1) + ": " + fr.note);
    const LinearForm& t = *fr.witness;
    if (rank_lower_bound(v.form, t) != *fr.value || apply_operator(t, v.form).is_zero()) {
      witnesses_valid = false;
      cert.notes.push_back("witness of block " + std::to_string(i + 1) +
                           " does not compute its rank");
    }
    const LinearForm embedded = embed_into(t, bd.blocks[i], bd.ambient.size());
    cert.witnesses.push_back(embedded);
    sum = sum + embedded;
    js.push_back(waring_block_ideal(bd, i, t));
  }

  if (witnesses_valid) {
    cert.lower_bound = quotient_total_dim(graded_intersect(js)) + (bd.size() - 1);
  } else {
    cert.lower_bound = 0;
  }
  cert.sum_witness_bound = rank_lower_bound(bd.total(), sum);
  if (cert.lower_bound >= cert.upper_bound && witnesses_valid) {
    cert.verdict = Verdict::certified_equal;
    cert.value = cert.upper_bound;
  } else {
    cert.verdict = Verdict::bound_only;
    cert.value = cert.lower_bound;
  }
  return cert;
}

RankCertificate additive_crank(const BlockDecomposition& bd, std::size_t samples,
                               std::uint64_t seed) {
  require_valid_blocks(bd);
  RankCertificate cert;
  cert.kind = RankKind::cactus;
  cert.lower_bound_method = "minimum of dim T/(F^perp + (l)) over sampled l";

  for (std::size_t i = 0; i < bd.size(); ++i) {
    const BlockView v = view_block(bd, i);
    cert.block_classes.push_back(v.form_class);
    std::size_t value;
    if (v.form_class == FormClass::monomial) {
      const auto support = v.form.support();
      auto e = support_exponents(v.form, support);
      std::sort(e.begin(), e.end());
      try {
        value = monomial_crank(e);
      } catch (const AssumptionNotSatisfied& err) {
        throw AssumptionNotSatisfied("block " + std::to_string(i + 1) + ": " + err.what());
      }
    } else {
      value = *cactus_rank(v.form).value;
    }
    cert.block_values.push_back(value);
    cert.upper_bound += value;
  }

  Polynomial partial(bd.ambient);
  for (std::size_t k = 0; k < bd.size(); ++k) {
    partial += bd.forms[k];
    const CrankBound b = crank_lower_bound(partial, samples, seed);
    cert.partial_sums.push_back(b.value);
    if (k + 1 == bd.size()) {
      cert.lower_bound = b.value;
      cert.witnesses = b.forms;
      cert.samples_agreed = b.samples_agreed;
    }
  }
  if (!cert.samples_agreed) cert.notes.push_back("sampled forms gave different values");
  if (cert.lower_bound >= cert.upper_bound) {
    cert.verdict = Verdict::certified_equal;
    cert.value = cert.upper_bound;
  } else {
    cert.verdict = Verdict::bound_only;
    cert.value = cert.lower_bound;
  }
  return cert;
}

}  // namespace apolar
