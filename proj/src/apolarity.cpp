#include "apolar/apolarity.hpp"

#include <map>
#include <mutex>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

Integer factorial_of(const Monomial& m) {
  Integer f = 1;
  for (unsigned e : m.exponents)
    for (unsigned k = 2; k <= e; ++k) f *= k;
  return f;
}

// raise[j * n + k] is the index in degree e + 1 of (j-th monomial of degree e) * x_k.
std::shared_ptr<const std::vector<std::size_t>> raise_table(std::size_t n, unsigned e) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>,
                  std::shared_ptr<const std::vector<std::size_t>>>
      cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, e});
    if (it != cache.end()) return it->second;
  }
  const auto lower = monomial_basis(n, e);
  const auto upper = monomial_basis(n, e + 1);
  auto table = std::make_shared<std::vector<std::size_t>>(lower->size() * n);
  for (std::size_t j = 0; j < lower->size(); ++j) {
    Monomial m = (*lower)[j];
    for (std::size_t k = 0; k < n; ++k) {
      ++m.exponents[k];
      (*table)[j * n + k] = *upper->index_of(m);
      --m.exponents[k];
    }
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, e}];
  if (!slot) slot = std::move(table);
  return slot;
}

// Contraction of a divided-power vector of degree e by t_k: coefficient of
// x^g/g! in t_k.G is the coefficient of x^(g + e_k)/(g + e_k)! in G.
std::vector<Rational> contract_variable(std::span<const Rational> src, std::size_t n,
                                        unsigned e, std::size_t k) {
  if (e == 0) return {};
  const auto raise = raise_table(n, e - 1);
  const std::size_t out_size = raise->size() / n;
  std::vector<Rational> out(out_size);
  for (std::size_t j = 0; j < out_size; ++j) out[j] = src[(*raise)[j * n + k]];
  return out;
}

std::vector<Rational> contract_linear(std::span<const Rational> src, std::size_t n,
                                      unsigned e, const LinearForm& l) {
  if (e == 0) return {};
  const auto raise = raise_table(n, e - 1);
  const std::size_t out_size = raise->size() / n;
  std::vector<Rational> out(out_size);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& lk = l.coefficients[k];
    if (sgn(lk) == 0) continue;
    for (std::size_t j = 0; j < out_size; ++j) {
      const Rational& s = src[(*raise)[j * n + k]];
      if (sgn(s) != 0) out[j] += lk * s;
    }
  }
  return out;
}

void require_compatible(const GradedIdeal& a, const GradedIdeal& b) {
  if (!(a.ring() == b.ring()))
    throw DimensionMismatch("ideals live in different polynomial rings");
  if (a.top_degree() != b.top_degree())
    throw DimensionMismatch("ideals are truncated at different degrees");
}

void require_form_arity(const LinearForm& l, const Ring& ring) {
  if (l.size() != ring.size()) throw DimensionMismatch("linear form arity");
}

Subspace empty_dual(std::size_t n, unsigned e) { return Subspace(monomial_count(n, e)); }

}  // namespace

// ------------------------------------------------------------- GradedIdeal

GradedIdeal::GradedIdeal(Ring ring, std::vector<Subspace> inverse_system)
    : ring_(std::move(ring)), dual_(std::move(inverse_system)) {
  if (dual_.empty()) throw InvalidArgument("graded ideal needs at least degree 0");
  for (unsigned e = 0; e < dual_.size(); ++e)
    if (dual_[e].ambient_dim() != monomial_count(ring_.size(), e))
      throw DimensionMismatch("inverse system piece has the wrong ambient size");
}

GradedIdeal GradedIdeal::unit(Ring ring, unsigned top_degree) {
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= top_degree; ++e) dual.push_back(empty_dual(ring.size(), e));
  return GradedIdeal(std::move(ring), std::move(dual));
}

GradedIdeal GradedIdeal::zero(Ring ring, unsigned top_degree) {
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= top_degree; ++e)
    dual.push_back(Subspace::full(monomial_basis(ring.size(), e)->size()));
  return GradedIdeal(std::move(ring), std::move(dual));
}

Subspace GradedIdeal::piece(unsigned e) const {
  const Subspace& d = dual_.at(e);
  if (d.is_zero()) return Subspace::full(d.ambient_dim());
  return kernel_basis(d.basis());
}

std::size_t GradedIdeal::piece_dim(unsigned e) const {
  const Subspace& d = dual_.at(e);
  return d.ambient_dim() - d.dim();
}

bool GradedIdeal::is_unit() const {
  return dual_.front().is_zero();
}

bool GradedIdeal::satisfies_ideal_property() const {
  // Dually: the inverse system is closed under differentiation.
  const std::size_t n = ring_.size();
  for (unsigned e = 1; e < dual_.size(); ++e) {
    const Subspace& upper = dual_[e];
    for (std::size_t r = 0; r < upper.dim(); ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (!dual_[e - 1].contains(contract_variable(upper.basis().row(r), n, e, k)))
          return false;
  }
  return true;
}

// ------------------------------------------------------------ constructions

QMatrix catalecticant_matrix(const Polynomial& F, unsigned e) {
  if (!F.degree()) throw InvalidArgument("catalecticant needs a homogeneous form");
  const unsigned d = *F.degree();
  if (e > d) throw InvalidArgument("catalecticant degree out of range");
  const std::size_t n = F.ring().size();
  const auto source = monomial_basis(n, e);
  const auto target = monomial_basis(n, d - e);
  QMatrix m(target->size(), source->size());
  for (std::size_t r = 0; r < target->size(); ++r) {
    const Monomial& gamma = (*target)[r];
    const Integer gamma_fact = factorial_of(gamma);
    for (std::size_t c = 0; c < source->size(); ++c) {
      const Monomial beta = gamma * (*source)[c];
      auto it = F.terms().find(beta);
      if (it == F.terms().end()) continue;
      Rational ratio(factorial_of(beta), gamma_fact);
      ratio.canonicalize();
      m(r, c) = it->second * ratio;
    }
  }
  return m;
}

GradedIdeal perp_graded(const Polynomial& F) {
  if (F.is_zero()) throw InvalidArgument("perp ideal of the zero polynomial");
  if (!F.degree()) throw InvalidArgument("perp ideal needs a homogeneous form");
  const unsigned d = *F.degree();
  const std::size_t n = F.ring().size();
  const auto top = monomial_basis(n, d);

  std::vector<Subspace> dual(d + 2);
  dual[d + 1] = empty_dual(n, d + 1);

  std::vector<Rational> f(top->size());
  for (const auto& [beta, c] : F.terms())
    f[*top->index_of(beta)] = c * Rational(factorial_of(beta));
  QMatrix gens(0, top->size());
  gens.append_row(f);
  dual[d] = Subspace::span(std::move(gens));

  for (unsigned e = d; e-- > 0;) {
    const Subspace& above = dual[e + 1];
    QMatrix derivs(0, monomial_count(n, e));
    for (std::size_t r = 0; r < above.dim(); ++r)
      for (std::size_t k = 0; k < n; ++k)
        derivs.append_row(contract_variable(above.basis().row(r), n, e + 1, k));
    dual[e] = Subspace::span(std::move(derivs));
  }
  return GradedIdeal(F.ring(), std::move(dual));
}

GradedIdeal colon_by_linear(const GradedIdeal& I, const LinearForm& t) {
  require_form_arity(t, I.ring());
  if (t.is_zero()) throw InvalidArgument("colon by the zero linear form");
  const std::size_t n = I.ring().size();
  const unsigned D = I.top_degree();
  // (I : t)_e^⊥ = t . I_{e+1}^⊥
  std::vector<Subspace> dual(D + 1);
  dual[D] = empty_dual(n, D);
  for (unsigned e = 0; e < D; ++e) {
    const Subspace& above = I.inverse_system(e + 1);
    QMatrix gens(0, monomial_count(n, e));
    for (std::size_t r = 0; r < above.dim(); ++r)
      gens.append_row(contract_linear(above.basis().row(r), n, e + 1, t));
    dual[e] = Subspace::span(std::move(gens));
  }
  return GradedIdeal(I.ring(), std::move(dual));
}

GradedIdeal colon_by_linear(const Polynomial& F, const LinearForm& t) {
  return colon_by_linear(perp_graded(F), t);
}

GradedIdeal add_linear_forms(const GradedIdeal& I, std::span<const LinearForm> forms) {
  for (const auto& l : forms) require_form_arity(l, I.ring());
  const std::size_t n = I.ring().size();
  std::vector<Subspace> dual;
  dual.reserve(I.top_degree() + 1);
  dual.push_back(I.inverse_system(0));
  for (unsigned e = 1; e <= I.top_degree(); ++e) {
    const Subspace& cur = I.inverse_system(e);
    if (cur.is_zero() || forms.empty()) {
      dual.push_back(cur);
      continue;
    }
    // Combinations lambda of basis rows with l.(lambda B) = 0 for every l.
    const std::size_t lower = monomial_count(n, e - 1);
    QMatrix system(forms.size() * lower, cur.dim());
    for (std::size_t r = 0; r < cur.dim(); ++r)
      for (std::size_t j = 0; j < forms.size(); ++j) {
        const auto image = contract_linear(cur.basis().row(r), n, e, forms[j]);
        for (std::size_t i = 0; i < lower; ++i) system(j * lower + i, r) = image[i];
      }
    const Subspace lambdas = kernel_basis(system);
    QMatrix gens(lambdas.dim(), cur.ambient_dim());
    for (std::size_t i = 0; i < lambdas.dim(); ++i)
      for (std::size_t r = 0; r < cur.dim(); ++r) {
        const Rational& c = lambdas.basis()(i, r);
        if (sgn(c) == 0) continue;
        auto row = cur.basis().row(r);
        for (std::size_t j = 0; j < row.size(); ++j)
          if (sgn(row[j]) != 0) gens(i, j) += c * row[j];
      }
    dual.push_back(Subspace::span(std::move(gens)));
  }
  return GradedIdeal(I.ring(), std::move(dual));
}

namespace {

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& vars,
                                       std::size_t n) {
  std::vector<bool> inside(n, false);
  for (std::size_t v : vars) {
    if (v >= n) throw DimensionMismatch("block variable outside the ambient ring");
    if (inside[v]) throw InvalidArgument("repeated block variable");
    inside[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!inside[i]) out.push_back(i);
  return out;
}

}  // namespace

GradedIdeal extend_to_ambient(const GradedIdeal& I, const std::vector<std::size_t>& vars,
                              const Ring& ambient) {
  if (vars.size() != I.ring().size())
    throw DimensionMismatch("block variable list does not match the ideal's ring");
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (ambient.name(vars.at(j)) != I.ring().name(j))
      throw DimensionMismatch("block variable names do not match the ambient ring");
  const std::size_t n = ambient.size();
  const std::vector<std::size_t> others = complement_of(vars, n);
  const unsigned D = I.top_degree();

  // (I T)_e^⊥ = sum over monomials y^b in the other variables of
  // y^b/b! * I_{e-|b|}^⊥.
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= D; ++e) {
    const auto target = monomial_basis(n, e);
    QMatrix gens(0, target->size());
    std::vector<Rational> row(target->size());
    for (unsigned k = 0; k <= e; ++k) {
      const Subspace& inner = I.inverse_system(e - k);
      if (inner.is_zero()) continue;
      const auto inner_basis = monomial_basis(vars.size(), e - k);
      const auto outer_basis = monomial_basis(others.size(), k);
      for (const Monomial& beta : outer_basis->monomials()) {
        for (std::size_t r = 0; r < inner.dim(); ++r) {
          std::fill(row.begin(), row.end(), Rational(0));
          auto src = inner.basis().row(r);
          for (std::size_t j = 0; j < src.size(); ++j) {
            if (sgn(src[j]) == 0) continue;
            Monomial m = Monomial::one(n);
            for (std::size_t a = 0; a < vars.size(); ++a)
              m.exponents[vars[a]] = (*inner_basis)[j][a];
            for (std::size_t b = 0; b < others.size(); ++b)
              m.exponents[others[b]] = beta[b];
            row[*target->index_of(m)] = src[j];
          }
          gens.append_row(row);
        }
      }
    }
    dual.push_back(Subspace::span(std::move(gens)));
  }
  return GradedIdeal(ambient, std::move(dual));
}

GradedIdeal extend_with_complement(const GradedIdeal& I,
                                   const std::vector<std::size_t>& vars,
                                   const Ring& ambient) {
  if (vars.size() != I.ring().size())
    throw DimensionMismatch("block variable list does not match the ideal's ring");
  const std::size_t n = ambient.size();
  complement_of(vars, n);
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= I.top_degree(); ++e) {
    const Subspace& inner = I.inverse_system(e);
    const std::size_t size = monomial_count(n, e);
    if (inner.is_zero()) {
      dual.emplace_back(size);
      continue;
    }
    const auto target = monomial_basis(n, e);
    const auto inner_basis = monomial_basis(vars.size(), e);
    std::vector<std::size_t> position(inner_basis->size());
    for (std::size_t j = 0; j < inner_basis->size(); ++j) {
      Monomial m = Monomial::one(n);
      for (std::size_t a = 0; a < vars.size(); ++a)
        m.exponents[vars[a]] = (*inner_basis)[j][a];
      position[j] = *target->index_of(m);
    }
    QMatrix gens(inner.dim(), size);
    for (std::size_t r = 0; r < inner.dim(); ++r) {
      auto src = inner.basis().row(r);
      for (std::size_t j = 0; j < src.size(); ++j) gens(r, position[j]) = src[j];
    }
    dual.push_back(Subspace::span(std::move(gens)));
  }
  return GradedIdeal(ambient, std::move(dual));
}

GradedIdeal graded_intersect(std::span<const GradedIdeal> ideals) {
  if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
  for (const auto& I : ideals) require_compatible(ideals.front(), I);
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= ideals.front().top_degree(); ++e) {
    Subspace acc = ideals.front().inverse_system(e);
    for (std::size_t i = 1; i < ideals.size(); ++i)
      acc = subspace_sum(acc, ideals[i].inverse_system(e));
    dual.push_back(std::move(acc));
  }
  return GradedIdeal(ideals.front().ring(), std::move(dual));
}

GradedIdeal graded_sum(const GradedIdeal& a, const GradedIdeal& b) {
  require_compatible(a, b);
  std::vector<Subspace> dual;
  for (unsigned e = 0; e <= a.top_degree(); ++e)
    dual.push_back(subspace_intersect(a.inverse_system(e), b.inverse_system(e)));
  return GradedIdeal(a.ring(), std::move(dual));
}

bool graded_contains(const GradedIdeal& big, const GradedIdeal& small) {
  require_compatible(big, small);
  for (unsigned e = 0; e <= big.top_degree(); ++e)
    if (!subspace_contains(small.inverse_system(e), big.inverse_system(e))) return false;
  return true;
}

HilbertFunction hilbert_function(const GradedIdeal& I) {
  HilbertFunction h;
  for (unsigned e = 0; e <= I.top_degree(); ++e)
    h.values.push_back(I.inverse_system(e).dim());
  return h;
}

std::size_t quotient_total_dim(const GradedIdeal& I) {
  const HilbertFunction h = hilbert_function(I);
  if (h.values.back() != 0)
    throw NonArtinian("quotient is not Artinian at the truncation degree " +
                      std::to_string(I.top_degree()));
  return h.total();
}

}  // namespace apolar
