#include "apolar/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/random.hpp"

namespace apolar {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m = one(nvars);
  m.exponents.at(i) = power;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m.exponents[i] += other.exponents[i];
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m.exponents[i] -= divisor.exponents[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m.exponents[i] = std::max(m.exponents[i], other.exponents[i]);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (unsigned e : m.exponents) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

// ----------------------------------------------------------- MonomialBasis

namespace {

void enumerate_lex(std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[var] = k;
    enumerate_lex(var + 1, remaining - k, cur, out);
  }
  cur[var] = 0;
}

std::atomic<std::size_t> g_max_monomials{kDefaultMaxMonomials};

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    std::vector<unsigned> cur(nvars, 0);
    enumerate_lex(0, degree, cur, monomials_);
  }
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(nvars - 1 + degree, degree), computed incrementally with exact division.
  unsigned __int128 c = 1;
  for (unsigned k = 1; k <= degree; ++k) {
    c = c * (nvars - 1 + k) / k;
    if (c > std::numeric_limits<std::size_t>::max())
      return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

std::size_t max_monomials() { return g_max_monomials.load(); }
void set_max_monomials(std::size_t cap) { g_max_monomials.store(cap); }

std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t nvars,
                                                    unsigned degree) {
  const std::size_t count = monomial_count(nvars, degree);
  if (count > max_monomials()) {
    std::ostringstream msg;
    msg << "graded piece of degree " << degree << " in " << nvars
        << " variables has " << count << " monomials, above the limit of "
        << max_monomials() << " (raise it with --max-monomials)";
    throw SizeLimitExceeded(msg.str());
  }
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>,
                  std::shared_ptr<const MonomialBasis>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, degree);
  return slot;
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw InvalidArgument("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Ring ring, Rational c) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial::one(p.ring_.size()), c);
  return p;
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_.size()) throw DimensionMismatch("monomial arity");
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  const std::size_t n = ring.size();
  return monomial(std::move(ring), Monomial::variable(n, i));
}

unsigned Polynomial::max_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != ring_.size()) throw DimensionMismatch("monomial arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  refresh_degree();
}

void Polynomial::refresh_degree() {
  degree_.reset();
  if (terms_.empty()) return;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return;
  degree_ = d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(ring_.size(), false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

std::vector<Rational> Polynomial::coefficients(const MonomialBasis& basis) const {
  std::vector<Rational> v(basis.size());
  for (const auto& [m, c] : terms_) {
    auto idx = basis.index_of(m);
    if (!idx) throw DimensionMismatch("term outside the requested graded piece");
    v[*idx] = c;
  }
  return v;
}

Polynomial Polynomial::from_coefficients(const Ring& ring, const MonomialBasis& basis,
                                         std::span<const Rational> coeffs) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.terms_.emplace(basis[i], coeffs[i]);
  p.refresh_degree();
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(ring_ == other.ring_)) throw DimensionMismatch("variable lists differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!(ring_ == other.ring_)) throw DimensionMismatch("variable lists differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  refresh_degree();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) throw DimensionMismatch("variable lists differ");
  Polynomial p(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

std::string Polynomial::render(bool dual) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first, lex-descending within a degree.
  std::vector<const std::pair<const Monomial, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const unsigned da = a->first.degree();
    const unsigned db = b->first.degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });
  for (const auto* t : order) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool constant = m.degree() == 0;
    bool need_star = false;
    if (c != 1 || constant) {
      out << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << (dual ? ring_.dual_name(i) : ring_.name(i));
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

std::string Polynomial::to_string() const { return render(false); }
std::string Polynomial::to_dual_string() const { return render(true); }

// -------------------------------------------------------------- LinearForm

LinearForm LinearForm::variable(std::size_t nvars, std::size_t i) {
  LinearForm l{std::vector<Rational>(nvars)};
  l.coefficients.at(i) = 1;
  return l;
}

bool LinearForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Polynomial LinearForm::to_polynomial(const Ring& ring) const {
  if (ring.size() != coefficients.size())
    throw DimensionMismatch("linear form arity");
  Polynomial p(ring);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    p.add_term(Monomial::variable(ring.size(), i), coefficients[i]);
  return p;
}

std::string LinearForm::to_string(const Ring& ring) const {
  return to_polynomial(ring).to_dual_string();
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  if (a.size() != b.size()) throw DimensionMismatch("linear form arity");
  LinearForm s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s.coefficients[i] += b.coefficients[i];
  return s;
}

// ---------------------------------------------------------------- apolarity

Polynomial apply_operator(const Polynomial& g, const Polynomial& F) {
  if (!(g.ring() == F.ring()))
    throw DimensionMismatch("operator and form use different variable lists");
  Polynomial out(F.ring());
  for (const auto& [alpha, cg] : g.terms()) {
    for (const auto& [beta, cf] : F.terms()) {
      if (!alpha.divides(beta)) continue;
      // d^alpha x^beta = beta!/(beta-alpha)! x^(beta-alpha)
      Integer falling = 1;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        for (unsigned k = 0; k < alpha[i]; ++k) falling *= beta[i] - k;
      out.add_term(beta.quotient(alpha), cg * cf * Rational(falling));
    }
  }
  return out;
}

Polynomial apply_operator(const LinearForm& l, const Polynomial& F) {
  return apply_operator(l.to_polynomial(F.ring()), F);
}

// ------------------------------------------------------------------ parsing

namespace {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const Integer na(a.substr(i, ie - i));
      const Integer nb(b.substr(j, je - j));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c, bool allow_underscore) {
  return std::isalnum(static_cast<unsigned char>(c)) || (allow_underscore && c == '_');
}

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, bool dual)
      : text_(text), ring_(ring), dual_(dual) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
      skip_ws();
    }
    return result;
  }

 private:
  void parse_term(Polynomial& out, int sign) {
    Rational coeff = sign;
    Monomial mono = Monomial::one(ring_.size());
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (is_ident_start(peek())) {
        const std::size_t start = pos_;
        std::string name;
        while (!at_end() && is_ident_char(peek(), dual_)) name += text_[pos_++];
        const std::size_t var = resolve(name, start);
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_exponent();
        }
        mono.exponents[var] += power;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    out.add_term(mono, coeff);
  }

  Rational parse_number() {
    Integer num = parse_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer den = parse_digits();
      if (den == 0) fail_at(at, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer parse_digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += text_[pos_++];
    return Integer(digits);
  }

  unsigned parse_exponent() {
    const std::size_t at = pos_;
    Integer e = parse_digits();
    if (e > 1000) fail_at(at, "exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  std::size_t resolve(const std::string& name, std::size_t at) {
    if (auto i = ring_.index_of(name)) return *i;
    if (dual_ && name.size() > 2 && name.starts_with("t_"))
      if (auto i = ring_.index_of(name.substr(2))) return *i;
    throw ParseError(ParseError::Kind::unknown_variable, at,
                     "unknown variable '" + name + "' at position " +
                         std::to_string(at));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) {
    throw ParseError(ParseError::Kind::syntax, at,
                     what + " at position " + std::to_string(at));
  }

  std::string_view text_;
  const Ring& ring_;
  bool dual_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i])) {
      std::string name;
      while (i < text.size() && is_ident_char(text[i], false)) name += text[i++];
      if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end(), natural_less);
  return names;
}

Polynomial parse_poly(std::string_view text, const Ring& ring, bool allow_zero,
                      bool dual_names) {
  const Ring effective = ring.size() == 0 ? Ring(scan_variables(text)) : ring;
  Polynomial p = Parser(text, effective, dual_names).parse();
  if (p.is_zero() && !allow_zero)
    throw ParseError(ParseError::Kind::zero_polynomial, 0, "zero polynomial");
  return p;
}

LinearForm parse_linear_form(std::string_view text, const Ring& ring) {
  const Polynomial p = parse_poly(text, ring, false, true);
  if (p.degree() != 1u) throw InvalidArgument("not a linear form: " + std::string(text));
  LinearForm l{std::vector<Rational>(ring.size())};
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) l.coefficients[i] = c;
  return l;
}

// ------------------------------------------------------------------ random

Polynomial random_form(const Ring& ring, unsigned degree, unsigned bound,
                       std::uint64_t seed) {
  if (degree < 1 || bound < 1) throw InvalidArgument("random_form needs d >= 1, B >= 1");
  const auto basis = monomial_basis(ring.size(), degree);
  Rng rng(seed);
  const long b = static_cast<long>(bound);
  while (true) {
    Polynomial p(ring);
    for (const Monomial& m : basis->monomials()) p.add_term(m, Rational(rng.uniform(-b, b)));
    if (!p.is_zero()) return p;
  }
}

}  // namespace apolar
