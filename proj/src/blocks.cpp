#include "apolar/blocks.hpp"

#include <algorithm>
#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

unsigned BlockDecomposition::degree() const {
  if (forms.empty() || !forms.front().degree())
    throw InvalidArgument("block decomposition has no homogeneous first form");
  return *forms.front().degree();
}

Polynomial BlockDecomposition::total() const {
  Polynomial f(ambient);
  for (const auto& fi : forms) f += fi;
  return f;
}

Ring BlockDecomposition::block_ring(std::size_t i) const {
  std::vector<std::string> names;
  for (std::size_t v : blocks.at(i)) names.push_back(ambient.name(v));
  return Ring(std::move(names));
}

Polynomial BlockDecomposition::block_form(std::size_t i) const {
  return restrict_to(forms.at(i), blocks.at(i), block_ring(i));
}

std::vector<std::string> block_violations(const BlockDecomposition& bd) {
  std::vector<std::string> out;
  if (bd.blocks.empty()) out.push_back("no blocks");
  if (bd.blocks.size() != bd.forms.size())
    out.push_back("block count differs from form count");

  std::vector<int> owner(bd.ambient.size(), -1);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (bd.blocks[i].empty()) out.push_back("block " + std::to_string(i + 1) + " is empty");
    for (std::size_t v : bd.blocks[i]) {
      if (v >= bd.ambient.size()) {
        out.push_back("block " + std::to_string(i + 1) + " names an unknown variable");
        continue;
      }
      if (owner[v] >= 0) {
        out.push_back("variable " + bd.ambient.name(v) + " appears in blocks " +
                      std::to_string(owner[v] + 1) + " and " + std::to_string(i + 1));
      } else {
        owner[v] = static_cast<int>(i);
      }
    }
  }

  std::optional<unsigned> shared;
  const std::size_t m = std::min(bd.blocks.size(), bd.forms.size());
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial& f = bd.forms[i];
    const std::string label = "form " + std::to_string(i + 1);
    if (!(f.ring() == bd.ambient)) {
      out.push_back(label + " is not over the ambient ring");
      continue;
    }
    if (f.is_zero()) {
      out.push_back(label + " is zero");
      continue;
    }
    if (!f.degree()) {
      out.push_back(label + " is not homogeneous");
      continue;
    }
    if (*f.degree() < 2) out.push_back(label + " has degree below 2");
    if (!shared) {
      shared = f.degree();
    } else if (*shared != *f.degree()) {
      out.push_back(label + " has degree " + std::to_string(*f.degree()) +
                    ", expected " + std::to_string(*shared));
    }
    for (std::size_t v : f.support())
      if (std::find(bd.blocks[i].begin(), bd.blocks[i].end(), v) == bd.blocks[i].end())
        out.push_back(label + " uses " + bd.ambient.name(v) + " outside its block");
  }
  return out;
}

Polynomial restrict_to(const Polynomial& p, const std::vector<std::size_t>& vars,
                       const Ring& block_ring) {
  Polynomial out(block_ring);
  for (const auto& [m, c] : p.terms()) {
    Monomial r = Monomial::one(vars.size());
    unsigned kept = 0;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      r.exponents[j] = m[vars[j]];
      kept += m[vars[j]];
    }
    if (kept != m.degree()) throw InvalidArgument("polynomial leaves the block");
    out.add_term(r, c);
  }
  return out;
}

Polynomial embed_into(const Polynomial& p, const std::vector<std::size_t>& vars,
                      const Ring& ambient) {
  Polynomial out(ambient);
  for (const auto& [m, c] : p.terms()) {
    Monomial e = Monomial::one(ambient.size());
    for (std::size_t j = 0; j < vars.size(); ++j) e.exponents[vars[j]] = m[j];
    out.add_term(e, c);
  }
  return out;
}

LinearForm embed_into(const LinearForm& l, const std::vector<std::size_t>& vars,
                      std::size_t ambient_size) {
  LinearForm out{std::vector<Rational>(ambient_size)};
  for (std::size_t j = 0; j < vars.size(); ++j) out.coefficients[vars[j]] = l.coefficients[j];
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

BlockDecomposition parse_blocks(const std::vector<std::string>& declarations) {
  std::vector<std::vector<std::string>> var_lists;
  std::vector<std::string> bodies;
  std::vector<std::string> all_names;
  for (const auto& raw : declarations) {
    const std::string decl = trim(raw);
    if (decl.empty()) continue;
    const auto colon = decl.find(':');
    if (colon == std::string::npos)
      throw ParseError(ParseError::Kind::syntax, 0,
                       "block declaration needs 'vars: polynomial': " + decl);
    std::vector<std::string> vars;
    std::stringstream ss(decl.substr(0, colon));
    for (std::string v; std::getline(ss, v, ',');) {
      v = trim(v);
      if (v.empty()) throw ParseError(ParseError::Kind::syntax, 0, "empty variable name");
      vars.push_back(v);
      all_names.push_back(v);
    }
    var_lists.push_back(std::move(vars));
    bodies.push_back(decl.substr(colon + 1));
  }
  if (var_lists.empty()) throw InvalidArgument("no block declarations");

  BlockDecomposition bd;
  // Overlapping declarations are reported by block_violations, so the ambient
  // ring keeps the first occurrence of each name.
  std::vector<std::string> unique;
  for (const auto& n : all_names)
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
  bd.ambient = Ring(unique);
  for (std::size_t i = 0; i < var_lists.size(); ++i) {
    std::vector<std::size_t> idx;
    for (const auto& v : var_lists[i]) idx.push_back(*bd.ambient.index_of(v));
    bd.blocks.push_back(std::move(idx));
    bd.forms.push_back(parse_poly(bodies[i], bd.ambient));
  }
  return bd;
}

BlockDecomposition parse_blocks(std::string_view text) {
  std::vector<std::string> decls;
  std::stringstream ss{std::string(text)};
  for (std::string part; std::getline(ss, part, ';');) decls.push_back(part);
  return parse_blocks(decls);
}

std::string to_string(const BlockDecomposition& bd) {
  std::string out;
  for (std::size_t i = 0; i < bd.size(); ++i) {
    if (i) out += " ; ";
    for (std::size_t j = 0; j < bd.blocks[i].size(); ++j) {
      if (j) out += ",";
      out += bd.ambient.name(bd.blocks[i][j]);
    }
    out += ": " + bd.forms[i].to_string();
  }
  return out;
}

}  // namespace apolar
