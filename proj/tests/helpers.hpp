#pragma once

#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/polynomial.hpp"

namespace apolar::testing {

inline Ring ring_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return Ring(v);
}

inline LinearForm dual_var(const Ring& r, const char* name) {
  return LinearForm::variable(r.size(), *r.index_of(name));
}

inline std::vector<Rational> vec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace apolar::testing
