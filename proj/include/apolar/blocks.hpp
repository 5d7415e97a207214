#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

/// F = F_1 + ... + F_m with F_i supported on the variable block V_i.
/// All forms share the ambient ring.
struct BlockDecomposition {
  Ring ambient;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Polynomial> forms;

  std::size_t size() const noexcept { return blocks.size(); }
  /// Shared degree of the block forms (taken from the first form).
  unsigned degree() const;
  Polynomial total() const;
  /// The i-th block as its own ring together with F_i restricted to it.
  Ring block_ring(std::size_t i) const;
  Polynomial block_form(std::size_t i) const;
};

/// Returns the list of violated conditions; empty means the decomposition is
/// valid (disjoint blocks, supports inside blocks, equal degree d >= 2).
std::vector<std::string> block_violations(const BlockDecomposition& bd);
inline bool check_blocks(const BlockDecomposition& bd) {
  return block_violations(bd).empty();
}

/// Parses "x,y: x*y ; z,w: z*w". The ambient ring is the concatenation of the
/// declared variable lists. Validity is not checked here; call check_blocks.
BlockDecomposition parse_blocks(std::string_view text);
BlockDecomposition parse_blocks(const std::vector<std::string>& declarations);

/// Restricts a polynomial on `ambient` to the variables `vars` (which must
/// contain its support), or embeds a polynomial on the block ring back.
Polynomial restrict_to(const Polynomial& p, const std::vector<std::size_t>& vars,
                       const Ring& block_ring);
Polynomial embed_into(const Polynomial& p, const std::vector<std::size_t>& vars,
                      const Ring& ambient);
LinearForm embed_into(const LinearForm& l, const std::vector<std::size_t>& vars,
                      std::size_t ambient_size);

std::string to_string(const BlockDecomposition& bd);

}  // namespace apolar
