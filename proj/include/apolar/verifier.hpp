#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolar/blocks.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/rank.hpp"

namespace apolar {

/// Outcome of one check on one instance. `observed` and `expected` hold
/// named exact values (dimensions, degrees, ranks) as decimal strings.
struct CheckReport {
  std::string check_name;
  std::string instance;
  bool passed = false;
  bool skipped = false;
  std::vector<std::pair<std::string, std::string>> observed;
  std::vector<std::pair<std::string, std::string>> expected;
  std::string detail;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Witnesses below are given in ambient coordinates (as in RankCertificate);
// only their coordinates on the matching block are used.

/// (F^⊥ : t_1) ∩ ... ∩ (F^⊥ : t_m) ⊆ J_1 ∩ ... ∩ J_m in every degree.
CheckReport check_colon_inclusion(const BlockDecomposition& bd,
                                  std::span<const LinearForm> witnesses);

/// dim T/(J_1 ∩ ... ∩ J_m) = rk(F_1) + ... + rk(F_m) - (m - 1).
CheckReport check_claim1(const BlockDecomposition& bd, std::span<const LinearForm> witnesses);

/// t_i . F_i != 0 for every block.
CheckReport check_nonannihilation(const BlockDecomposition& bd,
                                  std::span<const LinearForm> witnesses);

/// For a two-block decomposition and l_i on block i with l_i . F_i != 0:
/// F^⊥ + (l_1 + l_2) is properly contained in J_1 ∩ J_2 with
/// J_i = F_i^⊥ + (l_i) + (other block), and
/// dim T/(F^⊥ + (l_1 + l_2)) >= dim T_1/(F_1^⊥ + (l_1)) + dim T_2/(F_2^⊥ + (l_2)).
/// Skipped when a precondition fails.
CheckReport check_cactus_lemma(const BlockDecomposition& bd, const LinearForm& l1,
                               const LinearForm& l2);

/// H(e) = H(d - e) and H(0) = H(d) = 1 for T/F^⊥.
CheckReport check_gorenstein(const Polynomial& F);

/// For x^a (all exponents positive): the bound with the minimal-exponent
/// witness equals the product formula, and every monomial ideal on the way
/// (F^⊥, the colon, colon + (t), F^⊥ + (t)) matches the counting oracle.
CheckReport check_monomial_rank(std::span<const unsigned> exponents);

/// d1 + d2 = d + 2 with d1 read off catalecticant ranks; the rank agrees with
/// the square-free case analysis (square-freeness decided by the
/// discriminant); a rational witness, when found, attains the rank.
CheckReport check_binary_form(const Polynomial& F);

/// Number of monomials in `nvars` variables divisible by no generator,
/// enumerated up to total degree `cap`. Throws NonArtinian when a monomial of
/// degree `cap` survives.
std::size_t oracle_monomial_quotient(std::size_t nvars, std::span<const Monomial> generators,
                                     unsigned cap);

/// Generators of the intersection of two monomial ideals (pairwise lcms,
/// minimalized).
std::vector<Monomial> monomial_ideal_intersection(std::span<const Monomial> a,
                                                  std::span<const Monomial> b);

/// Oracle comparison for every monomial block of a Waring instance: each J_i,
/// and the intersection of all J_i when every block is a monomial.
CheckReport check_monomial_oracle(const BlockDecomposition& bd,
                                  std::span<const LinearForm> witnesses);

// ------------------------------------------------------------------ corpus

/// Suites: monomial, binary, additive, claim1, colon-inclusion,
/// nonannihilation, oracle, cactus, cactus-lemma, gorenstein, all.
struct CorpusConfig {
  std::vector<std::string> suites;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t max_variables = 8;
  unsigned min_degree = 2;
  unsigned max_degree = 6;
  std::size_t max_blocks = 3;
  std::size_t samples = 3;
  std::size_t threads = 0;  // 0: hardware concurrency
};

const std::vector<std::string>& known_suites();

/// Block sum of monomials and binary forms for additive_rank, with rational
/// witnesses for every binary block.
BlockDecomposition random_waring_instance(std::uint64_t seed, const CorpusConfig& config);

/// Two blocks, each a binary form or a monomial with
/// a_0 + ... + a_{n-1} <= a_n.
BlockDecomposition random_cactus_instance(std::uint64_t seed, const CorpusConfig& config);

/// Binary form of the given degree with a rational computing form.
Polynomial random_binary_form(const Ring& ring, unsigned degree, std::uint64_t seed);

/// Runs every requested suite on `count` instances each. Instance k of a
/// suite uses a seed derived from (config.seed, suite, k), so reruns are
/// identical. Failures are reported, never thrown.
std::vector<CheckReport> run_corpus(const CorpusConfig& config);

}  // namespace apolar
