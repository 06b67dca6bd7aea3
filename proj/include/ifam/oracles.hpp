#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifam/zoo.hpp"

namespace ifam {

/// Result of an exhaustive search: the extremal value plus every witness
/// found, canonically ordered so identical inputs give identical output.
struct OracleResult {
  Rational objective = 0;
  std::vector<std::pair<BigInt, BigInt>> witness_pairs;  // (|A|, |B|) prefix sizes
  std::vector<SetFamily> witness_families;
  BigInt search_space_size = 0;
  double elapsed_seconds = 0.0;
  bool witnesses_deduped = true;
};

/// Canonical serialization omits the elapsed time so byte-identical runs are
/// reproducible; diagnostic mode includes it.
std::string oracle_to_json(const OracleResult& r, bool canonical = true);

/// For each b-prefix length m_b, the largest a-prefix length such that the
/// two lex prefixes are cross-intersecting, found by direct double-loop
/// elimination. Index m_b runs 0..C(|ground|, b).
std::vector<long> cross_prefix_profile(const GroundSet& ground, int a, int b);

/// Maximizes |A| + weight |B| over cross-intersecting lex-prefix pairs
/// (L(m_a, a), L(m_b, b)) with minB <= m_b <= maxB. The restriction to lex
/// prefixes is lossless for the unconstrained maximum by the classical
/// cross-intersecting form of the shadow theorem; maxB pins the sweep to the
/// window a bound evaluator claims.
OracleResult oracle_lexpair(const GroundSet& ground, int a, int b, const BigInt& minB,
                            const std::optional<BigInt>& maxB = std::nullopt,
                            const Rational& weight = 1);

enum class CliqueConstraint { none, diversity_at_least, tau_at_least, degree_proportion_at_most };

/// Enumerates every maximal intersecting family (maximal clique of the
/// intersection relation on k-sets) and maximizes the family size subject to
/// the constraint. Witnesses are reported up to isomorphism.
OracleResult oracle_maximal_intersecting(long n, long k, CliqueConstraint constraint,
                                         const Rational& param = 0);

/// Enumerates all minimal 2-cover families H of s-sets on [m] (certificate
/// construction; sizes are capped at s+1 by the set-pair bound), computes the
/// largest (k-1)-uniform family cross-intersecting with each, and maximizes
/// |F| + |H|. With require_intersecting only pairwise-intersecting H are
/// kept, which for minimal 2-covers means |H| >= 3.
OracleResult oracle_lemmin(long m, long s, long k, bool require_intersecting);

struct DiversityTable {
  long n = 0;
  long k = 0;
  Rational weight = 1;
  std::vector<Rational> values;      // index = diversity lower bound, 0..C(n-4,k-3)
  std::vector<BigInt> breakpoints;   // diversities where the next row drops
};

/// Row gamma holds the oracle_lexpair maximum with a = k-1, b = k on [2, n],
/// minB = gamma, capped at C(n-4, k-3). Memoized under IFAM_CACHE_DIR.
DiversityTable oracle_diversity_table(long n, long k, const Rational& weight = 1);

std::string diversity_table_to_json(const DiversityTable& t);
std::string diversity_table_to_csv(const DiversityTable& t);

}  // namespace ifam
