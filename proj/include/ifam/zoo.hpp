#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifam/resistance.hpp"

namespace ifam {

struct FamilyStats {
  BigInt size;
  BigInt max_degree;
  long max_degree_element = 0;  // smallest element attaining the maximum
  BigInt diversity;
  long covering_number = 0;
  std::optional<Rational> fractional_covering;  // absent beyond the support cap
  bool is_intersecting = false;
  bool is_trivial = false;  // a common element exists
};

FamilyStats family_stats(const SetFamily& F);

bool is_intersecting(const SetFamily& F);

// --- Named constructions -------------------------------------------------

/// All k-sets containing [2, u+1], plus all k-sets through 1 meeting [2, u+1].
SetFamily build_Hu(long n, long k, long u);

/// {I_1, I_i} plus all k-sets through 1 meeting both, I_i = [i+1, k+i].
SetFamily build_Ji(long n, long k, long i);

/// Maximal intersecting family whose 1-avoiding part is
/// {[2,k] ∪ {x} : x in [k+1, k+l]} — l sets with common (k-1)-intersection.
SetFamily build_El(long n, long k, long l);

/// {[k]} ∪ {{1} ∪ [k+1, 2k-1]} ∪ {{2} ∪ [k+1, 2k-1]} on [1, n].
SetFamily build_T2(long k, long n = 0);

/// The two disjoint s-sets {[s], [s+1, 2s]} on [1, m].
SetFamily build_T2prime(long s, long m = 0);

/// Largest (k-1)-uniform family on [m] cross-intersecting with T2(s) — computed.
SetFamily build_F2(long m, long s, long k);

/// Largest (k-1)-uniform family on [m] cross-intersecting with T2'(s) — computed.
SetFamily build_F2prime(long m, long s, long k);

/// Maximal intersecting family whose 1-avoiding part is a copy of T2(k) on [2, n].
SetFamily build_C3(long n, long k);

/// The seven lines of the projective plane of order 2, on [1, n] (n >= 7).
SetFamily build_fano(long n = 7);

/// All k-sets containing some line of the Fano plane.
SetFamily build_D37(long n, long k);

// --- Operations -----------------------------------------------------------

enum class RestrictMode { contains, avoids };

/// F(i) (drop i, uniformity k-1) or F(ī) (members avoiding i, uniformity k).
SetFamily restrict_family(const SetFamily& F, long i, RestrictMode mode);

/// Covering number via branch-and-bound over hitting sets. Empty family: 0.
long covering_number(const SetFamily& F);

/// Fractional covering number as an exact rational, solved on the matching
/// dual with exact-rational pivoting. Supports at most 12 active elements.
Rational fractional_covering(const SetFamily& F);

/// The (i, j)-shift: replace j by i in every member where the result is not
/// already present. Size-preserving and idempotent.
SetFamily shift(const SetFamily& F, long i, long j);

struct MinimalVerdict {
  bool minimal = false;
  long t = 0;                   // |common intersection|
  std::vector<long> witnesses;  // per member: an element of the common
                                // intersection of the others, outside it
};

/// Whether dropping any single member strictly grows the common intersection.
MinimalVerdict minimal_common_intersection(const SetFamily& M);

/// Whether tau(H) = 2 and every proper subfamily is coverable by one element.
bool is_minimal_tau2(const SetFamily& H);

/// The unique maximal intersecting family F' on [1, n] with F'(1̄) = M.
SetFamily maximal_extension(const SetFamily& M, long n, long k);

/// Size bounds for intersecting families classified by a minimal subfamily
/// of the 1-avoiding part with common intersection of size t >= 3: the
/// extension bound |F'| and the |J_{k-t+1}| bound, with witnesses.
std::pair<BoundReport, BoundReport> bound_class2(long n, long k, const SetFamily& M, long t);

// --- Canonical forms ------------------------------------------------------

struct CanonicalForm {
  std::vector<Bits128> code;  // members over relabeled active elements
  int active = 0;
  bool exact = false;  // false beyond the support or permutation budget
};

/// Canonical relabeling of the active elements: invariant refinement into
/// element classes, then the minimum encoding over class-preserving
/// labelings. Exact for supports of at most max_active elements.
CanonicalForm canonical_form(const SetFamily& F, int max_active = 12, long perm_budget = 5'000'000);

bool isomorphic(const SetFamily& F, const SetFamily& G);

// --- Interchange format ---------------------------------------------------

/// Canonical interchange JSON: {"ground":[lo,hi],"k":k,"sets":[[...]]} with
/// members and elements ascending and no whitespace.
std::string family_to_json(const SetFamily& F);
SetFamily family_from_json(const std::string& text);
SetFamily family_from_file(const std::string& path);
void family_to_file(const SetFamily& F, const std::string& path);

}  // namespace ifam
