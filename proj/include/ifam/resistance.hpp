#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifam/lex.hpp"

namespace ifam {

/// Decomposition of a diversity value gamma < C(n-1, k-1) through its
/// (n-k-1)-cascade. T_gamma lists the stop elements b_1 < ... < b_sb with
/// gamma = sum C(n - b_i, n-k-i); S_gamma = T_gamma ⊕ [2, b_sb - 1] is the
/// matching characteristic set, so S_gamma ∪ T_gamma = [2, b_sb] and
/// S_gamma ∩ T_gamma = {b_sb}.
struct ResistantDescriptor {
  long n = 0;
  long k = 0;
  BigInt gamma;
  std::vector<long> T_gamma;
  std::vector<long> S_gamma;
  bool resistant = false;
};

ResistantDescriptor resistant_descriptor(long n, long k, const BigInt& gamma);

/// A resistant pair on ground [2, n]: S carries the reserved element 1;
/// T is the characteristic set of the k-uniform side.
struct ResistantPair {
  std::vector<long> S;
  std::vector<long> T;
  BigInt gammaB;  // |L([2,n], T, k)|
  BigInt sizeA;   // |L([2,n], S, k-1)|
};

/// All resistant pairs for (n, k) plus the l = 0 sentinel (empty k-side),
/// in ascending gammaB order: gammaB runs 0 = γ_0 < γ_1 < ... < γ_m = C(n-4, k-3).
/// The pair structure depends only on k; the sizes depend on n.
std::vector<ResistantPair> resistant_pairs(long n, long k);

/// All resistant numbers 0 = γ_0 < ... < γ_m = C(n-4, k-3), via the pair route.
std::vector<BigInt> enumerate_resistant(long n, long k);

/// Same list by filtering every value in [0, C(n-4,k-3)] through the
/// cascade-based verdict. The two routes must agree; gated to small ranges.
std::vector<BigInt> enumerate_resistant_via_cascade(long n, long k);

CharPair char_pair_of(long n, long k, const ResistantPair& p);

/// Named bound evaluation with inputs, the value, and the sharpness witness
/// when one is known.
struct BoundReport {
  std::string theorem;
  std::map<std::string, std::string> inputs;
  Rational value;
  bool strict = false;
  std::optional<CharPair> witness_pair;
  std::map<std::string, std::string> notes;

  BigInt integer_value() const { return to_bigint(value); }
};

/// Step bound on |F| for an intersecting k-uniform family with diversity
/// >= gamma (gamma <= C(n-4,k-3)): locates the window (γ_{l-1}, γ_l] and
/// returns |L(S_l, k-1)| + γ_l. Strictly decreasing across windows; sharp.
/// gamma = 0 returns the full star bound C(n-1, k-1).
BoundReport bound_full1(long n, long k, const BigInt& gamma);

/// C(n-1,k-1) + C(n-u-1, n-k-1) - C(n-u-1, k-1) for real 3 <= u <= k,
/// valid when the diversity is at least C(n-u-1, n-k-1).
BoundReport bound_thm1(long n, long k, const Rational& u);

/// The drop bound: thm1(u) - C(n-k-2, k-2) + 1, for integer 4 <= u <= k with
/// diversity > C(n-u-1, n-k-1); for u = 3 only inside the two windows
/// above C(n-4, k-3) where it is claimed.
BoundReport bound_corhm(long n, long k, long u, const BigInt& gamma);

/// Bound on Delta + C * diversity with weight C = (n-k-2)/(k-2):
/// |L(S_l, k-1)| + C γ_l on the window containing gamma. Exposes the two
/// specializations (trivial and non-trivial) in the notes.
BoundReport bound_weighted(long n, long k, const BigInt& gamma);

/// (a, b)-resistant analogue on ground [1, n], sentinel included, ascending.
struct AbResistantPair {
  std::vector<long> S;
  std::vector<long> T;
  BigInt gammaB;  // |L([n], T, b)|
  BigInt sizeA;   // |L([n], S, a)|
  bool sentinel = false;
};
std::vector<AbResistantPair> ab_resistant_pairs(long n, long a, long b);

/// Cross-intersecting pair bound for A ⊂ C([n],a), B ⊂ C([n],b) with
/// |B| >= sizeB_lower. Inside the resistant range the sharp step bound
/// |L(S_l,a)| + weight |L(T_l,b)| applies (weight < (n-b-1)/(a-1));
/// beyond it the refinement branches with the -C(n-b-1,a-1)+1 correction
/// are selected, and the easy corollary values are exposed in the notes.
BoundReport bound_ab(long n, long a, long b, const BigInt& sizeB_lower, const Rational& weight = 1);

/// |F| + |G| <= C(n,b) + C(n-alpha, n-a) - C(n-alpha, b) for cross-intersecting
/// a- and b-uniform families with |F| >= C(n-alpha, n-a), real alpha >= 1.
BoundReport bound_ft(long n, long a, long b, const Rational& alpha);

/// The equality chain for the l-th resistant window (l >= 1): starting from
/// T_l, repeatedly adjoin 2|T| until the set reaches size k. These are
/// exactly the characteristic sets attaining the step bound with equality.
std::vector<CharSet> neutral_sets(long n, long k, std::size_t l);

/// The a-side partner strongly intersecting T in its largest element.
CharSet neutral_partner(const CharSet& T);

/// Telescoping count bounding the largest (k-1)-uniform family on [m]
/// cross-intersecting with a size-z minimal 2-cover family of s-sets.
BigInt lemmin_f(long m, long s, long k, long z);

/// The modified z = 3 count for covers with an overlap of size in [2, s-2].
BigInt lemmin_fprime3(long m, long s, long k);

/// Closed-form size of the covering-number-3 extremal family; equals
/// lemmin_f(n-1, k, k, 3) + 3 and must match the constructed family's count.
BigInt size_C3(long n, long k);

}  // namespace ifam
