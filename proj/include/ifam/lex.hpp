#pragma once

#include <optional>
#include <vector>

#include "ifam/core.hpp"

namespace ifam {

/// Characteristic set of a lex family on a ground interval.
///
/// Elements normally lie inside the ground. The reserved element 1 may appear
/// below a ground starting at 2; it marks the set as the side whose family
/// sits over the full [n] with 1 adjoined, and is ignored when intersecting
/// with the ground.
struct CharSet {
  GroundSet ground;
  std::vector<long> elems;  // sorted ascending, distinct

  CharSet() = default;
  CharSet(GroundSet g, std::vector<long> e);

  bool has(long e) const;
  long max_elem() const;  // requires nonempty
  std::vector<long> effective() const;  // elems ∩ ground
  bool is_empty_family_sentinel() const;  // effective() == whole ground
};

/// L(ground, S, a): all a-subsets A of the ground with A ≼ S∩ground in the
/// containment-extended lex order. Built by explicit filtering; always equals
/// a lex_initial prefix of the same length.
SetFamily lex_family(const GroundSet& ground, const CharSet& S, int a);

/// |L(ground, T, u)| in closed form via the stopping-element walk: group the
/// members A ≼ P (P = T∩ground) by the least element at which A exits P.
/// Works for grounds of any width.
BigInt lex_size(const GroundSet& ground, const CharSet& T, long u);
BigInt lex_size(const GroundSet& ground, const std::vector<long>& elems, long u);

struct StrongIntersection {
  bool ok = false;
  long j = 0;  // witness: S∩T∩[2,j] = {j} and S∪T ⊇ [2,j]
};

/// Strong intersection over the interval [2, j], as used on ground [2,n].
StrongIntersection strong_intersect(const CharSet& S, const CharSet& T);

/// Variant with a configurable interval start (1 for families on [1,n]).
StrongIntersection strong_intersect_from(const std::vector<long>& S, const std::vector<long>& T,
                                         long interval_lo);

struct MaxPairVerdict {
  bool maximal = false;
  long j = 0;
  std::string reason;
};

/// Whether (L(S,a), L(T,b)) is a maximal cross-intersecting pair: S and T
/// must strongly intersect in their largest element, i.e. S∩T = {j} and
/// S∪T = [2,j] (with the reserved 1 adjoined when S carries it, or [1,j]
/// on grounds starting at 1).
MaxPairVerdict max_cross_pair(const CharSet& S, const CharSet& T, int a, int b);

/// A lex cross-intersecting pair: S the a-side characteristic set (carries
/// the reserved element 1 on grounds starting at 2), T the b-side.
struct CharPair {
  CharSet S;
  CharSet T;
  int a = 0;
  int b = 0;
};

/// Validates the strong-intersection invariant and the size caps.
CharPair make_char_pair(CharSet S, CharSet T, int a, int b);

/// Smallest index i in [5, max T] at which the pair stops being resistant,
/// i.e. |[i]∩S| >= |[i]\S|. nullopt when no index triggers.
std::optional<long> compress_trigger(const CharPair& pair);

/// One bipartite exchange step at index i: T' = [i]\S, and S' chosen to
/// strongly intersect T' in its largest element. Requires the trigger
/// condition at i. The new pair satisfies |L(S',a)|+|L(T',b)| >= the old sum
/// and |L(T',b)| > |L(T,b)|.
CharPair compress_step(const CharPair& pair, long i);

/// Iterated compress_step at the smallest triggering index until none fires.
CharPair compress_fully(const CharPair& pair);

/// All (k-1)-subsets contained in some member.
SetFamily shadow(const SetFamily& F);

enum class ShadowForm { cascade, lovasz };

/// Lower bound on |∂F| for a k-uniform family of the given size.
/// cascade: sum of C(a_j, j-1) over the k-cascade of the size.
/// lovasz: C(x, k-1) for the real x >= k with C(x, k) = size, found by
/// monotone bisection and rounded down conservatively.
BigInt shadow_lower_bound(const BigInt& size, long k, ShadowForm form);

}  // namespace ifam
