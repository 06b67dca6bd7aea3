#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ifam/bigint.hpp"

namespace ifam {

/// Closed interval [lo, hi] of 1-indexed element labels.
///
/// Formula-only code may use arbitrarily large intervals; bitset-backed
/// families are capped at 128 elements (enforced by SetFamily).
struct GroundSet {
  long lo = 1;
  long hi = 1;

  GroundSet() = default;
  GroundSet(long lo_, long hi_);

  long size() const { return hi - lo + 1; }
  bool contains(long e) const { return lo <= e && e <= hi; }
  int bit_of(long e) const;  // 0-indexed position of element e
  long element_of(int bit) const { return lo + bit; }

  bool operator==(const GroundSet&) const = default;
};

/// Fixed-width 128-bit set. Bit i holds element ground.lo + i.
struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;

  bool test(int i) const { return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1u) != 0; }
  void set(int i) { (i < 64 ? w0 : w1) |= (1ULL << (i & 63)); }
  void reset(int i) { (i < 64 ? w0 : w1) &= ~(1ULL << (i & 63)); }
  int count() const { return __builtin_popcountll(w0) + __builtin_popcountll(w1); }
  bool any() const { return (w0 | w1) != 0; }
  bool none() const { return !any(); }
  bool intersects(const Bits128& o) const { return ((w0 & o.w0) | (w1 & o.w1)) != 0; }
  bool subset_of(const Bits128& o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }
  int lowest() const;  // index of lowest set bit; -1 when empty
  int highest() const; // index of highest set bit; -1 when empty

  Bits128 operator&(const Bits128& o) const { return {w0 & o.w0, w1 & o.w1}; }
  Bits128 operator|(const Bits128& o) const { return {w0 | o.w0, w1 | o.w1}; }
  Bits128 operator^(const Bits128& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
  Bits128 minus(const Bits128& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  bool operator==(const Bits128&) const = default;

  // Word order; unrelated to the set-theoretic lex order below.
  bool numeric_less(const Bits128& o) const { return w1 != o.w1 ? w1 < o.w1 : w0 < o.w0; }

  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t a = w0;
    while (a) { int i = __builtin_ctzll(a); f(i); a &= a - 1; }
    std::uint64_t b = w1;
    while (b) { int i = __builtin_ctzll(b); f(i + 64); b &= b - 1; }
  }
};

enum class Ordering { less, equal, greater };

/// Containment-extended lex order: A comes before B iff A ⊋ B or the least
/// element of A\B is smaller than the least element of B\A. On equal-size
/// sets this is the plain lex order.
Ordering lex_compare(const Bits128& a, const Bits128& b);

inline bool lex_less(const Bits128& a, const Bits128& b) { return lex_compare(a, b) == Ordering::less; }

/// Uniform family of k-subsets of a ground interval, bitset-backed.
/// Members are distinct and kept in lex order.
struct SetFamily {
  GroundSet ground;
  int k = 0;
  std::vector<Bits128> sets;

  SetFamily() = default;
  SetFamily(GroundSet g, int k_);

  long size() const { return static_cast<long>(sets.size()); }
  bool contains(const Bits128& s) const;
  void add(const Bits128& s);        // validates size-k and ground fit; ignores duplicates
  void add_elements(const std::vector<long>& elems);
  void normalize();                  // sort into lex order, drop duplicates

  std::vector<long> elements_of(const Bits128& s) const;
  std::vector<std::vector<long>> all_elements() const;
  Bits128 bits_of(const std::vector<long>& elems) const;
  Bits128 universe() const;          // all ground bits set

  bool operator==(const SetFamily&) const = default;
};

/// One term C(upper, lower) of a cascade representation.
struct CascadeTerm {
  long upper = 0;
  long lower = 0;
  bool operator==(const CascadeTerm&) const = default;
};

/// Greedy r-cascade of m >= 0: m = C(a_r, r) + C(a_{r-1}, r-1) + ... with
/// strictly decreasing upper indices and consecutive lower indices.
/// The empty list represents 0. The representation is unique.
std::vector<CascadeTerm> cascade(const BigInt& m, long r);
BigInt cascade_sum(const std::vector<CascadeTerm>& terms);

/// Rank of a k-subset (bit positions) in the lex order on k-subsets of an
/// N-element ground, and its inverse. Ranks are 0-based.
BigInt subset_rank(const Bits128& s, int N, int k);
Bits128 subset_unrank(const BigInt& rank, int N, int k);

/// First m k-subsets of the ground in lex order, built by unranking.
SetFamily lex_initial(const GroundSet& ground, const BigInt& m, int k);

/// Visit all k-subsets of [0, N) in lex order (ascending index tuples).
void for_each_ksubset(int N, int k, const std::function<void(const Bits128&)>& f);

}  // namespace ifam
