#include "ifam/lex.hpp"

#include <algorithm>
#include <cmath>

namespace ifam {

namespace {

std::vector<long> sorted_unique(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_elem(const std::vector<long>& v, long e) {
  return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace

CharSet::CharSet(GroundSet g, std::vector<long> e) : ground(g), elems(sorted_unique(std::move(e))) {
  if (elems.empty()) throw std::domain_error("CharSet: empty characteristic set");
  for (long x : elems) {
    if (x < 1 || x > ground.hi) throw std::domain_error("CharSet: element out of range");
    if (x < ground.lo && x != 1) throw std::domain_error("CharSet: only the reserved element 1 may sit below the ground");
  }
}

bool CharSet::has(long e) const { return contains_elem(elems, e); }

long CharSet::max_elem() const { return elems.back(); }

std::vector<long> CharSet::effective() const {
  std::vector<long> out;
  for (long x : elems)
    if (ground.contains(x)) out.push_back(x);
  return out;
}

bool CharSet::is_empty_family_sentinel() const {
  return static_cast<long>(effective().size()) == ground.size();
}

SetFamily lex_family(const GroundSet& ground, const CharSet& S, int a) {
  if (a < 0) throw std::domain_error("lex_family: negative uniformity");
  auto eff = S.effective();
  if (static_cast<long>(eff.size()) > a && static_cast<long>(eff.size()) != ground.size())
    throw std::domain_error("lex_family: |S ∩ ground| exceeds the uniformity");
  SetFamily fam(ground, a);
  Bits128 p;
  for (long e : eff) p.set(ground.bit_of(e));
  for_each_ksubset(static_cast<int>(ground.size()), a, [&](const Bits128& A) {
    if (lex_compare(A, p) != Ordering::greater) fam.sets.push_back(A);
  });
  fam.normalize();
  return fam;
}

BigInt lex_size(const GroundSet& ground, const std::vector<long>& elems, long u) {
  if (u < 0) throw std::domain_error("lex_size: negative uniformity");
  std::vector<long> p;
  for (long x : sorted_unique(elems))
    if (ground.contains(x)) p.push_back(x);
  if (p.empty()) return binomial(ground.size(), u);
  if (static_cast<long>(p.size()) > u && static_cast<long>(p.size()) != ground.size())
    throw std::domain_error("lex_size: |T ∩ ground| exceeds the uniformity");
  long pmax = p.back();
  // Members grouped by the least element where they exit the prefix of T.
  BigInt total = 0;
  long prefix = 0;  // |T ∩ [lo, c-1]|
  for (long c = ground.lo; c <= pmax; ++c) {
    bool in_t = contains_elem(p, c);
    if (!in_t || c == pmax) total += binomial(ground.hi - c, u - (prefix + 1));
    if (in_t) ++prefix;
  }
  return total;
}

BigInt lex_size(const GroundSet& ground, const CharSet& T, long u) {
  return lex_size(ground, T.elems, u);
}

StrongIntersection strong_intersect_from(const std::vector<long>& S, const std::vector<long>& T,
                                         long interval_lo) {
  auto s = sorted_unique(S);
  auto t = sorted_unique(T);
  for (long j : s) {
    if (j < interval_lo || !contains_elem(t, j)) continue;
    bool ok = true;
    for (long x = interval_lo; x < j && ok; ++x) {
      if (contains_elem(s, x) && contains_elem(t, x)) ok = false;      // S∩T∩[lo,j] must be {j}
      if (!contains_elem(s, x) && !contains_elem(t, x)) ok = false;    // S∪T must cover [lo,j]
    }
    if (ok) return {true, j};
  }
  return {false, 0};
}

StrongIntersection strong_intersect(const CharSet& S, const CharSet& T) {
  return strong_intersect_from(S.elems, T.elems, 2);
}

MaxPairVerdict max_cross_pair(const CharSet& S, const CharSet& T, int a, int b) {
  if (S.ground.hi != T.ground.hi) throw std::domain_error("max_cross_pair: mismatched grounds");
  const GroundSet& g = T.ground;
  if (a + b > g.size()) throw std::domain_error("max_cross_pair: a + b exceeds the ground size");
  if (static_cast<long>(S.effective().size()) > a) throw std::domain_error("max_cross_pair: |S| > a");
  if (static_cast<long>(T.effective().size()) > b) throw std::domain_error("max_cross_pair: |T| > b");

  long start = g.lo == 1 ? 1 : 2;
  std::vector<long> uni = S.elems;
  uni.insert(uni.end(), T.elems.begin(), T.elems.end());
  uni = sorted_unique(uni);
  std::vector<long> uni_eff;
  for (long x : uni)
    if (x >= start) uni_eff.push_back(x);
  if (uni_eff.empty()) return {false, 0, "empty union"};
  long j = uni_eff.back();

  std::vector<long> inter;
  for (long x : S.elems)
    if (T.has(x)) inter.push_back(x);
  if (inter.size() != 1 || inter[0] != j) return {false, 0, "S∩T is not {max}"};
  if (static_cast<long>(uni_eff.size()) != j - start + 1)
    return {false, 0, "S∪T is not the initial interval"};
  return {true, j, ""};
}

CharPair make_char_pair(CharSet S, CharSet T, int a, int b) {
  long lo = std::min<long>(S.ground.lo == 1 ? 1 : 2, T.ground.lo == 1 ? 1 : 2);
  auto si = strong_intersect_from(S.elems, T.elems, lo);
  if (!si.ok) throw std::domain_error("CharPair: S and T do not strongly intersect");
  if (static_cast<long>(S.effective().size()) > a && !S.is_empty_family_sentinel())
    throw std::domain_error("CharPair: |S| > a");
  if (static_cast<long>(T.effective().size()) > b && !T.is_empty_family_sentinel())
    throw std::domain_error("CharPair: |T| > b");
  return {std::move(S), std::move(T), a, b};
}

namespace {

long count_in_prefix(const std::vector<long>& v, long i) {
  long c = 0;
  for (long x : v)
    if (x <= i) ++c;
  return c;
}

}  // namespace

std::optional<long> compress_trigger(const CharPair& pair) {
  long j = pair.T.max_elem();
  for (long i = 5; i <= j; ++i) {
    long in_s = count_in_prefix(pair.S.elems, i);
    if (in_s >= i - in_s) return i;
  }
  return std::nullopt;
}

CharPair compress_step(const CharPair& pair, long i) {
  if (!pair.S.has(1)) throw std::domain_error("compress_step: S must carry the reserved element 1");
  long j = pair.T.max_elem();
  long in_s = count_in_prefix(pair.S.elems, i);
  if (i < 5 || i > j || in_s < i - in_s)
    throw std::domain_error("compress_step: trigger condition not met at i=" + std::to_string(i));

  std::vector<long> t_new;
  for (long x = 2; x <= i; ++x)
    if (!pair.S.has(x)) t_new.push_back(x);
  if (t_new.empty()) throw std::domain_error("compress_step: [i] \\ S is empty");
  long j2 = t_new.back();
  std::vector<long> s_new{1};
  for (long x = 2; x < j2; ++x)
    if (!contains_elem(t_new, x)) s_new.push_back(x);
  s_new.push_back(j2);
  return make_char_pair(CharSet(pair.S.ground, s_new), CharSet(pair.T.ground, t_new), pair.a, pair.b);
}

CharPair compress_fully(const CharPair& pair) {
  CharPair cur = pair;
  while (auto i = compress_trigger(cur)) cur = compress_step(cur, *i);
  return cur;
}

SetFamily shadow(const SetFamily& F) {
  if (F.k < 1) {
    if (F.sets.empty()) return SetFamily(F.ground, 0);
    throw std::domain_error("shadow: uniformity must be >= 1");
  }
  SetFamily out(F.ground, F.k - 1);
  for (const auto& s : F.sets) {
    s.for_each([&](int bit) {
      Bits128 t = s;
      t.reset(bit);
      out.sets.push_back(t);
    });
  }
  out.normalize();
  return out;
}

BigInt shadow_lower_bound(const BigInt& size, long k, ShadowForm form) {
  if (size < 0) throw std::domain_error("shadow_lower_bound: negative size");
  if (size == 0) return 0;
  if (k < 1) throw std::domain_error("shadow_lower_bound: k must be >= 1");
  if (form == ShadowForm::cascade) {
    BigInt total = 0;
    for (const auto& t : cascade(size, k)) total += binomial(t.upper, t.lower - 1);
    return total;
  }
  // Lovász form. Prefer an exact integer root when one exists.
  if (!size.fits_slong_p())
    throw std::domain_error("shadow_lower_bound: size too large for the lovasz form");
  double target = size.get_d();
  double hi = static_cast<double>(k);
  while (binomial_real(hi, k) < target) hi *= 2.0;
  double lo = static_cast<double>(k) - 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (binomial_real(mid, k) <= target)
      lo = mid;
    else
      hi = mid;
  }
  long near = std::lround(lo);
  if (near >= k && binomial(near, k) == size) return binomial(near, k - 1);
  double v = binomial_real(lo, k - 1);
  BigInt out(std::floor(v));
  return out < 0 ? BigInt(0) : out;
}

}  // namespace ifam
