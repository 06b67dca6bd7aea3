#include "ifam/core.hpp"

#include <algorithm>

namespace ifam {

GroundSet::GroundSet(long lo_, long hi_) : lo(lo_), hi(hi_) {
  if (lo < 1) throw std::domain_error("GroundSet: lo must be >= 1");
  if (lo > hi) throw std::domain_error("GroundSet: lo > hi");
}

int GroundSet::bit_of(long e) const {
  if (!contains(e)) throw std::domain_error("GroundSet: element " + std::to_string(e) + " out of range");
  return static_cast<int>(e - lo);
}

int Bits128::lowest() const {
  if (w0) return __builtin_ctzll(w0);
  if (w1) return 64 + __builtin_ctzll(w1);
  return -1;
}

int Bits128::highest() const {
  if (w1) return 127 - __builtin_clzll(w1);
  if (w0) return 63 - __builtin_clzll(w0);
  return -1;
}

Ordering lex_compare(const Bits128& a, const Bits128& b) {
  Bits128 aOnly = a.minus(b);
  Bits128 bOnly = b.minus(a);
  if (aOnly.none() && bOnly.none()) return Ordering::equal;
  if (bOnly.none()) return Ordering::less;     // a ⊋ b
  if (aOnly.none()) return Ordering::greater;  // b ⊋ a
  return aOnly.lowest() < bOnly.lowest() ? Ordering::less : Ordering::greater;
}

SetFamily::SetFamily(GroundSet g, int k_) : ground(g), k(k_) {
  if (k_ < 0) throw std::domain_error("SetFamily: negative uniformity");
  if (g.size() > 128) throw std::domain_error("SetFamily: ground wider than 128 elements");
}

bool SetFamily::contains(const Bits128& s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s, lex_less);
  return it != sets.end() && *it == s;
}

void SetFamily::add(const Bits128& s) {
  if (s.count() != k) throw std::domain_error("SetFamily: member size != k");
  int width = static_cast<int>(ground.size());
  int hi = s.highest();
  if (hi >= width) throw std::domain_error("SetFamily: member outside ground");
  auto it = std::lower_bound(sets.begin(), sets.end(), s, lex_less);
  if (it != sets.end() && *it == s) return;
  sets.insert(it, s);
}

void SetFamily::add_elements(const std::vector<long>& elems) {
  Bits128 s;
  for (long e : elems) s.set(ground.bit_of(e));
  if (s.count() != static_cast<int>(elems.size()))
    throw std::domain_error("SetFamily: duplicate element in member");
  add(s);
}

void SetFamily::normalize() {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<long> SetFamily::elements_of(const Bits128& s) const {
  std::vector<long> out;
  s.for_each([&](int i) { out.push_back(ground.element_of(i)); });
  return out;
}

std::vector<std::vector<long>> SetFamily::all_elements() const {
  std::vector<std::vector<long>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(elements_of(s));
  return out;
}

Bits128 SetFamily::bits_of(const std::vector<long>& elems) const {
  Bits128 s;
  for (long e : elems) s.set(ground.bit_of(e));
  return s;
}

Bits128 SetFamily::universe() const {
  Bits128 u;
  for (int i = 0; i < ground.size(); ++i) u.set(i);
  return u;
}

std::vector<CascadeTerm> cascade(const BigInt& m, long r) {
  if (m < 0) throw std::domain_error("cascade: negative value");
  if (r < 1) throw std::domain_error("cascade: top index must be >= 1");
  std::vector<CascadeTerm> terms;
  BigInt rem = m;
  for (long j = r; j >= 1 && rem > 0; --j) {
    // largest a with C(a, j) <= rem
    long a = j;
    BigInt cur = 1;  // C(j, j)
    while (true) {
      // C(a+1, j) = C(a, j) * (a+1) / (a+1-j)
      BigInt next = cur * (a + 1) / (a + 1 - j);
      if (next > rem) break;
      cur = next;
      ++a;
    }
    terms.push_back({a, j});
    rem -= cur;
  }
  if (rem != 0) throw std::logic_error("cascade: nonzero remainder");
  return terms;
}

BigInt cascade_sum(const std::vector<CascadeTerm>& terms) {
  BigInt s = 0;
  for (const auto& t : terms) s += binomial(t.upper, t.lower);
  return s;
}

BigInt subset_rank(const Bits128& s, int N, int k) {
  std::vector<int> pos;
  s.for_each([&](int i) { pos.push_back(i); });
  if (static_cast<int>(pos.size()) != k) throw std::domain_error("subset_rank: size != k");
  BigInt r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < pos[i]; ++v) r += binomial(N - 1 - v, k - 1 - i);
    prev = pos[i];
  }
  return r;
}

Bits128 subset_unrank(const BigInt& rank, int N, int k) {
  if (rank < 0 || rank >= binomial(N, k)) throw std::domain_error("subset_unrank: rank out of range");
  Bits128 s;
  BigInt rem = rank;
  int v = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      BigInt block = binomial(N - 1 - v, k - 1 - i);
      if (rem < block) break;
      rem -= block;
      ++v;
    }
    s.set(v);
    ++v;
  }
  return s;
}

SetFamily lex_initial(const GroundSet& ground, const BigInt& m, int k) {
  if (m < 0 || m > binomial(ground.size(), k))
    throw std::domain_error("lex_initial: m out of range");
  SetFamily fam(ground, k);
  int N = static_cast<int>(ground.size());
  for (BigInt i = 0; i < m; ++i) fam.sets.push_back(subset_unrank(i, N, k));
  return fam;
}

void for_each_ksubset(int N, int k, const std::function<void(const Bits128&)>& f) {
  if (k < 0 || k > N) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Bits128 s;
    for (int i : idx) s.set(i);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == N - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ifam
