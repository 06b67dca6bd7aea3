#include "ifam/zoo.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ifam {

namespace {

Bits128 interval_mask(const GroundSet& g, long lo, long hi) {
  Bits128 m;
  for (long e = std::max(lo, g.lo); e <= std::min(hi, g.hi); ++e) m.set(g.bit_of(e));
  return m;
}

Bits128 family_union(const SetFamily& F) {
  Bits128 u;
  for (const auto& s : F.sets) u = u | s;
  return u;
}

}  // namespace

bool is_intersecting(const SetFamily& F) {
  for (std::size_t i = 0; i < F.sets.size(); ++i)
    for (std::size_t j = i + 1; j < F.sets.size(); ++j)
      if (!F.sets[i].intersects(F.sets[j])) return false;
  return true;
}

// --- Constructions ----------------------------------------------------------

SetFamily build_Hu(long n, long k, long u) {
  if (!(2 <= u && u <= k && n >= 2 * k)) throw std::domain_error("build_Hu: requires 2 <= u <= k, n >= 2k");
  GroundSet g(1, n);
  SetFamily fam(g, static_cast<int>(k));
  Bits128 core = interval_mask(g, 2, u + 1);
  int one = g.bit_of(1);
  for_each_ksubset(static_cast<int>(n), static_cast<int>(k), [&](const Bits128& A) {
    if (core.subset_of(A) || (A.test(one) && A.intersects(core))) fam.sets.push_back(A);
  });
  fam.normalize();
  return fam;
}

SetFamily build_Ji(long n, long k, long i) {
  if (!(1 <= i && i <= k && n >= 2 * k && n >= k + i))
    throw std::domain_error("build_Ji: requires 1 <= i <= k, n >= max(2k, k+i)");
  GroundSet g(1, n);
  SetFamily fam(g, static_cast<int>(k));
  Bits128 I1 = interval_mask(g, 2, k + 1);
  Bits128 Ii = interval_mask(g, i + 1, k + i);
  int one = g.bit_of(1);
  for_each_ksubset(static_cast<int>(n), static_cast<int>(k), [&](const Bits128& A) {
    if (A == I1 || A == Ii || (A.test(one) && A.intersects(I1) && A.intersects(Ii)))
      fam.sets.push_back(A);
  });
  fam.normalize();
  return fam;
}

SetFamily build_El(long n, long k, long l) {
  if (!(1 <= l && l <= n - k && n > 2 * k)) throw std::domain_error("build_El: requires 1 <= l <= n-k, n > 2k");
  GroundSet g(1, n);
  SetFamily M(g, static_cast<int>(k));
  for (long x = k + 1; x <= k + l; ++x) {
    std::vector<long> elems;
    for (long e = 2; e <= k; ++e) elems.push_back(e);
    elems.push_back(x);
    M.add_elements(elems);
  }
  return maximal_extension(M, n, k);
}

SetFamily build_T2(long k, long n) {
  if (n == 0) n = 2 * k - 1;
  if (!(k >= 2 && n >= 2 * k - 1)) throw std::domain_error("build_T2: requires k >= 2, n >= 2k-1");
  GroundSet g(1, n);
  SetFamily fam(g, static_cast<int>(k));
  std::vector<long> a, b{1}, c{2};
  for (long e = 1; e <= k; ++e) a.push_back(e);
  for (long e = k + 1; e <= 2 * k - 1; ++e) { b.push_back(e); c.push_back(e); }
  fam.add_elements(a);
  fam.add_elements(b);
  fam.add_elements(c);
  return fam;
}

SetFamily build_T2prime(long s, long m) {
  if (m == 0) m = 2 * s;
  if (!(s >= 1 && m >= 2 * s)) throw std::domain_error("build_T2prime: requires s >= 1, m >= 2s");
  GroundSet g(1, m);
  SetFamily fam(g, static_cast<int>(s));
  std::vector<long> a, b;
  for (long e = 1; e <= s; ++e) a.push_back(e);
  for (long e = s + 1; e <= 2 * s; ++e) b.push_back(e);
  fam.add_elements(a);
  fam.add_elements(b);
  return fam;
}

namespace {

SetFamily max_cross_partner(const SetFamily& H, long m, long k) {
  // Largest (k-1)-uniform family on [1, m] whose members meet every H-member.
  GroundSet g(1, m);
  SetFamily out(g, static_cast<int>(k - 1));
  std::vector<Bits128> targets;
  for (const auto& h : H.sets) {
    Bits128 t;
    for (long e : H.elements_of(h)) t.set(g.bit_of(e));
    targets.push_back(t);
  }
  for_each_ksubset(static_cast<int>(m), static_cast<int>(k - 1), [&](const Bits128& A) {
    for (const auto& t : targets)
      if (!A.intersects(t)) return;
    out.sets.push_back(A);
  });
  out.normalize();
  return out;
}

}  // namespace

SetFamily build_F2(long m, long s, long k) {
  if (!(k >= 2 && s >= 2 && m >= 2 * s - 1 && m >= k - 1))
    throw std::domain_error("build_F2: parameter domain violation");
  return max_cross_partner(build_T2(s, 2 * s - 1), m, k);
}

SetFamily build_F2prime(long m, long s, long k) {
  if (!(k >= 2 && s >= 1 && m >= 2 * s && m >= k - 1))
    throw std::domain_error("build_F2prime: parameter domain violation");
  return max_cross_partner(build_T2prime(s, 2 * s), m, k);
}

SetFamily build_C3(long n, long k) {
  if (!(k >= 3 && n >= 2 * k + 1)) throw std::domain_error("build_C3: requires k >= 3, n >= 2k+1");
  GroundSet g(1, n);
  SetFamily M(g, static_cast<int>(k));
  std::vector<long> a, b{2}, c{3};
  for (long e = 2; e <= k + 1; ++e) a.push_back(e);
  for (long e = k + 2; e <= 2 * k; ++e) { b.push_back(e); c.push_back(e); }
  M.add_elements(a);
  M.add_elements(b);
  M.add_elements(c);
  return maximal_extension(M, n, k);
}

SetFamily build_fano(long n) {
  if (n < 7) throw std::domain_error("build_fano: requires n >= 7");
  GroundSet g(1, n);
  SetFamily fam(g, 3);
  const long lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                            {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  for (const auto& L : lines) fam.add_elements({L[0], L[1], L[2]});
  return fam;
}

SetFamily build_D37(long n, long k) {
  if (!(k >= 3 && n >= 7 && n >= k)) throw std::domain_error("build_D37: requires k >= 3, n >= 7");
  GroundSet g(1, n);
  SetFamily fano = build_fano(n);
  SetFamily fam(g, static_cast<int>(k));
  for_each_ksubset(static_cast<int>(n), static_cast<int>(k), [&](const Bits128& A) {
    for (const auto& L : fano.sets)
      if (L.subset_of(A)) { fam.sets.push_back(A); return; }
  });
  fam.normalize();
  return fam;
}

// --- Operations -------------------------------------------------------------

SetFamily restrict_family(const SetFamily& F, long i, RestrictMode mode) {
  int bit = F.ground.bit_of(i);
  SetFamily out(F.ground, mode == RestrictMode::contains ? F.k - 1 : F.k);
  for (const auto& s : F.sets) {
    if (mode == RestrictMode::contains) {
      if (s.test(bit)) {
        Bits128 t = s;
        t.reset(bit);
        out.sets.push_back(t);
      }
    } else if (!s.test(bit)) {
      out.sets.push_back(s);
    }
  }
  out.normalize();
  return out;
}

namespace {

struct CoverSearch {
  const std::vector<Bits128>* sets;
  std::vector<int> active;                  // active element bits
  std::vector<std::vector<uint64_t>> covers;  // per active element: member bitvector
  std::size_t words;
  long best;
  long nodes = 0;

  static bool all_ones(const std::vector<uint64_t>& v, const std::vector<uint64_t>& mask) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((v[i] & mask[i]) != mask[i]) return false;
    return true;
  }

  long disjoint_lower_bound(const std::vector<uint64_t>& covered) const {
    // Greedy pairwise-disjoint uncovered members; any hitting set needs one
    // element per member collected.
    long lb = 0;
    Bits128 used;
    for (std::size_t idx = 0; idx < sets->size(); ++idx) {
      if ((covered[idx >> 6] >> (idx & 63)) & 1) continue;
      if (!(*sets)[idx].intersects(used)) {
        used = used | (*sets)[idx];
        ++lb;
      }
    }
    return lb;
  }

  void run(std::vector<uint64_t>& covered, long chosen, std::size_t ncovered) {
    if (++nodes > 20'000'000) throw std::domain_error("covering_number: search budget exceeded");
    if (ncovered == sets->size()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + disjoint_lower_bound(covered) >= best) return;
    // first uncovered member, canonical order
    std::size_t pick = 0;
    while ((covered[pick >> 6] >> (pick & 63)) & 1) ++pick;
    std::vector<int> elems;
    (*sets)[pick].for_each([&](int b) { elems.push_back(b); });
    for (int b : elems) {
      auto pos = std::lower_bound(active.begin(), active.end(), b) - active.begin();
      const auto& cov = covers[pos];
      std::vector<uint64_t> nxt(words);
      std::size_t cnt = 0;
      for (std::size_t w = 0; w < words; ++w) {
        nxt[w] = covered[w] | cov[w];
        cnt += static_cast<std::size_t>(__builtin_popcountll(nxt[w]));
      }
      run(nxt, chosen + 1, cnt);
    }
  }
};

}  // namespace

long covering_number(const SetFamily& F) {
  if (F.sets.empty()) return 0;
  CoverSearch cs;
  cs.sets = &F.sets;
  family_union(F).for_each([&](int b) { cs.active.push_back(b); });
  cs.words = (F.sets.size() + 63) / 64;
  cs.covers.assign(cs.active.size(), std::vector<uint64_t>(cs.words, 0));
  for (std::size_t i = 0; i < cs.active.size(); ++i)
    for (std::size_t j = 0; j < F.sets.size(); ++j)
      if (F.sets[j].test(cs.active[i])) cs.covers[i][j >> 6] |= 1ULL << (j & 63);
  // greedy upper bound
  {
    std::vector<uint64_t> covered(cs.words, 0);
    std::size_t ncov = 0;
    long ub = 0;
    while (ncov < F.sets.size()) {
      std::size_t besti = 0, bestgain = 0;
      for (std::size_t i = 0; i < cs.active.size(); ++i) {
        std::size_t gain = 0;
        for (std::size_t w = 0; w < cs.words; ++w)
          gain += static_cast<std::size_t>(__builtin_popcountll(cs.covers[i][w] & ~covered[w]));
        if (gain > bestgain) { bestgain = gain; besti = i; }
      }
      for (std::size_t w = 0; w < cs.words; ++w) covered[w] |= cs.covers[besti][w];
      ncov += bestgain;
      ++ub;
    }
    cs.best = ub;
  }
  std::vector<uint64_t> covered(cs.words, 0);
  cs.run(covered, 0, 0);
  return cs.best;
}

Rational fractional_covering(const SetFamily& F) {
  if (F.sets.empty()) return 0;
  std::vector<int> active;
  family_union(F).for_each([&](int b) { active.push_back(b); });
  std::size_t t = active.size();
  if (t > 12) throw std::domain_error("fractional_covering: more than 12 active elements");
  std::size_t m = F.sets.size();

  // Matching dual: maximize sum x_j subject to, per element, sum over members
  // through it of x_j <= 1. Exact-rational tableau simplex with Bland's rule;
  // the slack basis is feasible so a single phase suffices.
  std::size_t cols = m + t;
  std::vector<std::vector<Rational>> tab(t, std::vector<Rational>(cols + 1, 0));
  std::vector<Rational> obj(cols + 1, 0);  // reduced-cost row; obj[cols] = -value
  std::vector<std::size_t> basis(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (F.sets[j].test(active[i])) tab[i][j] = 1;
    tab[i][m + i] = 1;
    tab[i][cols] = 1;
    basis[i] = m + i;
  }
  for (std::size_t j = 0; j < m; ++j) obj[j] = 1;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] > 0) { enter = j; break; }  // Bland: smallest improving index
    if (enter == cols) break;
    std::size_t leave = t;
    Rational best_ratio;
    for (std::size_t i = 0; i < t; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      ratio.canonicalize();
      if (leave == t || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == t) throw std::logic_error("fractional_covering: unbounded dual");
    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < t; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  Rational value = -obj[cols];
  value.canonicalize();
  return value;
}

SetFamily shift(const SetFamily& F, long i, long j) {
  if (i >= j) throw std::domain_error("shift: requires i < j");
  int bi = F.ground.bit_of(i), bj = F.ground.bit_of(j);
  SetFamily out(F.ground, F.k);
  for (const auto& A : F.sets) {
    if (A.test(bj) && !A.test(bi)) {
      Bits128 B = A;
      B.reset(bj);
      B.set(bi);
      out.sets.push_back(F.contains(B) ? A : B);
    } else {
      out.sets.push_back(A);
    }
  }
  out.normalize();
  if (out.size() != F.size()) throw std::logic_error("shift: size changed");
  return out;
}

MinimalVerdict minimal_common_intersection(const SetFamily& M) {
  if (M.sets.empty()) throw std::domain_error("minimal_common_intersection: empty family");
  Bits128 common = M.universe();
  for (const auto& s : M.sets) common = common & s;
  MinimalVerdict v;
  v.t = common.count();
  v.minimal = true;
  for (std::size_t l = 0; l < M.sets.size(); ++l) {
    Bits128 rest = M.universe();
    for (std::size_t j = 0; j < M.sets.size(); ++j)
      if (j != l) rest = rest & M.sets[j];
    Bits128 extra = rest.minus(common);
    if (extra.none()) {
      v.minimal = false;
      v.witnesses.clear();
      return v;
    }
    v.witnesses.push_back(M.ground.element_of(extra.lowest()));
  }
  return v;
}

bool is_minimal_tau2(const SetFamily& H) {
  if (H.sets.size() < 2) return false;
  if (covering_number(H) != 2) return false;
  for (std::size_t l = 0; l < H.sets.size(); ++l) {
    Bits128 rest = H.universe();
    for (std::size_t j = 0; j < H.sets.size(); ++j)
      if (j != l) rest = rest & H.sets[j];
    if (rest.none()) return false;
  }
  return true;
}

SetFamily maximal_extension(const SetFamily& M, long n, long k) {
  if (M.k != k) throw std::domain_error("maximal_extension: uniformity mismatch");
  if (!is_intersecting(M)) throw std::domain_error("maximal_extension: M is not intersecting");
  GroundSet g(1, n);
  SetFamily out(g, static_cast<int>(k));
  std::vector<Bits128> targets;
  for (const auto& s : M.sets) {
    std::vector<long> elems = M.elements_of(s);
    for (long e : elems)
      if (e == 1) throw std::domain_error("maximal_extension: M must avoid element 1");
    Bits128 t;
    for (long e : elems) t.set(g.bit_of(e));
    targets.push_back(t);
    out.sets.push_back(t);
  }
  // sets through 1 meeting every member of M
  for_each_ksubset(static_cast<int>(n - 1), static_cast<int>(k - 1), [&](const Bits128& body) {
    Bits128 A;
    A.set(g.bit_of(1));
    body.for_each([&](int b) { A.set(b + 1); });
    for (const auto& t : targets)
      if (!A.intersects(t)) return;
    out.sets.push_back(A);
  });
  out.normalize();
  return out;
}

std::pair<BoundReport, BoundReport> bound_class2(long n, long k, const SetFamily& M, long t) {
  if (!(n > 2 * k && k >= 4)) throw std::domain_error("bound_class2: requires n > 2k >= 8");
  auto verdict = minimal_common_intersection(M);
  if (!verdict.minimal) throw std::domain_error("bound_class2: M is not minimal w.r.t. common intersection");
  if (verdict.t != t) throw std::domain_error("bound_class2: stated t does not match M");
  if (t < 3) throw std::domain_error("bound_class2: requires t >= 3");
  SetFamily ext = maximal_extension(M, n, k);
  BoundReport r1;
  r1.theorem = "class2-extension";
  r1.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"t", std::to_string(t)}};
  r1.value = Rational(BigInt(ext.size()));
  r1.notes["witness_family"] = family_to_json(ext);

  SetFamily ji = build_Ji(n, k, k - t + 1);
  BoundReport r2;
  r2.theorem = "class2-ji";
  r2.inputs = r1.inputs;
  r2.inputs["i"] = std::to_string(k - t + 1);
  r2.value = Rational(BigInt(ji.size()));
  r2.notes["witness_family"] = family_to_json(ji);
  return {r1, r2};
}

FamilyStats family_stats(const SetFamily& F) {
  FamilyStats st;
  st.size = BigInt(F.size());
  st.max_degree = 0;
  st.max_degree_element = F.ground.lo;
  Bits128 uni = family_union(F);
  for (int b = 0; b < F.ground.size(); ++b) {
    long d = 0;
    for (const auto& s : F.sets)
      if (s.test(b)) ++d;
    if (BigInt(d) > st.max_degree) {
      st.max_degree = d;
      st.max_degree_element = F.ground.element_of(b);
    }
  }
  st.diversity = st.size - st.max_degree;
  st.covering_number = covering_number(F);
  if (uni.count() <= 12 && !F.sets.empty()) st.fractional_covering = fractional_covering(F);
  st.is_intersecting = is_intersecting(F);
  Bits128 common = F.universe();
  for (const auto& s : F.sets) common = common & s;
  st.is_trivial = F.sets.empty() || common.any();
  return st;
}

// --- Canonical forms --------------------------------------------------------

namespace {

std::vector<Bits128> encode_with_labels(const std::vector<Bits128>& members,
                                        const std::vector<int>& label_of_local) {
  std::vector<Bits128> out;
  out.reserve(members.size());
  for (const auto& mset : members) {
    Bits128 r;
    mset.for_each([&](int b) { r.set(label_of_local[b]); });
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Bits128& a, const Bits128& b) { return a.numeric_less(b); });
  return out;
}

bool code_less(const std::vector<Bits128>& a, const std::vector<Bits128>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].numeric_less(b[i])) return true;
    if (b[i].numeric_less(a[i])) return false;
  }
  return a.size() < b.size();
}

}  // namespace

CanonicalForm canonical_form(const SetFamily& F, int max_active, long perm_budget) {
  CanonicalForm out;
  std::vector<int> active;
  family_union(F).for_each([&](int b) { active.push_back(b); });
  int t = static_cast<int>(active.size());
  out.active = t;

  // local index per active bit
  std::vector<int> local_of_bit(128, -1);
  for (int i = 0; i < t; ++i) local_of_bit[active[i]] = i;
  std::vector<Bits128> members;
  for (const auto& s : F.sets) {
    Bits128 m;
    s.for_each([&](int b) { m.set(local_of_bit[b]); });
    members.push_back(m);
  }

  if (t > max_active) {
    std::vector<int> identity(t);
    std::iota(identity.begin(), identity.end(), 0);
    out.code = encode_with_labels(members, identity);
    out.exact = false;
    return out;
  }

  // invariant refinement of element colors
  std::vector<long> color(t, 0);
  for (int e = 0; e < t; ++e)
    for (const auto& m : members)
      if (m.test(e)) ++color[e];
  while (true) {
    std::map<std::vector<long>, std::vector<int>> groups;
    for (int e = 0; e < t; ++e) {
      std::vector<long> sig{color[e]};
      std::vector<std::vector<long>> rows;
      for (const auto& m : members) {
        if (!m.test(e)) continue;
        std::vector<long> row;
        m.for_each([&](int x) { row.push_back(color[x]); });
        std::sort(row.begin(), row.end());
        rows.push_back(row);
      }
      std::sort(rows.begin(), rows.end());
      for (const auto& row : rows) {
        sig.push_back(-1);
        sig.insert(sig.end(), row.begin(), row.end());
      }
      groups[sig].push_back(e);
    }
    std::vector<long> next(t);
    long id = 0;
    for (const auto& [sig, elems] : groups) {
      for (int e : elems) next[e] = id;
      ++id;
    }
    if (next == color) break;
    color = next;
  }

  // classes in color order; labels assigned blockwise
  std::map<long, std::vector<int>> classes;
  for (int e = 0; e < t; ++e) classes[color[e]].push_back(e);
  long perms = 1;
  for (const auto& [c, elems] : classes) {
    for (std::size_t i = 2; i <= elems.size() && perms <= perm_budget; ++i) perms *= static_cast<long>(i);
    if (perms > perm_budget) break;
  }
  if (perms > perm_budget) {
    std::vector<int> label(t);
    int next_label = 0;
    for (const auto& [c, elems] : classes)
      for (int e : elems) label[e] = next_label++;
    out.code = encode_with_labels(members, label);
    out.exact = false;
    return out;
  }

  std::vector<std::vector<int>> blocks;
  for (const auto& [c, elems] : classes) blocks.push_back(elems);
  std::vector<Bits128> best;
  bool have = false;
  std::vector<int> label(t, 0);
  // odometer over per-class permutations
  std::vector<std::vector<int>> perm = blocks;
  while (true) {
    int next_label2 = 0;
    for (const auto& blk : perm)
      for (int e : blk) label[e] = next_label2++;
    auto code = encode_with_labels(members, label);
    if (!have || code_less(code, best)) {
      best = code;
      have = true;
    }
    // advance
    std::size_t i = 0;
    while (i < perm.size() && !std::next_permutation(perm[i].begin(), perm[i].end())) {
      std::sort(perm[i].begin(), perm[i].end());
      ++i;
    }
    if (i == perm.size()) break;
  }
  out.code = best;
  out.exact = true;
  return out;
}

bool isomorphic(const SetFamily& F, const SetFamily& G) {
  if (F.k != G.k || F.size() != G.size()) return false;
  auto cf = canonical_form(F);
  auto cg = canonical_form(G);
  if (!cf.exact || !cg.exact)
    throw std::domain_error("isomorphic: support exceeds the canonicalizer cap");
  return cf.code == cg.code;
}

// --- Interchange format -----------------------------------------------------

std::string family_to_json(const SetFamily& F) {
  nlohmann::json j;
  j["ground"] = {F.ground.lo, F.ground.hi};
  j["k"] = F.k;
  auto sets = nlohmann::json::array();
  for (const auto& s : F.sets) sets.push_back(F.elements_of(s));
  j["sets"] = sets;
  return j.dump();
}

SetFamily family_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GroundSet g(j.at("ground").at(0).get<long>(), j.at("ground").at(1).get<long>());
  SetFamily fam(g, j.at("k").get<int>());
  for (const auto& row : j.at("sets")) fam.add_elements(row.get<std::vector<long>>());
  fam.normalize();
  return fam;
}

SetFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return family_from_json(ss.str());
}

void family_to_file(const SetFamily& F, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("cannot write family file: " + path);
  outf << family_to_json(F) << "\n";
}

}  // namespace ifam
