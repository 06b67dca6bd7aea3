#include "ifam/resistance.hpp"

#include <algorithm>

namespace ifam {

namespace {

void check_nk(long n, long k, const char* who) {
  if (!(k >= 3 && n > 2 * k))
    throw std::domain_error(std::string(who) + ": requires n > 2k >= 6");
}

std::vector<long> interval(long lo, long hi) {
  std::vector<long> v;
  for (long x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

bool in_sorted(const std::vector<long>& v, long e) {
  return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace

ResistantDescriptor resistant_descriptor(long n, long k, const BigInt& gamma) {
  check_nk(n, k, "resistant_descriptor");
  if (gamma < 0 || gamma >= binomial(n - 1, k - 1))
    throw std::domain_error("resistant_descriptor: gamma outside [0, C(n-1,k-1))");
  ResistantDescriptor d;
  d.n = n;
  d.k = k;
  d.gamma = gamma;
  auto terms = cascade(gamma, n - k - 1);
  for (const auto& t : terms) d.T_gamma.push_back(n - t.upper);
  if (!d.T_gamma.empty() && d.T_gamma.front() <= 1)
    throw std::logic_error("resistant_descriptor: cascade stop below 2");
  if (!d.T_gamma.empty()) {
    long last = d.T_gamma.back();
    for (long x = 2; x < last; ++x)
      if (!in_sorted(d.T_gamma, x)) d.S_gamma.push_back(x);
    d.S_gamma.push_back(last);
  }
  if (gamma == 0 || gamma == binomial(n - 4, k - 3)) {
    d.resistant = true;
  } else {
    long sb = static_cast<long>(d.T_gamma.size());
    long sa = static_cast<long>(d.S_gamma.size());
    d.resistant = sa <= k && sb <= k - 1;
    for (long i = 1; i <= sb && d.resistant; ++i)
      if (d.T_gamma[i - 1] <= 2 * i + 2) d.resistant = false;
  }
  return d;
}

std::vector<ResistantPair> resistant_pairs(long n, long k) {
  check_nk(n, k, "resistant_pairs");
  GroundSet g(2, n);
  std::vector<ResistantPair> out;

  // l = 0 sentinel: empty k-side, full (k-1)-side.
  ResistantPair zero;
  zero.S = {1, n};
  zero.T = interval(2, n);
  zero.gammaB = 0;
  zero.sizeA = binomial(n - 1, k - 1);
  out.push_back(zero);

  // Base pair.
  out.push_back({{1, 4}, {2, 3, 4}, lex_size(g, std::vector<long>{2, 3, 4}, k),
                 lex_size(g, std::vector<long>{1, 4}, k - 1)});

  // General pairs: T ⊇ {2,3,4} with largest element j, S = ([2,j]\T) ∪ {1,j},
  // |S| <= k, |T| <= k, and strictly more of [2,i] in T than in S∪{1} at every
  // i in [4, j].
  for (long j = 5; j <= 2 * k - 1; ++j) {
    long free_lo = 5, free_hi = j - 1;
    long nfree = free_hi - free_lo + 1;
    for (long mask = 0; mask < (1L << nfree); ++mask) {
      std::vector<long> T = {2, 3, 4};
      std::vector<long> S = {1};
      for (long x = free_lo; x <= free_hi; ++x) {
        if ((mask >> (x - free_lo)) & 1)
          T.push_back(x);
        else
          S.push_back(x);
      }
      T.push_back(j);
      S.push_back(j);
      if (static_cast<long>(T.size()) > k || static_cast<long>(S.size()) > k) continue;
      bool ok = true;
      long in_s = 1;  // |[4] ∩ S| = |{1}|
      for (long i = 5; i <= j && ok; ++i) {
        if (in_sorted(S, i)) ++in_s;
        if (in_s >= i - in_s) ok = false;
      }
      if (!ok) continue;
      out.push_back({S, T, lex_size(g, T, k), lex_size(g, S, k - 1)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ResistantPair& x, const ResistantPair& y) { return x.gammaB < y.gammaB; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].gammaB == out[i - 1].gammaB)
      throw std::logic_error("resistant_pairs: duplicate diversity value");
  if (out.back().gammaB != binomial(n - 4, k - 3))
    throw std::logic_error("resistant_pairs: top value is not C(n-4, k-3)");
  return out;
}

std::vector<BigInt> enumerate_resistant(long n, long k) {
  std::vector<BigInt> out;
  for (const auto& p : resistant_pairs(n, k)) out.push_back(p.gammaB);
  return out;
}

std::vector<BigInt> enumerate_resistant_via_cascade(long n, long k) {
  check_nk(n, k, "enumerate_resistant_via_cascade");
  BigInt top = binomial(n - 4, k - 3);
  if (top > 2'000'000) throw std::domain_error("enumerate_resistant_via_cascade: range too large");
  std::vector<BigInt> out;
  for (BigInt g = 0; g <= top; ++g)
    if (resistant_descriptor(n, k, g).resistant) out.push_back(g);
  return out;
}

CharPair char_pair_of(long n, long k, const ResistantPair& p) {
  GroundSet g(2, n);
  return make_char_pair(CharSet(g, p.S), CharSet(g, p.T), k - 1, k);
}

namespace {

const ResistantPair& locate_window(const std::vector<ResistantPair>& pairs, const BigInt& gamma,
                                   std::size_t* index_out) {
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    if (gamma <= pairs[l].gammaB) {
      if (index_out) *index_out = l;
      return pairs[l];
    }
  }
  throw std::domain_error("diversity above the resistant range");
}

}  // namespace

BoundReport bound_full1(long n, long k, const BigInt& gamma) {
  check_nk(n, k, "bound_full1");
  if (gamma < 0) throw std::domain_error("bound_full1: negative gamma");
  if (gamma > binomial(n - 4, k - 3))
    throw std::domain_error(
        "bound_full1: gamma exceeds C(n-4,k-3); use bound_thm1 / bound_corhm in that range");
  auto pairs = resistant_pairs(n, k);
  std::size_t l = 0;
  const auto& p = locate_window(pairs, gamma, &l);
  BoundReport r;
  r.theorem = "full1";
  r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"gamma", str(gamma)}};
  r.value = Rational(p.sizeA + p.gammaB);
  r.notes = {{"l", std::to_string(l)}, {"gamma_l", str(p.gammaB)}, {"sizeA_l", str(p.sizeA)}};
  r.witness_pair = char_pair_of(n, k, p);
  return r;
}

BoundReport bound_thm1(long n, long k, const Rational& u) {
  if (!(n > 2 * k && k > 0)) throw std::domain_error("bound_thm1: requires n > 2k > 0");
  if (u < 3 || u > k) throw std::domain_error("bound_thm1: u outside [3, k]");
  BoundReport r;
  r.theorem = "thm1";
  r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"u", str(u)}};
  Rational x = Rational(n) - u - 1;
  r.value = Rational(binomial(n - 1, k - 1)) + binomial_real(x, n - k - 1) - binomial_real(x, k - 1);
  r.notes = {{"diversity_threshold", str(binomial_real(x, n - k - 1))}};
  return r;
}

BoundReport bound_corhm(long n, long k, long u, const BigInt& gamma) {
  std::string window;
  if (u >= 4) {
    if (!(n > 2 * k && k >= 4)) throw std::domain_error("bound_corhm: requires n > 2k >= 8 for u >= 4");
    if (u > k) throw std::domain_error("bound_corhm: u outside [3, k]");
    if (gamma <= binomial(n - u - 1, n - k - 1))
      throw std::domain_error("bound_corhm: gamma must exceed C(n-u-1, n-k-1)");
    window = "u>=4";
  } else if (u == 3) {
    check_nk(n, k, "bound_corhm");
    BigInt w1_lo = binomial(n - 4, k - 3);
    BigInt w1_hi = binomial(n - 3, k - 2) - binomial(n - k - 2, k - 2) + 1;
    BigInt w2_lo = binomial(n - 3, k - 2);
    BigInt w2_hi = w2_lo + binomial(n - 4, k - 2) - binomial(n - k - 2, k - 2) + 1;
    if (gamma > w1_lo && gamma <= w1_hi)
      window = "u3-window-1";
    else if (gamma > w2_lo && gamma <= w2_hi)
      window = "u3-window-2";
    else
      throw std::domain_error("bound_corhm: gamma outside both u = 3 windows");
  } else {
    throw std::domain_error("bound_corhm: u outside [3, k]");
  }
  BoundReport r;
  r.theorem = "corhm";
  r.inputs = {{"n", std::to_string(n)},
              {"k", std::to_string(k)},
              {"u", std::to_string(u)},
              {"gamma", str(gamma)}};
  r.value = bound_thm1(n, k, Rational(u)).value - Rational(binomial(n - k - 2, k - 2)) + 1;
  r.notes = {{"window", window}};
  return r;
}

BoundReport bound_weighted(long n, long k, const BigInt& gamma) {
  check_nk(n, k, "bound_weighted");
  if (gamma < 0 || gamma > binomial(n - 4, k - 3))
    throw std::domain_error("bound_weighted: gamma outside [0, C(n-4,k-3)]");
  Rational C(n - k - 2, k - 2);
  C.canonicalize();
  auto pairs = resistant_pairs(n, k);
  std::size_t l = 0;
  const auto& p = locate_window(pairs, gamma, &l);
  BoundReport r;
  r.theorem = "weighted";
  r.inputs = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"gamma", str(gamma)}};
  r.value = Rational(p.sizeA) + C * Rational(p.gammaB);
  r.notes = {{"weight", str(C)},
             {"l", std::to_string(l)},
             {"gamma_l", str(p.gammaB)},
             {"star_bound", str(binomial(n - 1, k - 1))},
             {"nontrivial_bound",
              str(Rational(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1)) + C)}};
  r.witness_pair = char_pair_of(n, k, p);
  return r;
}

std::vector<AbResistantPair> ab_resistant_pairs(long n, long a, long b) {
  if (!(a >= 1 && b >= a && n > a + b)) throw std::domain_error("ab_resistant_pairs: requires 1 <= a <= b < n - a");
  long t = b + 1 - a;
  GroundSet g(1, n);
  std::vector<AbResistantPair> out;

  AbResistantPair zero;
  zero.S = {n};
  zero.T = interval(1, n);
  zero.gammaB = 0;
  zero.sizeA = binomial(n, a);
  zero.sentinel = true;
  out.push_back(zero);

  // Base pair.
  {
    std::vector<long> T = interval(1, t + 1);
    std::vector<long> S = {t + 1};
    if (static_cast<long>(T.size()) <= b)
      out.push_back({S, T, lex_size(g, T, b), lex_size(g, S, a), false});
  }

  // General pairs: T ⊇ [1, t+1] with largest element j, S = ([t+2, j-1]\T) ∪ {j}.
  for (long j = t + 2; j <= a + b - 1; ++j) {
    long free_lo = t + 2, free_hi = j - 1;
    long nfree = free_hi - free_lo + 1;
    for (long mask = 0; mask < (1L << nfree); ++mask) {
      std::vector<long> T = interval(1, t + 1);
      std::vector<long> S;
      for (long x = free_lo; x <= free_hi; ++x) {
        if ((mask >> (x - free_lo)) & 1)
          T.push_back(x);
        else
          S.push_back(x);
      }
      T.push_back(j);
      S.push_back(j);
      if (static_cast<long>(T.size()) > b || static_cast<long>(S.size()) > a) continue;
      bool ok = true;
      long in_s = 0;
      for (long i = t + 1; i <= j && ok; ++i) {
        if (in_sorted(S, i)) ++in_s;
        if (in_s - a >= i - in_s - b) ok = false;
      }
      if (!ok) continue;
      out.push_back({S, T, lex_size(g, T, b), lex_size(g, S, a), false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AbResistantPair& x, const AbResistantPair& y) { return x.gammaB < y.gammaB; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].gammaB == out[i - 1].gammaB)
      throw std::logic_error("ab_resistant_pairs: duplicate diversity value");
  return out;
}

BoundReport bound_ab(long n, long a, long b, const BigInt& sizeB_lower, const Rational& weight) {
  if (!(a >= 1 && b >= a && n > a + b)) throw std::domain_error("bound_ab: requires 1 <= a <= b < n - a");
  if (sizeB_lower < 0) throw std::domain_error("bound_ab: negative sizeB_lower");
  if (sizeB_lower > binomial(n, b)) throw std::domain_error("bound_ab: sizeB_lower exceeds C(n,b)");
  if (weight != 1) {
    if (a < 2) throw std::domain_error("bound_ab: weighted variant needs a >= 2");
    Rational cap(n - b - 1, a - 1);
    cap.canonicalize();
    if (weight >= cap) throw std::domain_error("bound_ab: weight must be < (n-b-1)/(a-1)");
    if (weight < 1) throw std::domain_error("bound_ab: weight must be >= 1");
  }

  long t = b + 1 - a;
  BoundReport r;
  r.theorem = "ab";
  r.inputs = {{"n", std::to_string(n)},  {"a", std::to_string(a)},
              {"b", std::to_string(b)},  {"sizeB_lower", str(sizeB_lower)},
              {"weight", str(weight)},   {"t", std::to_string(t)}};

  // Easy corollary values, always reported when applicable.
  if (sizeB_lower <= binomial(n - t, a - 1)) {
    r.notes["eqcreasy"] = str(binomial(n, a));
    r.notes["eqcreasy_strict"] = sizeB_lower > 0 ? "true" : "false";
    for (long j = b; j >= t; --j) {
      if (binomial(n - j, b - j) <= sizeB_lower) {
        r.notes["eqcreasy2"] = str(binomial(n, a) - binomial(n - j, a) + binomial(n - j, b - j));
        r.notes["eqcreasy2_j"] = std::to_string(j);
        break;
      }
    }
  }

  auto pairs = ab_resistant_pairs(n, a, b);
  if (sizeB_lower <= pairs.back().gammaB) {
    std::size_t l = 0;
    const AbResistantPair* p = nullptr;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (sizeB_lower <= pairs[i].gammaB) { p = &pairs[i]; l = i; break; }
    r.value = Rational(p->sizeA) + weight * Rational(p->gammaB);
    r.notes["branch"] = "step";
    r.notes["l"] = std::to_string(l);
    r.notes["gamma_l"] = str(p->gammaB);
    if (!p->sentinel) {
      GroundSet g(1, n);
      r.witness_pair = make_char_pair(CharSet(g, p->S), CharSet(g, p->T), static_cast<int>(a),
                                      static_cast<int>(b));
    }
    return r;
  }

  if (weight != 1)
    throw std::domain_error("bound_ab: weighted variant only covers the resistant range");

  // Refinement branches above the resistant range.
  BigInt cap3 = binomial(n - t, a - 1) + binomial(n - t - 1, a - 1);
  BigInt corr = binomial(n - b - 1, a - 1);
  if (sizeB_lower <= cap3) {
    long i_sel = 0;
    for (long i = b; i >= t + 1; --i) {
      if (binomial(n - i, b - i) < sizeB_lower) { i_sel = i; break; }
    }
    if (i_sel >= t + 2) {
      r.value = Rational(binomial(n, a) - binomial(n - i_sel, a) + binomial(n - i_sel, b - i_sel) -
                         corr + 1);
      r.notes["branch"] = "refined";
      r.notes["i"] = std::to_string(i_sel);
      return r;
    }
    if (i_sel == t + 1) {
      BigInt ex_lo = binomial(n - t, a - 1) - corr + 2;
      BigInt ex_hi = binomial(n - t, a - 1);
      bool excluded = sizeB_lower >= ex_lo && sizeB_lower <= ex_hi;
      bool over = sizeB_lower > cap3 - corr + 1;
      if (!excluded && !over) {
        r.value =
            Rational(binomial(n, a) - binomial(n - t, a) + binomial(n - t, b - t) - corr + 1);
        r.notes["branch"] = "refined";
        r.notes["i"] = std::to_string(i_sel);
        return r;
      }
      r.notes["refined"] = excluded ? "no bound claimed (excluded interval)" : "no bound claimed";
    }
  }
  // Fall back to the easy corollary values computed above.
  if (r.notes.count("eqcreasy2")) {
    r.value = parse_rational(r.notes["eqcreasy2"]);
    r.notes["branch"] = "easy";
    return r;
  }
  if (r.notes.count("eqcreasy")) {
    r.value = Rational(binomial(n, a));
    r.notes["branch"] = "easy";
    return r;
  }
  throw std::domain_error("bound_ab: sizeB_lower beyond every claimed branch");
}

BoundReport bound_ft(long n, long a, long b, const Rational& alpha) {
  if (!(a > 0 && a <= b && n > a + b)) throw std::domain_error("bound_ft: requires 0 < a <= b < n - a");
  if (alpha < 1) throw std::domain_error("bound_ft: alpha must be >= 1");
  BoundReport r;
  r.theorem = "ft";
  r.inputs = {{"n", std::to_string(n)},
              {"a", std::to_string(a)},
              {"b", std::to_string(b)},
              {"alpha", str(alpha)}};
  Rational x = Rational(n) - alpha;
  r.value = Rational(binomial(n, b)) + binomial_real(x, n - a) - binomial_real(x, b);
  r.notes = {{"sizeA_lower", str(binomial_real(x, n - a))}};
  return r;
}

std::vector<CharSet> neutral_sets(long n, long k, std::size_t l) {
  auto pairs = resistant_pairs(n, k);
  if (l < 1 || l >= pairs.size()) throw std::domain_error("neutral_sets: resistant index out of range");
  GroundSet g(2, n);
  std::vector<CharSet> chain;
  std::vector<long> T = pairs[l].T;
  chain.emplace_back(g, T);
  while (static_cast<long>(T.size()) < k) {
    long next = 2 * static_cast<long>(T.size());
    if (next <= T.back() || next > n) throw std::logic_error("neutral_sets: malformed chain element");
    T.push_back(next);
    chain.emplace_back(g, T);
  }
  return chain;
}

CharSet neutral_partner(const CharSet& T) {
  long j = T.max_elem();
  std::vector<long> S{1};
  for (long x = 2; x < j; ++x)
    if (!T.has(x)) S.push_back(x);
  S.push_back(j);
  return CharSet(T.ground, S);
}

namespace {

BigInt lemmin_f_raw(long m, long s, long k, long z) {
  BigInt total = 0;
  for (long l = 1; l <= s; ++l) {
    total += binomial(m - l, k - 2);
    if (l <= z - 1)
      total -= binomial(m - s - 1, k - 2);
    else
      total -= binomial(m - s - 2 - (l - z), k - 2);
  }
  return total;
}

}  // namespace

BigInt lemmin_f(long m, long s, long k, long z) {
  if (!(k >= 4 && s >= 2 && s <= k && m >= k + s))
    throw std::domain_error("lemmin_f: requires k >= 4, 2 <= s <= k, m >= k + s");
  if (!(z >= 2 && z <= s + 1)) throw std::domain_error("lemmin_f: z outside [2, s+1]");
  BigInt f = lemmin_f_raw(m, s, k, z);
  if (z >= 3) {
    BigInt drop = lemmin_f_raw(m, s, k, z - 1) - f;
    BigInt floor_drop = binomial(m - s - 2, k - 3);
    if (!(drop >= floor_drop && floor_drop > 1))
      throw std::logic_error("lemmin_f: telescoping drop below its guaranteed floor");
  }
  return f;
}

BigInt lemmin_fprime3(long m, long s, long k) {
  if (!(k >= 4 && s >= 4 && s <= k && m >= k + s))
    throw std::domain_error("lemmin_fprime3: requires k >= 4, 4 <= s <= k, m >= k + s");
  BigInt total = 0;
  for (long l = 1; l <= s; ++l) {
    total += binomial(m - l, k - 2);
    if (l <= 2)
      total -= binomial(m - s - 1, k - 2);
    else if (l <= 4)
      total -= binomial(m - s - 2, k - 2);
    else
      total -= binomial(m - s - l + 1, k - 2);
  }
  BigInt gap = lemmin_f(m, s, k, 3) - total;
  if (gap != binomial(m - s - 3, k - 3))
    throw std::logic_error("lemmin_fprime3: gap to f(3) is not C(m-s-3, k-3)");
  return total;
}

BigInt size_C3(long n, long k) {
  if (!(k >= 3 && n >= 2 * k + 1)) throw std::domain_error("size_C3: requires k >= 3, n >= 2k + 1");
  BigInt total = 3;
  for (long l = 1; l <= k; ++l) {
    total += binomial(n - 1 - l, k - 2);
    if (l <= 2)
      total -= binomial(n - k - 2, k - 2);
    else
      total -= binomial(n - k - l, k - 2);
  }
  return total;
}

}  // namespace ifam
