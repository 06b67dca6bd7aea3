#include "ifam/oracles.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace ifam {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string oracle_to_json(const OracleResult& r, bool canonical) {
  nlohmann::json j;
  j["objective"] = str(r.objective);
  j["search_space_size"] = str(r.search_space_size);
  auto pairs = nlohmann::json::array();
  for (const auto& [ma, mb] : r.witness_pairs) pairs.push_back({str(ma), str(mb)});
  j["witness_pairs"] = pairs;
  auto fams = nlohmann::json::array();
  for (const auto& f : r.witness_families) fams.push_back(nlohmann::json::parse(family_to_json(f)));
  j["witness_families"] = fams;
  j["witnesses_deduped"] = r.witnesses_deduped;
  if (!canonical) j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump();
}

std::vector<long> cross_prefix_profile(const GroundSet& ground, int a, int b) {
  if (ground.size() > 16) throw std::domain_error("cross_prefix_profile: ground wider than 16");
  if (a < 1 || b < 1 || a > 6 || b > 6) throw std::domain_error("cross_prefix_profile: a, b outside [1, 6]");
  int N = static_cast<int>(ground.size());
  std::vector<Bits128> asets, bsets;
  for_each_ksubset(N, a, [&](const Bits128& s) { asets.push_back(s); });
  for_each_ksubset(N, b, [&](const Bits128& s) { bsets.push_back(s); });
  std::vector<long> profile(bsets.size() + 1);
  long fz = static_cast<long>(asets.size());  // first eliminated a-prefix position
  profile[0] = fz;
  for (std::size_t i = 0; i < bsets.size(); ++i) {
    for (long j = 0; j < fz; ++j) {
      if (!asets[j].intersects(bsets[i])) {
        fz = j;
        break;
      }
    }
    profile[i + 1] = fz;
  }
  return profile;
}

OracleResult oracle_lexpair(const GroundSet& ground, int a, int b, const BigInt& minB,
                            const std::optional<BigInt>& maxB, const Rational& weight) {
  auto t0 = Clock::now();
  auto profile = cross_prefix_profile(ground, a, b);
  BigInt totB(static_cast<long>(profile.size()) - 1);
  BigInt capB = maxB ? std::min(*maxB, totB) : totB;
  if (minB < 0 || minB > capB) throw std::domain_error("oracle_lexpair: empty sweep range");

  OracleResult res;
  bool have = false;
  Rational best = 0;
  for (BigInt mb = minB; mb <= capB; ++mb) {
    long mbl = mb.get_si();
    Rational obj = Rational(profile[mbl]) + weight * Rational(mb);
    res.search_space_size += profile[mbl] + 1;
    if (!have || obj > best) {
      best = obj;
      res.witness_pairs.clear();
      res.witness_pairs.emplace_back(BigInt(profile[mbl]), mb);
      have = true;
    } else if (obj == best) {
      res.witness_pairs.emplace_back(BigInt(profile[mbl]), mb);
    }
  }
  best.canonicalize();
  res.objective = best;
  res.elapsed_seconds = seconds_since(t0);
  return res;
}

// --- Maximal-clique enumeration ---------------------------------------------

namespace {

struct VBits {
  std::array<std::uint64_t, 4> w{0, 0, 0, 0};
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
  int count() const {
    return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]) + __builtin_popcountll(w[2]) +
           __builtin_popcountll(w[3]);
  }
  VBits operator&(const VBits& o) const {
    VBits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  VBits minus(const VBits& o) const {
    VBits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int blk = 0; blk < 4; ++blk) {
      std::uint64_t x = w[blk];
      while (x) {
        f(blk * 64 + __builtin_ctzll(x));
        x &= x - 1;
      }
    }
  }
};

struct CliqueEnumerator {
  int V = 0;
  std::vector<VBits> adj;
  std::function<void(const VBits&)> report;

  void rec(VBits P, VBits X, VBits R) {
    if (P.none() && X.none()) {
      report(R);
      return;
    }
    // pivot: vertex of P∪X with the most neighbours inside P
    int pivot = -1, bestc = -1;
    auto consider = [&](int v) {
      int c = (P & adj[v]).count();
      if (c > bestc) {
        bestc = c;
        pivot = v;
      }
    };
    P.for_each(consider);
    X.for_each(consider);
    VBits ext = P.minus(adj[pivot]);
    ext.for_each([&](int v) {
      VBits R2 = R;
      R2.set(v);
      rec(P & adj[v], X & adj[v], R2);
      P.reset(v);
      X.set(v);
    });
  }

  void run() {
    VBits P;
    for (int v = 0; v < V; ++v) P.set(v);
    rec(P, VBits{}, VBits{});
  }
};

// Is there a hitting set of size at most c?
bool has_cover_at_most(const std::vector<Bits128>& sets, std::size_t first_uncovered,
                       const Bits128& chosen, long c) {
  std::size_t idx = first_uncovered;
  while (idx < sets.size() && sets[idx].intersects(chosen)) ++idx;
  if (idx == sets.size()) return true;
  if (c == 0) return false;
  bool found = false;
  sets[idx].for_each([&](int b) {
    if (found) return;
    Bits128 nxt = chosen;
    nxt.set(b);
    if (has_cover_at_most(sets, idx + 1, nxt, c - 1)) found = true;
  });
  return found;
}

}  // namespace

OracleResult oracle_maximal_intersecting(long n, long k, CliqueConstraint constraint,
                                         const Rational& param) {
  auto t0 = Clock::now();
  BigInt total = binomial(n, k);
  if (total > 200) throw std::domain_error("oracle_maximal_intersecting: C(n,k) exceeds 200");
  GroundSet g(1, n);
  std::vector<Bits128> verts;
  for_each_ksubset(static_cast<int>(n), static_cast<int>(k),
                   [&](const Bits128& s) { verts.push_back(s); });
  int V = static_cast<int>(verts.size());

  CliqueEnumerator ce;
  ce.V = V;
  ce.adj.assign(V, VBits{});
  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j)
      if (verts[i].intersects(verts[j])) {
        ce.adj[i].set(j);
        ce.adj[j].set(i);
      }

  long best = 0;
  bool feasible = false;
  std::vector<VBits> arg;
  BigInt cliques = 0;

  ce.report = [&](const VBits& R) {
    ++cliques;
    std::vector<Bits128> members;
    R.for_each([&](int v) { members.push_back(verts[v]); });
    long size = static_cast<long>(members.size());
    bool ok = true;
    switch (constraint) {
      case CliqueConstraint::none:
        break;
      case CliqueConstraint::diversity_at_least: {
        long delta = 0;
        for (int bb = 0; bb < g.size(); ++bb) {
          long d = 0;
          for (const auto& s : members)
            if (s.test(bb)) ++d;
          delta = std::max(delta, d);
        }
        ok = Rational(size - delta) >= param;
        break;
      }
      case CliqueConstraint::tau_at_least: {
        long t = to_bigint(param).get_si();
        ok = !has_cover_at_most(members, 0, Bits128{}, t - 1);
        break;
      }
      case CliqueConstraint::degree_proportion_at_most: {
        long delta = 0;
        for (int bb = 0; bb < g.size(); ++bb) {
          long d = 0;
          for (const auto& s : members)
            if (s.test(bb)) ++d;
          delta = std::max(delta, d);
        }
        ok = Rational(delta) <= param * Rational(size);
        break;
      }
    }
    if (!ok) return;
    if (!feasible || size > best) {
      best = size;
      arg.assign(1, R);
      feasible = true;
    } else if (size == best) {
      arg.push_back(R);
    }
  };
  ce.run();

  OracleResult res;
  res.objective = feasible ? Rational(best) : Rational(0);
  res.search_space_size = cliques;

  // isomorph rejection of the extremal witnesses
  std::vector<std::pair<std::vector<Bits128>, SetFamily>> keyed;
  for (const auto& R : arg) {
    SetFamily fam(g, static_cast<int>(k));
    R.for_each([&](int v) { fam.sets.push_back(verts[v]); });
    fam.normalize();
    auto cf = canonical_form(fam);
    if (!cf.exact) res.witnesses_deduped = false;
    keyed.emplace_back(cf.code, fam);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.first.size() && i < y.first.size(); ++i) {
      if (x.first[i].numeric_less(y.first[i])) return true;
      if (y.first[i].numeric_less(x.first[i])) return false;
    }
    return x.first.size() < y.first.size();
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (res.witnesses_deduped && i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    res.witness_families.push_back(keyed[i].second);
  }
  res.elapsed_seconds = seconds_since(t0);
  return res;
}

// --- Minimal 2-cover sweep ----------------------------------------------------

namespace {

struct PackedFamily {
  std::uint64_t a = 0, b = 0;
  bool operator==(const PackedFamily&) const = default;
};

struct PackedFamilyHash {
  std::size_t operator()(const PackedFamily& p) const {
    std::uint64_t h = p.a * 0x9e3779b97f4a7c15ULL;
    h ^= p.b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

PackedFamily pack_family(std::vector<std::uint16_t> masks) {
  std::sort(masks.begin(), masks.end());
  PackedFamily p;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i < 5)
      p.a |= static_cast<std::uint64_t>(masks[i]) << (12 * i);
    else
      p.b |= static_cast<std::uint64_t>(masks[i]) << (12 * (i - 5));
  }
  p.b |= static_cast<std::uint64_t>(masks.size()) << 48;
  return p;
}

}  // namespace

OracleResult oracle_lemmin(long m, long s, long k, bool require_intersecting) {
  if (!(m <= 12 && s <= 5 && s >= 2 && k >= 4 && k <= 6 && m >= k + s))
    throw std::domain_error("oracle_lemmin: parameter caps violated (m<=12, s in [2,5], k in [4,6], m>=k+s)");
  auto t0 = Clock::now();
  int M = static_cast<int>(m);

  std::vector<std::uint16_t> km1;  // all (k-1)-subsets of [m] as masks
  for_each_ksubset(M, static_cast<int>(k - 1),
                   [&](const Bits128& s_) { km1.push_back(static_cast<std::uint16_t>(s_.w0)); });

  std::unordered_set<PackedFamily, PackedFamilyHash> seen;
  long best = -1;
  std::vector<std::vector<std::uint16_t>> arg;
  BigInt candidates = 0;

  long zlo = require_intersecting ? 3 : 2;
  for (long z = zlo; z <= s + 1; ++z) {
    // choose the certificate set D of z elements; element i_l is excluded from
    // H_l and shared by every other member
    std::vector<int> D(z);
    std::function<void(int, int)> chooseD = [&](int start, int depth) {
      if (depth == z) {
        std::uint16_t dmask = 0;
        for (int e : D) dmask |= std::uint16_t(1) << e;
        std::vector<int> rest;
        for (int e = 0; e < M; ++e)
          if (!(dmask & (1 << e))) rest.push_back(e);
        long r = s - z + 1;  // free elements per member
        std::vector<std::uint16_t> rmasks;
        for_each_ksubset(static_cast<int>(rest.size()), static_cast<int>(r),
                         [&](const Bits128& cm) {
                           std::uint16_t mask = 0;
                           cm.for_each([&](int idx) { mask |= std::uint16_t(1) << rest[idx]; });
                           rmasks.push_back(mask);
                         });
        std::vector<std::uint16_t> members(z);
        std::function<void(int, std::uint16_t)> assign = [&](int l, std::uint16_t inter) {
          if (l == static_cast<int>(z)) {
            if (inter != 0) return;  // a common free element would give a 1-cover
            ++candidates;
            auto key = pack_family(members);
            if (!seen.insert(key).second) return;
            long cnt = 0;
            for (std::uint16_t f : km1) {
              bool meets_all = true;
              for (std::uint16_t h : members)
                if (!(f & h)) { meets_all = false; break; }
              if (meets_all) ++cnt;
            }
            long obj = cnt + z;
            if (obj > best) {
              best = obj;
              arg.assign(1, members);
            } else if (obj == best) {
              arg.push_back(members);
            }
            return;
          }
          std::uint16_t base = dmask & ~(std::uint16_t(1) << D[l]);
          for (std::uint16_t rm : rmasks) {
            members[l] = base | rm;
            assign(l + 1, l == 0 ? rm : std::uint16_t(inter & rm));
          }
        };
        std::uint16_t all16 = static_cast<std::uint16_t>((1u << M) - 1);
        assign(0, all16);
        return;
      }
      for (int e = start; e < M; ++e) {
        D[depth] = e;
        chooseD(e + 1, depth + 1);
      }
    };
    chooseD(0, 0);
  }

  OracleResult res;
  res.objective = Rational(best < 0 ? 0 : best);
  res.search_space_size = candidates;

  GroundSet g(1, m);
  std::vector<std::pair<std::vector<Bits128>, SetFamily>> keyed;
  for (const auto& members : arg) {
    SetFamily fam(g, static_cast<int>(s));
    for (std::uint16_t mask : members) fam.sets.push_back(Bits128{mask, 0});
    fam.normalize();
    auto cf = canonical_form(fam);
    if (!cf.exact) res.witnesses_deduped = false;
    keyed.emplace_back(cf.code, fam);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.first.size() && i < y.first.size(); ++i) {
      if (x.first[i].numeric_less(y.first[i])) return true;
      if (y.first[i].numeric_less(x.first[i])) return false;
    }
    return x.first.size() < y.first.size();
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (res.witnesses_deduped && i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    res.witness_families.push_back(keyed[i].second);
  }
  res.elapsed_seconds = seconds_since(t0);
  return res;
}

// --- Diversity table ----------------------------------------------------------

namespace {

std::optional<std::filesystem::path> cache_path(long n, long k, const Rational& weight) {
  const char* dir = std::getenv("IFAM_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::ostringstream name;
  name << "ifam-divtable-n" << n << "-k" << k << "-w" << weight.get_num() << "-"
       << weight.get_den() << ".json";
  return std::filesystem::path(dir) / name.str();
}

}  // namespace

std::string diversity_table_to_json(const DiversityTable& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["weight"] = str(t.weight);
  auto vals = nlohmann::json::array();
  for (const auto& v : t.values) vals.push_back(str(v));
  j["values"] = vals;
  auto bps = nlohmann::json::array();
  for (const auto& b : t.breakpoints) bps.push_back(str(b));
  j["breakpoints"] = bps;
  return j.dump();
}

std::string diversity_table_to_csv(const DiversityTable& t) {
  std::ostringstream out;
  out << "gamma,value,breakpoint\n";
  for (std::size_t gsz = 0; gsz < t.values.size(); ++gsz) {
    bool bp = std::find(t.breakpoints.begin(), t.breakpoints.end(), BigInt(static_cast<long>(gsz))) !=
              t.breakpoints.end();
    out << gsz << "," << str(t.values[gsz]) << "," << (bp ? 1 : 0) << "\n";
  }
  return out.str();
}

DiversityTable oracle_diversity_table(long n, long k, const Rational& weight) {
  if (!(k >= 3 && n > 2 * k && n <= 14 && k <= 6))
    throw std::domain_error("oracle_diversity_table: requires 2k < n <= 14, 3 <= k <= 6");
  auto cache = cache_path(n, k, weight);
  if (cache && std::filesystem::exists(*cache)) {
    std::ifstream in(*cache);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());
    if (j.at("n").get<long>() == n && j.at("k").get<long>() == k &&
        parse_rational(j.at("weight").get<std::string>()) == weight) {
      DiversityTable t;
      t.n = n;
      t.k = k;
      t.weight = weight;
      for (const auto& v : j.at("values")) t.values.push_back(parse_rational(v.get<std::string>()));
      for (const auto& b : j.at("breakpoints")) t.breakpoints.emplace_back(b.get<std::string>());
      return t;
    }
  }

  DiversityTable t;
  t.n = n;
  t.k = k;
  t.weight = weight;
  BigInt gm_big = binomial(n - 4, k - 3);
  long gm = gm_big.get_si();
  auto profile = cross_prefix_profile(GroundSet(2, n), static_cast<int>(k - 1), static_cast<int>(k));
  // suffix maxima of |A| + w*|B| over m_b in [gamma, gm]
  std::vector<Rational> suffix(gm + 2);
  Rational running;
  for (long mb = gm; mb >= 0; --mb) {
    Rational obj = Rational(profile[mb]) + weight * Rational(BigInt(mb));
    if (mb == gm || obj > running) running = obj;
    suffix[mb] = running;
  }
  t.values.assign(suffix.begin(), suffix.begin() + gm + 1);
  for (long gsz = 0; gsz <= gm; ++gsz)
    if (gsz == gm || t.values[gsz + 1] < t.values[gsz]) t.breakpoints.emplace_back(gsz);

  if (cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache->parent_path(), ec);
    std::ofstream out(*cache);
    if (out) out << diversity_table_to_json(t) << "\n";
  }
  return t;
}

}  // namespace ifam
