#include "reglab/regularity.hpp"

#include "reglab/core.hpp"
#include "reglab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace reglab::regularity {

const char* to_string(Status s) {
  switch (s) {
    case Status::regular: return "regular";
    case Status::irregular: return "irregular";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using i128 = __int128;
using u64 = std::uint64_t;

// gap = num / den
struct Candidate {
  i128 num = -1;
  i128 den = 1;
  std::size_t s = 0;
  bool top = false;
  u64 e = 0;
  u64 p_size = 0;
};

bool greater(const Candidate& a, const Candidate& b) { return a.num * b.den > b.num * a.den; }

// eps as p/q when small enough for 128-bit cross products
struct FastEps {
  bool ok = false;
  i128 p = 0, q = 1;
  explicit FastEps(const Threshold& t) {
    if (!t.is_exact()) return;
    Rational v = t.coeff() * t.base();
    BigInt lim = BigInt(1) << 40;
    if (v.num() < 0 || v.num() >= lim || v.den() >= lim) return;
    ok = true;
    p = static_cast<long long>(v.num());
    q = static_cast<long long>(v.den());
  }
  bool exceeded(const Candidate& c) const { return ok && c.num * q > p * c.den; }
};

// Best sub-choice of the sorted side for fixed degrees. `sorted` is
// ascending. total = product of all side sizes, p_size = product of the
// chosen enumerated subset sizes.
Candidate best_over_sizes(const std::vector<u64>& sorted, u64 p_size, u64 E, u64 total, std::size_t smin) {
  Candidate best;
  std::size_t nq = sorted.size();
  std::vector<u64> pre(nq + 1, 0);
  for (std::size_t i = 0; i < nq; ++i) pre[i + 1] = pre[i] + sorted[i];
  for (std::size_t s = std::max<std::size_t>(smin, 1); s <= nq; ++s) {
    for (int side = 0; side < 2; ++side) {
      u64 e = side == 0 ? pre[s] : pre[nq] - pre[nq - s];
      i128 a = static_cast<i128>(E) * p_size * s;
      i128 b = static_cast<i128>(e) * total;
      Candidate c{a > b ? a - b : b - a, static_cast<i128>(total) * p_size * s, s, side == 1, e, p_size};
      if (best.num < 0 || greater(c, best)) best = c;
    }
  }
  return best;
}

// picks the chosen vertices of the sorted side
VertexSet realize(const std::vector<int>& qv, const std::vector<u64>& degs, const Candidate& c, std::size_t n) {
  std::vector<std::size_t> idx(qv.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return c.top ? degs[a] > degs[b] : degs[a] < degs[b];
  });
  VertexSet out(n);
  for (std::size_t i = 0; i < c.s; ++i) out.insert(qv[idx[i]]);
  return out;
}

std::vector<u64> sorted_copy(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_sides(std::size_t n, std::initializer_list<const VertexSet*> sides) {
  for (auto* s : sides) {
    if (s->universe() != n) throw DomainError("vertex set universe does not match graph order");
    if (s->empty()) throw DomainError("empty side");
  }
}

Rational to_rational(i128 num, i128 den) {
  auto conv = [](i128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    BigInt r = 0;
    BigInt place = 1;
    while (v > 0) {
      r += place * static_cast<unsigned>(v % 1000000000);
      place *= 1000000000;
      v /= 1000000000;
    }
    return neg ? BigInt(-r) : r;
  };
  return Rational(conv(num), conv(den));
}

Verdict finish(Verdict v, const Candidate& best, const Threshold& eps, std::vector<VertexSet> subsets) {
  if (best.num < 0) {
    v.status = Status::regular;
    return v;
  }
  Rational gap = to_rational(best.num, best.den);
  if (eps.at_least(gap)) {
    v.status = Status::regular;
    return v;
  }
  v.status = Status::irregular;
  std::size_t sz = 1;
  for (auto& s : subsets) sz *= s.size();
  v.witness = Witness{std::move(subsets), Rational(static_cast<long long>(best.e), static_cast<long long>(sz)),
                      v.density, gap};
  return v;
}

}  // namespace

Verdict check_pair_exact(const Graph& g, const VertexSet& x, const VertexSet& y, const Threshold& eps,
                         const ExactOptions& opt) {
  check_sides(g.n(), {&x, &y});
  Verdict v;
  v.mode = Mode::exact;
  u64 E = core::count2(g, x, y);
  u64 total = x.size() * y.size();
  v.density = Rational(static_cast<long long>(E), static_cast<long long>(total));
  std::size_t sx = eps.min_size(x.size()), sy = eps.min_size(y.size());
  // every sub-density equals the density
  if (E == 0 || E == total || sx > x.size() || sy > y.size()) {
    v.status = Status::regular;
    return v;
  }
  bool swap = x.size() > y.size();
  const VertexSet& P = swap ? y : x;
  const VertexSet& Q = swap ? x : y;
  std::size_t sp = swap ? sy : sx, sq = swap ? sx : sy;
  if (P.size() > opt.max_enum_bits || P.size() > 63)
    throw CapacityError("exact pair check: smaller side has " + std::to_string(P.size()) +
                        " vertices, budget allows " + std::to_string(std::min<unsigned>(opt.max_enum_bits, 63)));
  auto pv = P.to_vector(), qv = Q.to_vector();
  std::vector<u64> local(qv.size(), 0);
  for (std::size_t j = 0; j < qv.size(); ++j)
    for (std::size_t i = 0; i < pv.size(); ++i)
      if (g.has_edge(pv[i], qv[j])) local[j] |= u64{1} << i;

  FastEps fast(eps);
  Candidate best;
  u64 best_mask = 0;
  std::vector<u64> degs(qv.size()), best_degs;
  const u64 limit = u64{1} << pv.size();
  for (u64 mask = 1; mask < limit; ++mask) {
    auto pc = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (pc < sp) continue;
    for (std::size_t j = 0; j < qv.size(); ++j) degs[j] = __builtin_popcountll(local[j] & mask);
    Candidate c = best_over_sizes(sorted_copy(degs), pc, E, total, sq);
    if (best.num < 0 || greater(c, best)) {
      best = c;
      best_mask = mask;
      best_degs = degs;
    }
    if (opt.stop_at_first && fast.exceeded(best)) break;
  }
  VertexSet ps(g.n());
  for (std::size_t i = 0; i < pv.size(); ++i)
    if (best_mask >> i & 1) ps.insert(pv[i]);
  VertexSet qs = best.num < 0 ? VertexSet(g.n()) : realize(qv, best_degs, best, g.n());
  std::vector<VertexSet> subs = swap ? std::vector<VertexSet>{qs, ps} : std::vector<VertexSet>{ps, qs};
  return finish(std::move(v), best, eps, std::move(subs));
}

Verdict check_triple_exact(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                           const Threshold& eps, const ExactOptions& opt) {
  check_sides(h.n(), {&x, &y, &z});
  Verdict v;
  v.mode = Mode::exact;
  u64 E = core::count3(h, x, y, z);
  u64 total = x.size() * y.size() * z.size();
  v.density = Rational(static_cast<long long>(E), static_cast<long long>(total));
  const VertexSet* side[3] = {&x, &y, &z};
  if (E == 0 || E == total) {
    v.status = Status::regular;
    return v;
  }
  std::size_t smin[3];
  for (int i = 0; i < 3; ++i) {
    smin[i] = eps.min_size(side[i]->size());
    if (smin[i] > side[i]->size()) {
      v.status = Status::regular;
      return v;
    }
  }
  // enumerate the two smallest sides, sort the largest
  int perm[3] = {0, 1, 2};
  std::stable_sort(perm, perm + 3, [&](int a, int b) { return side[a]->size() < side[b]->size(); });
  const VertexSet &A = *side[perm[0]], &B = *side[perm[1]], &C = *side[perm[2]];
  if (A.size() + B.size() > opt.max_enum_bits || B.size() > 63)
    throw CapacityError("exact triple check: enumerated sides have " + std::to_string(A.size() + B.size()) +
                        " vertices, budget allows " + std::to_string(opt.max_enum_bits));
  auto av = A.to_vector(), bv = B.to_vector(), cv = C.to_vector();
  // pm[c][a] = bits over B positions of link(a, c)
  std::vector<u64> pm(cv.size() * av.size(), 0);
  for (std::size_t c = 0; c < cv.size(); ++c)
    for (std::size_t a = 0; a < av.size(); ++a)
      for (std::size_t b = 0; b < bv.size(); ++b)
        if (h.has_edge(av[a], bv[b], cv[c])) pm[c * av.size() + a] |= u64{1} << b;

  FastEps fast(eps);
  Candidate best;
  u64 best_a = 0, best_b = 0;
  std::vector<u64> degs(cv.size()), best_degs;
  const u64 la = u64{1} << av.size(), lb = u64{1} << bv.size();
  bool done = false;
  for (u64 ma = 1; ma < la && !done; ++ma) {
    auto pa = static_cast<std::size_t>(__builtin_popcountll(ma));
    if (pa < smin[perm[0]]) continue;
    for (u64 mb = 1; mb < lb; ++mb) {
      auto pb = static_cast<std::size_t>(__builtin_popcountll(mb));
      if (pb < smin[perm[1]]) continue;
      for (std::size_t c = 0; c < cv.size(); ++c) {
        u64 d = 0;
        const u64* row = &pm[c * av.size()];
        for (u64 m = ma; m; m &= m - 1) d += __builtin_popcountll(row[__builtin_ctzll(m)] & mb);
        degs[c] = d;
      }
      Candidate cand = best_over_sizes(sorted_copy(degs), pa * pb, E, total, smin[perm[2]]);
      if (best.num < 0 || greater(cand, best)) {
        best = cand;
        best_a = ma;
        best_b = mb;
        best_degs = degs;
      }
      if (opt.stop_at_first && fast.exceeded(best)) {
        done = true;
        break;
      }
    }
  }
  std::vector<VertexSet> subs(3, VertexSet(h.n()));
  for (std::size_t i = 0; i < av.size(); ++i)
    if (best_a >> i & 1) subs[perm[0]].insert(av[i]);
  for (std::size_t i = 0; i < bv.size(); ++i)
    if (best_b >> i & 1) subs[perm[1]].insert(bv[i]);
  if (best.num >= 0) subs[perm[2]] = realize(cv, best_degs, best, h.n());
  return finish(std::move(v), best, eps, std::move(subs));
}

Verdict check_cell_exact(const AnyGraph& g, const std::vector<VertexSet>& cell, const Threshold& eps,
                         const ExactOptions& opt) {
  if (g.index() == 0) {
    if (cell.size() != 2) throw DomainError("a graph cell has two sides");
    return check_pair_exact(std::get<Graph>(g), cell[0], cell[1], eps, opt);
  }
  if (cell.size() != 3) throw DomainError("a 3-graph cell has three sides");
  return check_triple_exact(std::get<ThreeGraph>(g), cell[0], cell[1], cell[2], eps, opt);
}

bool is_homogeneous_density(const Rational& d, const Threshold& eps) {
  return eps.above(d) || eps.above(1 - d);
}

HomVerdict check_hom_pair(const Graph& g, const VertexSet& x, const VertexSet& y, const Threshold& eps) {
  Rational d = core::density2(g, x, y);
  return {is_homogeneous_density(d, eps), d};
}

HomVerdict check_hom_triple(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                            const Threshold& eps) {
  Rational d = core::density3(h, x, y, z);
  return {is_homogeneous_density(d, eps), d};
}

// ---------------------------------------------------------------- heuristic

namespace {

u64 splitmix(u64 x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

VertexSet random_subset(const std::vector<int>& vs, std::size_t m, std::mt19937_64& rng, std::size_t n) {
  std::vector<int> p = vs;
  for (std::size_t i = 0; i < m && i < p.size(); ++i) {
    std::size_t j = i + rng() % (p.size() - i);
    std::swap(p[i], p[j]);
  }
  VertexSet s(n);
  for (std::size_t i = 0; i < m && i < p.size(); ++i) s.insert(p[i]);
  return s;
}

// prefixes and suffixes of vs sorted by score, at sizes >= smin
std::vector<VertexSet> sorted_prefixes(std::vector<int> vs, const std::vector<u64>& score, std::size_t smin,
                                       std::size_t n) {
  std::vector<std::size_t> idx(vs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  std::vector<VertexSet> out;
  for (std::size_t s = std::max<std::size_t>(smin, 1); s <= vs.size(); ++s) {
    VertexSet lo(n), hi(n);
    for (std::size_t i = 0; i < s; ++i) {
      lo.insert(vs[idx[i]]);
      hi.insert(vs[idx[vs.size() - 1 - i]]);
    }
    out.push_back(lo);
    out.push_back(hi);
  }
  return out;
}

struct HeurState {
  Candidate best;
  std::vector<VertexSet> subsets;
};

Verdict heuristic_pair(const Graph& g, const VertexSet& x, const VertexSet& y, const Threshold& eps, int trials,
                       u64 seed) {
  check_sides(g.n(), {&x, &y});
  Verdict v;
  v.mode = Mode::heuristic;
  u64 E = core::count2(g, x, y);
  u64 total = x.size() * y.size();
  v.density = Rational(static_cast<long long>(E), static_cast<long long>(total));
  std::size_t sx = eps.min_size(x.size()), sy = eps.min_size(y.size());
  // every sub-density equals the density
  if (E == 0 || E == total || sx > x.size() || sy > y.size()) {
    v.status = Status::unknown;  // nothing to refute
    return v;
  }
  HeurState st;
  for (int orient = 0; orient < 2; ++orient) {
    const VertexSet& P = orient == 0 ? x : y;
    const VertexSet& Q = orient == 0 ? y : x;
    std::size_t sp = orient == 0 ? sx : sy, sq = orient == 0 ? sy : sx;
    auto pv = P.to_vector(), qv = Q.to_vector();
    std::vector<VertexSet> cands;
    std::vector<u64> pdeg;
    for (int a : pv) pdeg.push_back(g.adj(a).intersection_size(Q));
    for (auto& s : sorted_prefixes(pv, pdeg, sp, g.n())) cands.push_back(s);
    for (int b : qv) {
      VertexSet in = P & g.adj(b), out = P - g.adj(b);
      if (in.size() >= sp) cands.push_back(in);
      if (out.size() >= sp) cands.push_back(out);
    }
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(splitmix(seed * 0x100000001B3ULL + static_cast<u64>(t) * 2 + orient));
      cands.push_back(random_subset(pv, sp, rng, g.n()));
      if (pv.size() / 2 >= sp) cands.push_back(random_subset(pv, pv.size() / 2, rng, g.n()));
    }
    std::vector<u64> degs(qv.size());
    for (auto& ps : cands) {
      for (std::size_t j = 0; j < qv.size(); ++j) degs[j] = g.adj(qv[j]).intersection_size(ps);
      Candidate c = best_over_sizes(sorted_copy(degs), ps.size(), E, total, sq);
      if (st.best.num < 0 || greater(c, st.best)) {
        st.best = c;
        VertexSet qs = realize(qv, degs, c, g.n());
        st.subsets = orient == 0 ? std::vector<VertexSet>{ps, qs} : std::vector<VertexSet>{qs, ps};
      }
    }
  }
  v = finish(std::move(v), st.best, eps, st.subsets);
  if (v.status == Status::regular) v.status = Status::unknown;
  return v;
}

Verdict heuristic_triple(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                         const Threshold& eps, int trials, u64 seed) {
  check_sides(h.n(), {&x, &y, &z});
  Verdict v;
  v.mode = Mode::heuristic;
  u64 E = core::count3(h, x, y, z);
  u64 total = x.size() * y.size() * z.size();
  v.density = Rational(static_cast<long long>(E), static_cast<long long>(total));
  const VertexSet* side[3] = {&x, &y, &z};
  if (E == 0 || E == total) {
    v.status = Status::unknown;
    return v;
  }
  std::size_t smin[3];
  for (int i = 0; i < 3; ++i) {
    smin[i] = eps.min_size(side[i]->size());
    if (smin[i] > side[i]->size()) {
      v.status = Status::unknown;
      return v;
    }
  }
  HeurState st;
  // the sorted side rotates through all three positions
  for (int r = 0; r < 3; ++r) {
    int ia = (r + 1) % 3, ib = (r + 2) % 3, ic = r;
    const VertexSet &A = *side[ia], &B = *side[ib], &C = *side[ic];
    auto av = A.to_vector(), bv = B.to_vector(), cv = C.to_vector();
    std::vector<u64> ascore;
    for (int a : av) {
      u64 d = 0;
      for (int b : bv) d += h.link(a, b).intersection_size(C);
      ascore.push_back(d);
    }
    std::vector<std::pair<VertexSet, VertexSet>> cands;
    for (auto& s : sorted_prefixes(av, ascore, smin[ia], h.n())) cands.push_back({s, B});
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(splitmix(seed * 0x100000001B3ULL + static_cast<u64>(t) * 3 + r));
      VertexSet a1 = random_subset(av, smin[ia], rng, h.n());
      VertexSet b1 = random_subset(bv, smin[ib], rng, h.n());
      cands.push_back({a1, b1});
      cands.push_back({a1, B});
      if (av.size() / 2 >= smin[ia] && bv.size() / 2 >= smin[ib])
        cands.push_back({random_subset(av, av.size() / 2, rng, h.n()), random_subset(bv, bv.size() / 2, rng, h.n())});
    }
    std::vector<u64> degs(cv.size());
    for (auto& [as, bs] : cands) {
      for (std::size_t j = 0; j < cv.size(); ++j) {
        u64 d = 0;
        as.for_each([&](int a) {
          const u64* row = h.link_row(a, cv[j]);
          const auto& bw = bs.words();
          for (std::size_t w = 0; w < bw.size(); ++w) d += __builtin_popcountll(row[w] & bw[w]);
        });
        degs[j] = d;
      }
      Candidate c = best_over_sizes(sorted_copy(degs), as.size() * bs.size(), E, total, smin[ic]);
      if (st.best.num < 0 || greater(c, st.best)) {
        st.best = c;
        st.subsets.assign(3, VertexSet(h.n()));
        st.subsets[ia] = as;
        st.subsets[ib] = bs;
        st.subsets[ic] = realize(cv, degs, c, h.n());
      }
    }
  }
  v = finish(std::move(v), st.best, eps, st.subsets);
  if (v.status == Status::regular) v.status = Status::unknown;
  return v;
}

}  // namespace

Verdict witness_search_heuristic(const AnyGraph& g, const std::vector<VertexSet>& cell, const Threshold& eps,
                                 int trials, std::uint64_t seed) {
  if (trials < 0) throw DomainError("heuristic search: negative trial count");
  if (g.index() == 0) {
    if (cell.size() != 2) throw DomainError("a graph cell has two sides");
    return heuristic_pair(std::get<Graph>(g), cell[0], cell[1], eps, trials, seed);
  }
  if (cell.size() != 3) throw DomainError("a 3-graph cell has three sides");
  return heuristic_triple(std::get<ThreeGraph>(g), cell[0], cell[1], cell[2], eps, trials, seed);
}

// ---------------------------------------------------------------- partitions

std::string CellCache::key(const std::vector<const VertexSet*>& cell) {
  std::vector<const VertexSet*> c = cell;
  std::sort(c.begin(), c.end(), [](const VertexSet* a, const VertexSet* b) { return a->words() < b->words(); });
  std::string k;
  for (auto* s : c) {
    k.append(reinterpret_cast<const char*>(s->words().data()), s->words().size() * sizeof(u64));
    k.push_back('|');
  }
  return k;
}

const CellCache::Entry* CellCache::find(const std::vector<const VertexSet*>& cell) const {
  auto it = map_.find(key(cell));
  return it == map_.end() ? nullptr : &it->second;
}

void CellCache::put(const std::vector<const VertexSet*>& cell, Entry e) { map_.emplace(key(cell), std::move(e)); }

std::uint64_t allowed_uncovered(std::size_t n, int k, const Threshold& eps) {
  u64 total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  if (total == 0) return 0;
  auto ok = [&](u64 u) {
    return eps.at_least(Rational(static_cast<long long>(u), static_cast<long long>(total)));
  };
  if (ok(total)) return total;
  u64 lo = 0, hi = total;  // ok(lo) holds, ok(hi) fails
  if (!ok(0)) return 0;
  while (hi - lo > 1) {
    u64 mid = lo + (hi - lo) / 2;
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

PartitionVerdict check_partition(const AnyGraph& g, const Partition& p, const Threshold& eps,
                                 const PartitionOptions& opt) {
  std::size_t n = order(g);
  if (p.n() != n) throw DomainError("partition is over " + std::to_string(p.n()) + " vertices, graph has " +
                                    std::to_string(n));
  const int k = arity(g);
  const int t = static_cast<int>(p.size());
  u64 total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  u64 allowed = opt.allowed_uncovered ? *opt.allowed_uncovered : allowed_uncovered(n, k, eps);

  PartitionVerdict out;
  u64 uncovered = 0;
  auto eval = [&](std::vector<int> idx) -> bool {
    u64 weight = 1;
    for (int i : idx) weight *= p[i].size();
    // number of distinct orderings of the index multiset
    u64 perms = k == 2 ? (idx[0] == idx[1] ? 1 : 2)
                       : (idx[0] == idx[2] ? 1 : (idx[0] == idx[1] || idx[1] == idx[2]) ? 3 : 6);
    weight *= perms;
    std::vector<const VertexSet*> sets;
    std::vector<VertexSet> cell;
    for (int i : idx) {
      sets.push_back(&p[i]);
      cell.push_back(p[i]);
    }
    CellResult res{idx, Status::unknown, Rational(0), weight, std::nullopt};
    bool ok;
    const CellCache::Entry* hit = opt.cache ? opt.cache->find(sets) : nullptr;
    if (hit) {
      res.status = hit->status;
      res.density = hit->density;
    } else if (opt.kind == CellKind::homogeneous) {
      res.density = k == 2 ? core::density2(std::get<Graph>(g), cell[0], cell[1])
                           : core::density3(std::get<ThreeGraph>(g), cell[0], cell[1], cell[2]);
      res.status = is_homogeneous_density(res.density, eps) ? Status::regular : Status::irregular;
    } else if (opt.mode == Mode::exact) {
      ExactOptions eo = opt.exact;
      if (!opt.keep_cells) eo.stop_at_first = true;
      Verdict v = check_cell_exact(g, cell, eps, eo);
      res.status = v.status;
      res.density = v.density;
      res.witness = v.witness;
    } else {
      Verdict v = witness_search_heuristic(g, cell, eps, opt.heuristic_trials, opt.seed);
      res.status = v.status;
      res.density = v.density;
      res.witness = v.witness;
    }
    if (opt.cache && !hit && res.status != Status::unknown) opt.cache->put(sets, {res.status, res.density});
    if (res.status == Status::unknown) out.certified = false;
    ok = res.status != Status::irregular;
    if (!ok) uncovered += weight;
    if (opt.keep_cells) out.cells.push_back(std::move(res));
    return !(opt.early_exit && uncovered > allowed);
  };

  bool complete = true;
  if (k == 2) {
    for (int i = 0; i < t && complete; ++i)
      for (int j = i; j < t && complete; ++j) complete = eval({i, j});
  } else {
    for (int i = 0; i < t && complete; ++i)
      for (int j = i; j < t && complete; ++j)
        for (int l = j; l < t && complete; ++l) complete = eval({i, j, l});
  }
  out.complete = complete;
  out.pass = uncovered <= allowed;
  out.covered_mass = total == 0 ? Rational(1)
                                : Rational(static_cast<long long>(total - uncovered), static_cast<long long>(total));
  return out;
}

PartitionVerdict check_hom_partition(const AnyGraph& g, const Partition& p, const Threshold& eps) {
  PartitionOptions opt;
  opt.kind = CellKind::homogeneous;
  return check_partition(g, p, eps, opt);
}

SlicingReport slicing_expectation(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& xs,
                                  const VertexSet& ys, const Rational& eps, const Rational& gamma,
                                  bool verify_parent) {
  if (eps <= 0) throw ContractError("slicing: eps must be positive");
  if (gamma < eps || gamma > 1) throw ContractError("slicing: gamma must lie in [eps, 1]");
  if (!xs.subset_of(x) || !ys.subset_of(y)) throw ContractError("slicing: subpair is not inside the pair");
  if (Rational(static_cast<long long>(xs.size())) < gamma * static_cast<long long>(x.size()) ||
      Rational(static_cast<long long>(ys.size())) < gamma * static_cast<long long>(y.size()))
    throw ContractError("slicing: subpair smaller than gamma times the pair");
  if (verify_parent && !check_pair_exact(g, x, y, eps).regular())
    throw ContractError("slicing: the pair is not eps-regular");
  SlicingReport r;
  r.density = core::density2(g, x, y);
  r.sub_density = core::density2(g, xs, ys);
  r.sub_threshold = Threshold(2 * eps / gamma);
  r.subpair_regular = check_pair_exact(g, xs, ys, r.sub_threshold).regular();
  Rational diff = (r.sub_density - r.density).abs();
  r.density_strictly_within = diff < eps;
  r.density_within = diff <= eps;
  return r;
}

}  // namespace reglab::regularity
