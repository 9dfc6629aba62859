#include "reglab/extraction.hpp"

#include "reglab/errors.hpp"
#include "reglab/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reglab::extraction {

using families::IrrKind;

namespace {

constexpr IrrKind kPatterns[] = {IrrKind::half, IrrKind::matching, IrrKind::comatching};

struct Brute {
  const Graph& g;
  std::vector<int> uv, vv;
  int k;
  const std::function<bool(const UvCopy&)>& visit;
  std::vector<int> a;
  std::vector<int> trace;  // per vv index, bits over chosen a positions
  std::vector<char> in_a;  // per vertex
  int cols[3][8];
  bool stopped = false;

  // can the restricted columns of pattern p still be realized by distinct vertices?
  bool feasible(int p, int m) const {
    int mask = (1 << m) - 1;
    std::map<int, int> need;
    for (int j = 0; j < k; ++j) ++need[cols[p][j] & mask];
    std::map<int, int> have;
    for (std::size_t w = 0; w < vv.size(); ++w)
      if (!in_a[vv[w]]) ++have[trace[w] & mask];
    for (auto [t, c] : need)
      if (have[t] < c) return false;
    return true;
  }

  void complete() {
    std::vector<UvCopy> found;
    for (int p = 0; p < 3; ++p) {
      UvCopy c{kPatterns[p], a, std::vector<int>(k, -1)};
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        for (std::size_t w = 0; w < vv.size(); ++w)
          if (!in_a[vv[w]] && trace[w] == cols[p][j]) {
            c.b[j] = vv[w];
            break;
          }
        ok = c.b[j] >= 0;
      }
      if (ok) found.push_back(c);
    }
    std::stable_sort(found.begin(), found.end(), [](const UvCopy& x, const UvCopy& y) { return x.b < y.b; });
    for (auto& c : found)
      if (visit(c)) {
        stopped = true;
        return;
      }
  }

  void dfs() {
    int m = static_cast<int>(a.size());
    if (m == k) {
      complete();
      return;
    }
    for (int x : uv) {
      if (in_a[x]) continue;
      a.push_back(x);
      in_a[x] = 1;
      for (std::size_t w = 0; w < vv.size(); ++w)
        if (g.has_edge(x, vv[w])) trace[w] |= 1 << m;
      bool any = false;
      for (int p = 0; p < 3 && !any; ++p) any = feasible(p, m + 1);
      if (any) dfs();
      for (std::size_t w = 0; w < vv.size(); ++w) trace[w] &= ~(1 << m);
      in_a[x] = 0;
      a.pop_back();
      if (stopped) return;
    }
  }
};

void check_uv(const Graph& g, const VertexSet& u, const VertexSet& v) {
  if (u.universe() != g.n() || v.universe() != g.n()) throw DomainError("vertex set universe does not match graph");
}

}  // namespace

void for_each_uv_copy(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                      const std::function<bool(const UvCopy&)>& visit, int guard) {
  check_uv(g, u, v);
  if (k < 1) throw DomainError("copy search: k must be positive");
  if (k > guard || k > 8) throw CapacityError("copy search: k above guard " + std::to_string(guard));
  Brute b{g, u.to_vector(), v.to_vector(), k, visit, {}, {}, {}, {}};
  b.trace.assign(b.vv.size(), 0);
  b.in_a.assign(g.n(), 0);
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < k; ++j) {
      b.cols[p][j] = 0;
      for (int i = 0; i < k; ++i)
        if (families::irr_adjacent(kPatterns[p], i + 1, j + 1)) b.cols[p][j] |= 1 << i;
    }
  b.dfs();
}

std::optional<UvCopy> find_uv_copy_bruteforce(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                                              int guard) {
  std::optional<UvCopy> out;
  for_each_uv_copy(
      g, u, v, k,
      [&](const UvCopy& c) {
        out = c;
        return true;
      },
      guard);
  return out;
}

IterativeResult extract_uv_copy_iterative(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                                          int budget) {
  check_uv(g, u, v);
  if (k < 1) throw DomainError("iterative extraction: k must be positive");
  auto uvs = u.to_vector();
  for (std::size_t i = 0; i < uvs.size(); ++i)
    for (std::size_t j = i + 1; j < uvs.size(); ++j) {
      VertexSet d = (g.adj(uvs[i]) ^ g.adj(uvs[j])) & v;
      d.erase(uvs[i]);
      d.erase(uvs[j]);
      if (d.empty())
        throw ContractError("iterative extraction: no vertex of V separates " + std::to_string(uvs[i]) + " and " +
                            std::to_string(uvs[j]));
    }

  IterativeResult res;
  // first phase: x from V splits the surviving Y; later y's stay on one side
  std::vector<int> xs, ys, diag, later;
  VertexSet Y = u;
  VertexSet used_y(g.n());
  int steps = 0;
  while (Y.size() >= 2 && steps < budget) {
    auto yv = Y.to_vector();
    int z0 = -1, z1 = -1, x = -1;
    for (std::size_t i = 0; i < yv.size() && x < 0; ++i)
      for (std::size_t j = i + 1; j < yv.size() && x < 0; ++j)
        for (int c : v.to_vector()) {
          if (c == yv[i] || c == yv[j] || used_y.contains(c)) continue;
          bool ei = g.has_edge(c, yv[i]), ej = g.has_edge(c, yv[j]);
          if (ei != ej) {
            x = c;
            z1 = ei ? yv[i] : yv[j];
            z0 = ei ? yv[j] : yv[i];
            break;
          }
        }
    if (x < 0) break;
    VertexSet rest = Y;
    rest.erase(x);
    VertexSet in = rest & g.adj(x), out = rest - g.adj(x);
    int lat = in.size() >= out.size() ? 1 : 0;
    int dg = 1 - lat;
    int y = dg == 1 ? z1 : z0;
    VertexSet next = lat == 1 ? in : out;
    if (2 * next.size() + 2 < Y.size()) throw ContractError("iterative extraction: halving invariant violated");
    xs.push_back(x);
    ys.push_back(y);
    diag.push_back(dg);
    later.push_back(lat);
    used_y.insert(y);
    Y = next;
    ++steps;
  }
  res.phase1_steps = steps;

  // majority over (diag, later), ties toward a diagonal edge
  int ones = static_cast<int>(std::count(diag.begin(), diag.end(), 1));
  int want = 2 * ones >= static_cast<int>(diag.size()) ? 1 : 0;
  std::vector<int> keep;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] == want) keep.push_back(static_cast<int>(i));
  res.kept_after_first_filter = static_cast<int>(keep.size());

  // second phase: peel the last pair, keep earlier pairs on the majority side
  std::vector<std::pair<int, int>> pivots;  // (index, tau or -1 when unconstrained)
  std::vector<int> L = keep;
  while (!L.empty() && steps < budget) {
    int piv = L.back();
    L.pop_back();
    if (L.empty()) {
      pivots.push_back({piv, -1});
      break;
    }
    std::vector<int> in, out;
    for (int j : L) (g.has_edge(xs[piv], ys[j]) ? in : out).push_back(j);
    int tau = in.size() >= out.size() ? 1 : 0;
    pivots.push_back({piv, tau});
    L = tau ? in : out;
    ++steps;
  }
  res.pivots = static_cast<int>(pivots.size());
  int t1 = 0, t0 = 0;
  for (auto [_, t] : pivots) {
    if (t == 1) ++t1;
    if (t == 0) ++t0;
  }
  int tau = t1 >= t0 ? 1 : 0;
  std::vector<int> fin;
  for (auto [i, t] : pivots)
    if (t == tau || t < 0) fin.push_back(i);
  std::sort(fin.begin(), fin.end());
  res.final_length = static_cast<int>(fin.size());

  std::vector<int> a, b;
  for (int i : fin) {
    a.push_back(ys[i]);
    b.push_back(xs[i]);
  }
  auto attempt = [&](std::vector<int> aa, std::vector<int> bb, const char* how) {
    if (static_cast<int>(aa.size()) < k || res.copy) return;
    aa.resize(k);
    bb.resize(k);
    for (IrrKind p : kPatterns)
      if (families::is_uv_copy(g, p, aa, bb, &u, &v)) {
        res.copy = UvCopy{p, aa, bb};
        res.orientation = how;
        return;
      }
  };
  attempt(a, b, "direct");
  std::vector<int> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  attempt(ra, rb, "reversed");
  if (a.size() >= 2) {
    std::vector<int> sa(a.begin() + 1, a.end()), sb(b.begin(), b.end() - 1);
    std::reverse(sa.begin(), sa.end());
    std::reverse(sb.begin(), sb.end());
    attempt(sa, sb, "shifted-reversed");
  }
  return res;
}

IrrWitness find_irr_subgraph(const Graph& g, int k) {
  if (k < 1) throw DomainError("find_irr_subgraph: k must be positive");
  if (k > kBruteGuard) throw CapacityError("find_irr_subgraph: k above guard " + std::to_string(kBruteGuard));
  if (!reduction::twin_classes_graph(g).irreducible) throw ContractError("find_irr_subgraph: graph is reducible");
  auto bip = families::bip_double(g);
  int n = static_cast<int>(g.n());
  std::optional<IrrWitness> out;
  for_each_uv_copy(
      bip.g(), bip.at("U"), bip.at("V"), 2 * k,
      [&](const UvCopy& c) {
        std::vector<int> cs = c.a, ds;
        for (int w : c.b) ds.push_back(w - n);
        int m = 2 * k;
        // k-subsets of indices in lexicographic order, skipping collisions
        std::vector<int> sel(k);
        for (int i = 0; i < k; ++i) sel[i] = i;
        while (true) {
          bool ok = true;
          for (int i : sel)
            for (int j : sel)
              if (cs[i] == ds[j]) ok = false;
          if (ok) {
            IrrWitness w{c.pattern, {}, {}};
            for (int i : sel) {
              w.a.push_back(cs[i]);
              w.b.push_back(ds[i]);
            }
            if (families::is_irr_member(g, w.a, w.b) != IrrKind::none) {
              w.kind = families::is_irr_member(g, w.a, w.b);
              out = w;
              return true;
            }
          }
          int i = k - 1;
          while (i >= 0 && sel[i] == m - k + i) --i;
          if (i < 0) break;
          ++sel[i];
          for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
        return false;
      },
      2 * kBruteGuard);
  if (!out) throw SearchExhausted("find_irr_subgraph: no Irr(" + std::to_string(k) + ") copy survives deletion");
  return *out;
}

Equiv3Witness equiv3_trip_witness(const ThreeGraph& h, int k) {
  if (k < 1) throw DomainError("equiv3_trip_witness: k must be positive");
  if (k > 2) throw CapacityError("equiv3_trip_witness: k above guard 2");
  auto tc = reduction::twin_classes_threegraph(h);
  if (!tc.irreducible) throw ContractError("equiv3_trip_witness: 3-graph is reducible");
  int n = static_cast<int>(h.n());
  std::vector<int> singles;
  std::vector<std::pair<int, int>> doubles;
  for (auto& part : tc.partition.parts()) {
    auto vs = part.to_vector();
    if (vs.size() == 1) singles.push_back(vs[0]);
    else doubles.push_back({vs[0], vs[1]});
  }
  Equiv3Witness w;
  std::vector<Edge2> es;
  std::vector<std::pair<int, int>> pairs;
  int ny;
  if (2 * singles.size() >= tc.partition.size()) {
    w.branch = "singletons";
    ny = static_cast<int>(singles.size());
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c) pairs.push_back({b, c});
    for (int i = 0; i < ny; ++i) w.gamma_labels.push_back("u_" + std::to_string(singles[i]));
    for (auto [b, c] : pairs) w.gamma_labels.push_back("(" + std::to_string(b) + "," + std::to_string(c) + ")");
    for (int i = 0; i < ny; ++i)
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (h.has_edge(singles[i], pairs[j].first, pairs[j].second)) es.push_back({i, ny + static_cast<int>(j)});
    w.gamma = Graph(ny + pairs.size(), std::move(es));
  } else {
    w.branch = "pairs";
    ny = static_cast<int>(doubles.size());
    for (auto [x, y] : doubles) w.gamma_labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    for (int v = 0; v < n; ++v) w.gamma_labels.push_back("v_" + std::to_string(v));
    for (int i = 0; i < ny; ++i)
      for (int v = 0; v < n; ++v)
        if (h.has_edge(v, doubles[i].first, doubles[i].second)) es.push_back({i, ny + v});
    w.gamma = Graph(ny + n, std::move(es));
  }
  std::size_t N = w.gamma.n();
  VertexSet Yside = VertexSet::range(N, 0, ny), Xside = VertexSet::range(N, ny, static_cast<int>(N));

  w.hypothesis_ok = true;
  for (int i = 0; i < ny && w.hypothesis_ok; ++i)
    for (int j = i + 1; j < ny && w.hypothesis_ok; ++j)
      if (((w.gamma.adj(i) ^ w.gamma.adj(j)) & Xside).empty()) {
        w.hypothesis_ok = false;
        w.hypothesis_note = w.gamma_labels[i] + " and " + w.gamma_labels[j] + " have equal traces";
      }

  auto copy = find_uv_copy_bruteforce(w.gamma, Yside, Xside, k);
  if (!copy) throw SearchExhausted("equiv3_trip_witness: no copy in the auxiliary graph");
  w.copy = *copy;

  // image in Trip(h): x_v = v, y_v = n + v, z_v = 2n + v
  std::set<Edge3> expected;
  if (w.branch == "singletons") {
    for (int i = 0; i < k; ++i) w.trip_x.push_back(singles[w.copy.a[i]]);
    for (int j = 0; j < k; ++j) {
      auto [b, c] = pairs[w.copy.b[j] - ny];
      w.trip_y.push_back(n + b);
      w.trip_z.push_back(2 * n + c);
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (families::irr_adjacent(w.copy.pattern, i + 1, j + 1))
          expected.insert({w.trip_x[i], w.trip_y[j], w.trip_z[j]});
  } else {
    for (int j = 0; j < k; ++j) w.trip_x.push_back(w.copy.b[j] - ny);
    for (int i = 0; i < k; ++i) {
      w.trip_y.push_back(n + doubles[w.copy.a[i]].first);
      w.trip_z.push_back(2 * n + doubles[w.copy.a[i]].second);
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (families::irr_adjacent(w.copy.pattern, i + 1, j + 1))
          expected.insert({w.trip_x[j], w.trip_y[i], w.trip_z[i]});
  }
  std::set<int> xs(w.trip_x.begin(), w.trip_x.end()), ys(w.trip_y.begin(), w.trip_y.end()),
      zs(w.trip_z.begin(), w.trip_z.end());
  bool distinct = xs.size() == w.trip_x.size() && ys.size() == w.trip_y.size() && zs.size() == w.trip_z.size();
  std::set<Edge3> actual;
  for (int x : xs)
    for (int y : ys)
      for (int z : zs)
        if (h.has_edge(x, y - n, z - 2 * n)) actual.insert({x, y, z});
  w.trip_induced_exact = distinct && actual == expected;
  return w;
}

}  // namespace reglab::extraction
