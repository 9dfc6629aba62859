#include "reglab/dimensions.hpp"

#include "reglab/errors.hpp"

#include <algorithm>

namespace reglab::dimensions {

namespace {

void guard_k(int kMax) {
  if (kMax < 0) throw DomainError("vc: kMax must be non-negative");
  if (kMax > kVcGuard) throw CapacityError("vc: kMax above guard " + std::to_string(kVcGuard));
}

// For the chosen points, traces[v] is the bitmask of points "adjacent"
// to witness v (or -1 when v is excluded). Returns the least witness per
// mask, or nothing if some mask is missing.
std::optional<std::vector<int>> witnesses(const std::vector<int>& traces, int k) {
  std::vector<int> w(std::size_t{1} << k, -1);
  for (std::size_t v = 0; v < traces.size(); ++v)
    if (traces[v] >= 0 && w[traces[v]] < 0) w[traces[v]] = static_cast<int>(v);
  for (int x : w)
    if (x < 0) return std::nullopt;
  return w;
}

struct GraphSearch {
  const Graph& g;
  std::vector<int> pts;
  std::optional<ShatterCertificate> found;

  std::optional<std::vector<int>> shattered() const {
    std::vector<int> tr(g.n(), 0);
    for (int p : pts) tr[p] = -1;
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (tr[v] < 0) continue;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (g.has_edge(pts[i], static_cast<int>(v))) tr[v] |= 1 << i;
    }
    return witnesses(tr, static_cast<int>(pts.size()));
  }

  // lexicographically least increasing k-tuple; shattered prefixes only
  bool dfs(int k, int start) {
    if (static_cast<int>(pts.size()) == k) {
      auto w = shattered();
      if (!w) return false;
      found = ShatterCertificate{k, pts, *w, {}};
      return true;
    }
    for (int v = start; v < static_cast<int>(g.n()); ++v) {
      pts.push_back(v);
      bool ok = shattered().has_value() && dfs(k, v + 1);
      pts.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

struct TripleSearch {
  const ThreeGraph& h;
  std::vector<std::pair<int, int>> pairs;
  std::optional<ShatterCertificate> found;

  std::optional<std::vector<int>> shattered() const {
    std::vector<int> tr(h.n(), 0);
    for (auto [a, b] : pairs) tr[a] = tr[b] = -1;
    for (std::size_t v = 0; v < h.n(); ++v) {
      if (tr[v] < 0) continue;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (h.has_edge(pairs[i].first, pairs[i].second, static_cast<int>(v))) tr[v] |= 1 << i;
    }
    return witnesses(tr, static_cast<int>(pairs.size()));
  }

  bool used(int v) const {
    for (auto [a, b] : pairs)
      if (a == v || b == v) return true;
    return false;
  }

  bool dfs(int k, std::pair<int, int> start) {
    if (static_cast<int>(pairs.size()) == k) {
      auto w = shattered();
      if (!w) return false;
      ShatterCertificate c{k, {}, {}, *w};
      for (auto [a, b] : pairs) {
        c.a.push_back(a);
        c.b.push_back(b);
      }
      found = c;
      return true;
    }
    int n = static_cast<int>(h.n());
    for (int a = start.first; a < n; ++a)
      for (int b = (a == start.first ? start.second : a + 1); b < n; ++b) {
        if (used(a) || used(b)) continue;
        pairs.push_back({a, b});
        bool ok = shattered().has_value() && dfs(k, {a, b + 1});
        pairs.pop_back();
        if (ok) return true;
      }
    return false;
  }
};

template <class Search, class Start>
VcResult run(Search& s, int kMax, Start start) {
  VcResult r;
  for (int k = 1; k <= kMax; ++k) {
    s.found.reset();
    if (!s.dfs(k, start)) return r;
    r.value = k;
    r.certificate = s.found;
  }
  r.at_least = r.value == kMax && kMax > 0;
  return r;
}

}  // namespace

VcResult vc_graph(const Graph& g, int kMax) {
  guard_k(kMax);
  GraphSearch s{g, {}, std::nullopt};
  return run(s, kMax, 0);
}

VcResult vc_threegraph(const ThreeGraph& h, int kMax) {
  guard_k(kMax);
  TripleSearch s{h, {}, std::nullopt};
  return run(s, kMax, std::pair<int, int>{0, 1});
}

namespace {
bool all_distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}
}  // namespace

bool verify_certificate(const Graph& g, const ShatterCertificate& c) {
  if (static_cast<int>(c.a.size()) != c.k || c.b.size() != (std::size_t{1} << c.k)) return false;
  std::vector<int> all(c.a);
  all.insert(all.end(), c.b.begin(), c.b.end());
  for (int v : all)
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) return false;
  if (!all_distinct(all)) return false;
  for (std::size_t s = 0; s < c.b.size(); ++s)
    for (int i = 0; i < c.k; ++i)
      if (g.has_edge(c.a[i], c.b[s]) != static_cast<bool>(s >> i & 1)) return false;
  return true;
}

bool verify_certificate(const ThreeGraph& h, const ShatterCertificate& c) {
  if (static_cast<int>(c.a.size()) != c.k || static_cast<int>(c.b.size()) != c.k ||
      c.c.size() != (std::size_t{1} << c.k))
    return false;
  std::vector<int> all(c.a);
  all.insert(all.end(), c.b.begin(), c.b.end());
  all.insert(all.end(), c.c.begin(), c.c.end());
  for (int v : all)
    if (v < 0 || static_cast<std::size_t>(v) >= h.n()) return false;
  if (!all_distinct(all)) return false;
  for (std::size_t s = 0; s < c.c.size(); ++s)
    for (int i = 0; i < c.k; ++i)
      if (h.has_edge(c.a[i], c.b[i], c.c[s]) != static_cast<bool>(s >> i & 1)) return false;
  return true;
}

Graph slice_graph(const ThreeGraph& h, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= h.n()) throw DomainError("slice vertex out of range");
  std::vector<Edge2> es;
  for (auto& e : h.edges()) {
    if (e[0] == x) es.push_back({e[1], e[2]});
    else if (e[1] == x) es.push_back({e[0], e[2]});
    else if (e[2] == x) es.push_back({e[0], e[1]});
  }
  return Graph(h.n(), std::move(es));
}

SvcResult svc(const ThreeGraph& h, int kMax) {
  guard_k(kMax);
  SvcResult best;
  for (int x = 0; x < static_cast<int>(h.n()); ++x) {
    VcResult r = vc_graph(slice_graph(h, x), kMax);
    if (best.slice_vertex < 0 || r.value > best.value) best = {r.value, r.at_least, x, r.certificate};
  }
  return best;
}

}  // namespace reglab::dimensions
