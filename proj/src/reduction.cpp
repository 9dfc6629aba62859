#include "reglab/reduction.hpp"

#include "reglab/core.hpp"
#include "reglab/errors.hpp"

#include <map>
#include <numeric>

namespace reglab::reduction {

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::singleton: return "singleton";
    case ClassKind::clique: return "clique";
    case ClassKind::independent: return "independent";
    case ClassKind::mixed: return "mixed";
  }
  return "mixed";
}

bool are_twins(const Graph& g, int x, int y) {
  VertexSet d = g.adj(x) ^ g.adj(y);
  d.erase(x);
  d.erase(y);
  return d.empty();
}

bool are_twins(const ThreeGraph& h, int x, int y) {
  std::size_t W = h.words();
  std::vector<std::uint64_t> mask(W, ~std::uint64_t{0});
  mask[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  mask[y >> 6] &= ~(std::uint64_t{1} << (y & 63));
  for (int z = 0; z < static_cast<int>(h.n()); ++z) {
    if (z == x || z == y) continue;
    const auto* rx = h.link_row(x, z);
    const auto* ry = h.link_row(y, z);
    for (std::size_t w = 0; w < W; ++w)
      if ((rx[w] ^ ry[w]) & mask[w]) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

Partition from_union_find(UnionFind& uf, std::size_t n) {
  std::map<int, VertexSet> groups;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, _] = groups.try_emplace(uf.find(static_cast<int>(v)), VertexSet(n));
    it->second.insert(static_cast<int>(v));
  }
  std::vector<VertexSet> parts;
  for (auto& [_, s] : groups) parts.push_back(s);
  return Partition(n, std::move(parts)).canonical();
}

template <class G>
void validate(const G& g, const Partition& p) {
  for (auto& part : p.parts()) {
    auto vs = part.to_vector();
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (!are_twins(g, vs[0], vs[i])) throw ContractError("twin class is not closed under the twin relation");
  }
}

}  // namespace

TwinClasses twin_classes_graph(const Graph& g) {
  std::size_t n = g.n();
  UnionFind uf(n);
  // false twins share open rows, true twins share closed rows
  std::map<std::vector<std::uint64_t>, int> open, closed;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    auto [oi, o_new] = open.try_emplace(g.adj(v).words(), v);
    if (!o_new) uf.unite(v, oi->second);
    VertexSet c = g.adj(v);
    c.insert(v);
    auto [ci, c_new] = closed.try_emplace(c.words(), v);
    if (!c_new) uf.unite(v, ci->second);
  }
  TwinClasses out{from_union_find(uf, n), {}, true};
  validate(g, out.partition);
  for (auto& part : out.partition.parts()) {
    auto vs = part.to_vector();
    if (vs.size() == 1) {
      out.kinds.push_back(ClassKind::singleton);
      continue;
    }
    out.irreducible = false;
    std::size_t inner = core::count2(g, part, part) / 2;
    std::size_t pairs = vs.size() * (vs.size() - 1) / 2;
    out.kinds.push_back(inner == pairs ? ClassKind::clique : inner == 0 ? ClassKind::independent : ClassKind::mixed);
  }
  return out;
}

TwinClasses twin_classes_threegraph(const ThreeGraph& h) {
  std::size_t n = h.n();
  UnionFind uf(n);
  for (int x = 0; x < static_cast<int>(n); ++x)
    for (int y = x + 1; y < static_cast<int>(n); ++y)
      if (uf.find(x) != uf.find(y) && are_twins(h, x, y)) uf.unite(x, y);
  TwinClasses out{from_union_find(uf, n), {}, true};
  validate(h, out.partition);
  for (auto& part : out.partition.parts()) {
    out.kinds.push_back(part.size() == 1 ? ClassKind::singleton : ClassKind::mixed);
    if (part.size() > 2) out.irreducible = false;
  }
  return out;
}

TwinClasses twin_classes(const AnyGraph& g) {
  return g.index() == 0 ? twin_classes_graph(std::get<Graph>(g)) : twin_classes_threegraph(std::get<ThreeGraph>(g));
}

ClassPartitionCheck class_partition_regular(const AnyGraph& g, const Threshold& eps) {
  ClassPartitionCheck out{twin_classes(g), {}};
  out.verdict = regularity::check_partition(g, out.classes.partition, eps);
  return out;
}

Reduced reduce(const AnyGraph& g) {
  TwinClasses tc = twin_classes(g);
  std::size_t n = order(g);
  VertexSet keep(n);
  int per_class = g.index() == 0 ? 1 : 2;
  for (auto& part : tc.partition.parts()) {
    auto vs = part.to_vector();
    for (int i = 0; i < per_class && i < static_cast<int>(vs.size()); ++i) keep.insert(vs[i]);
  }
  if (g.index() == 0) {
    auto r = core::induced(std::get<Graph>(g), keep);
    return {r.graph, r.to_parent};
  }
  auto r = core::induced(std::get<ThreeGraph>(g), keep);
  return {r.graph, r.to_parent};
}

}  // namespace reglab::reduction
