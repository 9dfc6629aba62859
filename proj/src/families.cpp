#include "reglab/families.hpp"

#include "reglab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace reglab::families {

const VertexSet& Instance::at(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) throw DomainError("unknown label '" + label + "' in " + family);
  return it->second;
}

int Instance::vertex(const std::string& label) const {
  const auto& s = at(label);
  if (s.size() != 1) throw DomainError("label '" + label + "' is not a single vertex");
  return s.first();
}

Partition Instance::class_partition() const {
  std::vector<VertexSet> ps;
  for (auto& c : classes)
    if (!at(c).empty()) ps.push_back(at(c));
  return Partition(n(), std::move(ps));
}

std::string set_label(const std::string& prefix, unsigned mask) {
  std::string s = prefix + "_{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string index_label(const std::string& prefix, int i) { return prefix + "_" + std::to_string(i); }

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw CapacityError(what);
}

// adds a singleton label that is also a class
void add_class(Instance& inst, const std::string& name, VertexSet s) {
  inst.labels[name] = std::move(s);
  inst.classes.push_back(name);
}

Instance bipartite_pattern(int k, IrrKind kind, const std::string& fam) {
  if (k < 1) throw DomainError(fam + ": k must be positive");
  guard(k <= 4096, fam + ": k above size guard 4096");
  std::size_t n = 2 * static_cast<std::size_t>(k);
  std::vector<Edge2> es;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (irr_adjacent(kind, i, j)) es.push_back({i - 1, k + j - 1});
  Instance inst{Graph(n, std::move(es)), {}, {}, fam + "(" + std::to_string(k) + ")"};
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("a", i), VertexSet::of(n, {i - 1}));
  for (int j = 1; j <= k; ++j) add_class(inst, index_label("b", j), VertexSet::of(n, {k + j - 1}));
  inst.labels["U"] = inst.labels["a-side"] = VertexSet::range(n, 0, k);
  inst.labels["V"] = inst.labels["b-side"] = VertexSet::range(n, k, 2 * k);
  return inst;
}

}  // namespace

Instance gen_powerset_graph(int k) {
  if (k < 1) throw DomainError("powerset graph: k must be positive");
  guard(k <= 20, "powerset graph: k above size guard 20");
  std::size_t n = k + (std::size_t{1} << k);
  std::vector<Edge2> es;
  for (unsigned s = 0; s < (1u << k); ++s)
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) es.push_back({i, static_cast<int>(k + s)});
  Instance inst{Graph(n, std::move(es)), {}, {}, "U(" + std::to_string(k) + ")"};
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("a", i), VertexSet::of(n, {i - 1}));
  for (unsigned s = 0; s < (1u << k); ++s) add_class(inst, set_label("b", s), VertexSet::of(n, {static_cast<int>(k + s)}));
  inst.labels["U"] = inst.labels["a-side"] = VertexSet::range(n, 0, k);
  inst.labels["V"] = inst.labels["b-side"] = VertexSet::range(n, k, static_cast<int>(n));
  return inst;
}

Instance gen_halfgraph(int k) { return bipartite_pattern(k, IrrKind::half, "H"); }
Instance gen_matching(int k) { return bipartite_pattern(k, IrrKind::matching, "M"); }
Instance gen_comatching(int k) { return bipartite_pattern(k, IrrKind::comatching, "coM"); }

const char* to_string(IrrKind k) {
  switch (k) {
    case IrrKind::half: return "half";
    case IrrKind::matching: return "matching";
    case IrrKind::comatching: return "comatching";
    case IrrKind::none: return "none";
  }
  return "none";
}

bool irr_adjacent(IrrKind k, int i, int j) {
  switch (k) {
    case IrrKind::half: return i <= j;
    case IrrKind::matching: return i == j;
    case IrrKind::comatching: return i != j;
    case IrrKind::none: return false;
  }
  return false;
}

IrrKind is_irr_member(const Graph& g, const std::vector<int>& aOrder, const std::vector<int>& bOrder) {
  if (aOrder.size() != bOrder.size()) throw DomainError("is_irr_member: order lists differ in length");
  for (int v : aOrder)
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) throw DomainError("is_irr_member: vertex out of range");
  for (int v : bOrder)
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) throw DomainError("is_irr_member: vertex out of range");
  int k = static_cast<int>(aOrder.size());
  for (IrrKind kind : {IrrKind::half, IrrKind::matching, IrrKind::comatching}) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        if (g.has_edge(aOrder[i], bOrder[j]) != irr_adjacent(kind, i + 1, j + 1)) ok = false;
    if (ok) return kind;
  }
  return IrrKind::none;
}

Instance bip_double(const Graph& g) {
  int n = static_cast<int>(g.n());
  std::size_t N = 2 * g.n();
  std::vector<Edge2> es;
  for (auto& e : g.edges()) {
    es.push_back({e[0], n + e[1]});
    es.push_back({e[1], n + e[0]});
  }
  Instance inst{Graph(N, std::move(es)), {}, {}, "Bip"};
  for (int v = 0; v < n; ++v) add_class(inst, index_label("u", v), VertexSet::of(N, {v}));
  for (int v = 0; v < n; ++v) add_class(inst, index_label("w", v), VertexSet::of(N, {n + v}));
  inst.labels["U"] = VertexSet::range(N, 0, n);
  inst.labels["V"] = VertexSet::range(N, n, 2 * n);
  return inst;
}

Instance trip_triple(const ThreeGraph& h) {
  int n = static_cast<int>(h.n());
  std::size_t N = 3 * h.n();
  std::vector<Edge3> es;
  for (auto e : h.edges()) {
    std::sort(e.begin(), e.end());
    do es.push_back({e[0], n + e[1], 2 * n + e[2]});
    while (std::next_permutation(e.begin(), e.end()));
  }
  Instance inst{ThreeGraph(N, std::move(es)), {}, {}, "Trip"};
  const char* names[] = {"x", "y", "z"};
  for (int s = 0; s < 3; ++s)
    for (int v = 0; v < n; ++v) add_class(inst, index_label(names[s], v), VertexSet::of(N, {s * n + v}));
  inst.labels["X"] = VertexSet::range(N, 0, n);
  inst.labels["Y"] = VertexSet::range(N, n, 2 * n);
  inst.labels["Z"] = VertexSet::range(N, 2 * n, 3 * n);
  return inst;
}

namespace {
void require_bipartition(const Instance& bip, const char* op) {
  if (bip.graph.index() != 0) throw DomainError(std::string(op) + ": input must be a graph");
  if (!bip.has("U") || !bip.has("V")) throw DomainError(std::string(op) + ": missing bipartition labels U/V");
}
}  // namespace

Instance otimes(int n, const Instance& bip) {
  require_bipartition(bip, "otimes");
  if (n < 1) throw DomainError("otimes: n must be positive");
  const Graph& g = bip.g();
  int base = static_cast<int>(g.n());
  std::size_t N = g.n() + n;
  std::vector<Edge3> es;
  for (int i = 0; i < n; ++i)
    for (auto& e : g.edges()) es.push_back({base + i, e[0], e[1]});
  Instance inst{ThreeGraph(N, std::move(es)), {}, {}, std::to_string(n) + "⊗" + bip.family};
  for (auto& [name, s] : bip.labels) {
    VertexSet t(N);
    s.for_each([&](int v) { t.insert(v); });
    inst.labels[name] = t;
  }
  inst.classes = bip.classes;
  for (int i = 1; i <= n; ++i) add_class(inst, index_label("c", i), VertexSet::of(N, {base + i - 1}));
  inst.labels["C"] = VertexSet::range(N, base, base + n);
  return inst;
}

Instance ghat(const Instance& bip) {
  require_bipartition(bip, "ghat");
  const Graph& g = bip.g();
  auto us = bip.at("U").to_vector();
  auto vs = bip.at("V").to_vector();
  int nu = static_cast<int>(us.size()), nv = static_cast<int>(vs.size());
  std::size_t N = nu + 2 * static_cast<std::size_t>(nv);
  std::vector<Edge3> es;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      if (g.has_edge(us[i], vs[j])) es.push_back({i, nu + j, nu + nv + j});
  Instance inst{ThreeGraph(N, std::move(es)), {}, {}, "ghat(" + bip.family + ")"};
  for (int i = 0; i < nu; ++i) add_class(inst, index_label("a", us[i]), VertexSet::of(N, {i}));
  for (int j = 0; j < nv; ++j) add_class(inst, index_label("b", vs[j]), VertexSet::of(N, {nu + j}));
  for (int j = 0; j < nv; ++j) add_class(inst, index_label("c", vs[j]), VertexSet::of(N, {nu + nv + j}));
  inst.labels["A"] = VertexSet::range(N, 0, nu);
  inst.labels["B"] = VertexSet::range(N, nu, nu + nv);
  inst.labels["C"] = VertexSet::range(N, nu + nv, nu + 2 * nv);
  return inst;
}

Instance uhat(int k) {
  if (k < 1) throw DomainError("uhat: k must be positive");
  guard(k <= 6, "uhat: k above size guard 6");
  std::size_t N = 2 * static_cast<std::size_t>(k) + (std::size_t{1} << k);
  std::vector<Edge3> es;
  for (unsigned s = 0; s < (1u << k); ++s)
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) es.push_back({i, k + i, static_cast<int>(2 * k + s)});
  Instance inst{ThreeGraph(N, std::move(es)), {}, {}, "uhat(" + std::to_string(k) + ")"};
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("a", i), VertexSet::of(N, {i - 1}));
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("c", i), VertexSet::of(N, {k + i - 1}));
  for (unsigned s = 0; s < (1u << k); ++s)
    add_class(inst, set_label("b", s), VertexSet::of(N, {static_cast<int>(2 * k + s)}));
  inst.labels["A"] = VertexSet::range(N, 0, k);
  inst.labels["C"] = VertexSet::range(N, k, 2 * k);
  inst.labels["B"] = VertexSet::range(N, 2 * k, static_cast<int>(N));
  return inst;
}

Instance blowup(const Instance& base, const std::vector<int>& sizes, bool simple, const Fill& fill) {
  std::size_t bn = base.n();
  if (sizes.size() != bn) throw DomainError("blowup: one size per base vertex required");
  std::vector<int> start(bn + 1, 0);
  for (std::size_t u = 0; u < bn; ++u) {
    if (sizes[u] < 1) throw DomainError("blowup: class sizes must be positive");
    start[u + 1] = start[u] + sizes[u];
  }
  std::size_t N = start[bn];
  guard(N <= 4096, "blowup: more than 4096 vertices");
  std::vector<int> cls(N);
  for (std::size_t u = 0; u < bn; ++u)
    for (int v = start[u]; v < start[u + 1]; ++v) cls[v] = static_cast<int>(u);
  if (!simple && !fill) throw DomainError("blowup: non-simple blow-up needs a fill rule");

  Instance inst;
  inst.family = "blowup(" + base.family + ")";
  if (base.graph.index() == 0) {
    const Graph& g = base.g();
    guard(N <= 4096, "blowup: too many vertices");
    std::vector<Edge2> es;
    for (int a = 0; a < static_cast<int>(N); ++a)
      for (int b = a + 1; b < static_cast<int>(N); ++b) {
        bool e = cls[a] == cls[b] ? (!simple && fill({a, b})) : g.has_edge(cls[a], cls[b]);
        if (e) es.push_back({a, b});
      }
    inst.graph = Graph(N, std::move(es));
  } else {
    const ThreeGraph& h = base.h();
    guard(N <= 512, "blowup: 3-graph blow-up above 512 vertices");
    std::vector<Edge3> es;
    if (simple) {
      for (auto& e : h.edges())
        for (int a = start[e[0]]; a < start[e[0] + 1]; ++a)
          for (int b = start[e[1]]; b < start[e[1] + 1]; ++b)
            for (int c = start[e[2]]; c < start[e[2] + 1]; ++c) es.push_back({a, b, c});
    } else {
      for (int a = 0; a < static_cast<int>(N); ++a)
        for (int b = a + 1; b < static_cast<int>(N); ++b)
          for (int c = b + 1; c < static_cast<int>(N); ++c) {
            bool distinct = cls[a] != cls[b] && cls[b] != cls[c] && cls[a] != cls[c];
            bool e = distinct ? h.has_edge(cls[a], cls[b], cls[c]) : fill({a, b, c});
            if (e) es.push_back({a, b, c});
          }
    }
    inst.graph = ThreeGraph(N, std::move(es));
  }

  auto lift = [&](const VertexSet& s) {
    VertexSet t(N);
    s.for_each([&](int u) {
      for (int v = start[u]; v < start[u + 1]; ++v) t.insert(v);
    });
    return t;
  };
  for (auto& [name, s] : base.labels) inst.labels[name] = lift(s);
  bool singleton_classes = base.classes.size() == bn;
  for (auto& c : base.classes)
    if (base.at(c).size() != 1) singleton_classes = false;
  if (singleton_classes) {
    inst.classes = base.classes;
  } else {
    for (std::size_t u = 0; u < bn; ++u) {
      auto name = index_label("class", static_cast<int>(u));
      inst.labels[name] = VertexSet::range(N, start[u], start[u + 1]);
      inst.classes.push_back(name);
    }
  }
  return inst;
}

Instance blowup(const AnyGraph& base, const std::vector<int>& sizes, bool simple, const Fill& fill) {
  Instance b{base, {}, {}, "base"};
  return blowup(b, sizes, simple, fill);
}

Instance blowup(const Instance& base, int size) {
  return blowup(base, std::vector<int>(base.n(), size), true, {});
}

bool is_blowup_of(const AnyGraph& g, const AnyGraph& base, const Partition& classes) {
  if (g.index() != base.index()) throw DomainError("is_blowup_of: arity mismatch");
  if (classes.size() != order(base)) throw DomainError("is_blowup_of: part count differs from base order");
  if (classes.n() != order(g)) throw DomainError("is_blowup_of: partition is over the wrong vertex set");
  std::size_t n = order(g);
  if (g.index() == 0) {
    const auto& G = std::get<Graph>(g);
    const auto& B = std::get<Graph>(base);
    for (int a = 0; a < static_cast<int>(n); ++a)
      for (int b = a + 1; b < static_cast<int>(n); ++b) {
        int ca = classes.part_of(a), cb = classes.part_of(b);
        if (ca != cb && G.has_edge(a, b) != B.has_edge(ca, cb)) return false;
      }
    return true;
  }
  const auto& H = std::get<ThreeGraph>(g);
  const auto& B = std::get<ThreeGraph>(base);
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = a + 1; b < static_cast<int>(n); ++b)
      for (int c = b + 1; c < static_cast<int>(n); ++c) {
        int ca = classes.part_of(a), cb = classes.part_of(b), cc = classes.part_of(c);
        if (ca == cb || cb == cc || ca == cc) continue;
        if (H.has_edge(a, b, c) != B.has_edge(ca, cb, cc)) return false;
      }
  return true;
}

bool is_uv_copy(const Graph& g, IrrKind pattern, const std::vector<int>& aList, const std::vector<int>& bList,
                const VertexSet* u, const VertexSet* v) {
  if (aList.size() != bList.size()) throw DomainError("is_uv_copy: lists differ in length");
  if (pattern == IrrKind::none) return false;
  std::vector<int> all(aList);
  all.insert(all.end(), bList.begin(), bList.end());
  for (int x : all)
    if (x < 0 || static_cast<std::size_t>(x) >= g.n()) throw DomainError("is_uv_copy: vertex out of range");
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (u)
    for (int x : aList)
      if (!u->contains(x)) return false;
  if (v)
    for (int x : bList)
      if (!v->contains(x)) return false;
  int k = static_cast<int>(aList.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.has_edge(aList[i], bList[j]) != irr_adjacent(pattern, i + 1, j + 1)) return false;
  return true;
}

Instance gen_hkn(int k, int n) {
  if (k < 1 || n < 1) throw DomainError("gen_hkn: k and n must be positive");
  guard(k <= 4, "gen_hkn: k above size guard 4");
  std::size_t N = (2 * static_cast<std::size_t>(k) + (std::size_t{1} << k)) * n;
  guard(N <= 512, "gen_hkn: more than 512 vertices");
  auto ublock = [&](int i) { return (i - 1) * n; };
  auto vblock = [&](int i) { return (k + i - 1) * n; };
  auto wblock = [&](unsigned s) { return static_cast<int>(2 * k + s) * n; };
  std::vector<Edge3> es;
  for (unsigned s = 0; s < (1u << k); ++s)
    for (int i = 1; i <= k; ++i)
      if (s >> (i - 1) & 1)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) es.push_back({ublock(i) + a, vblock(i) + b, wblock(s) + c});
  Instance inst{ThreeGraph(N, std::move(es)), {}, {}, "H(" + std::to_string(k) + "," + std::to_string(n) + ")"};
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("U", i), VertexSet::range(N, ublock(i), ublock(i) + n));
  for (int i = 1; i <= k; ++i) add_class(inst, index_label("V", i), VertexSet::range(N, vblock(i), vblock(i) + n));
  for (unsigned s = 0; s < (1u << k); ++s)
    add_class(inst, set_label("W", s), VertexSet::range(N, wblock(s), wblock(s) + n));
  inst.labels["U"] = VertexSet::range(N, 0, k * n);
  inst.labels["V"] = VertexSet::range(N, k * n, 2 * k * n);
  inst.labels["W"] = VertexSet::range(N, 2 * k * n, static_cast<int>(N));
  return inst;
}

namespace {
// V_1..V_K of size blk, then one block per subset of size wsize
Instance uk_layered(int K, int blk, int wsize, const std::string& wname, const std::string& fam) {
  std::size_t N = static_cast<std::size_t>(K) * blk + (std::size_t{1} << K) * wsize;
  guard(N <= 4096, fam + ": more than 4096 vertices");
  auto wstart = [&](unsigned s) { return K * blk + static_cast<int>(s) * wsize; };
  std::vector<Edge2> es;
  for (unsigned s = 0; s < (1u << K); ++s)
    for (int i = 1; i <= K; ++i)
      if (s >> (i - 1) & 1)
        for (int a = 0; a < blk; ++a)
          for (int b = 0; b < wsize; ++b) es.push_back({(i - 1) * blk + a, wstart(s) + b});
  Instance inst{Graph(N, std::move(es)), {}, {}, fam};
  for (int i = 1; i <= K; ++i) add_class(inst, index_label("V", i), VertexSet::range(N, (i - 1) * blk, i * blk));
  for (unsigned s = 0; s < (1u << K); ++s)
    add_class(inst, set_label(wname, s), VertexSet::range(N, wstart(s), wstart(s) + wsize));
  inst.labels["V"] = VertexSet::range(N, 0, K * blk);
  inst.labels[wname] = VertexSet::range(N, K * blk, static_cast<int>(N));
  return inst;
}
}  // namespace

UkBlowupLb gen_uk_blowup_lb(int K, int n, int smallSide) {
  if (K < 1 || n < 1 || smallSide < 1) throw DomainError("gen_uk_blowup_lb: parameters must be positive");
  guard(K <= 6, "gen_uk_blowup_lb: K above size guard 6");
  long long total = (1LL << K) * n;
  int N = static_cast<int>((total + K - 1) / K);
  if (smallSide > N) throw DomainError("gen_uk_blowup_lb: smallSide exceeds the blow-up size");
  std::string tag = "(" + std::to_string(K) + "," + std::to_string(n) + "," + std::to_string(smallSide) + ")";
  UkBlowupLb out{uk_layered(K, N, N, "W", "ukblowup" + tag), uk_layered(K, N, smallSide, "U", "ukblowup_lb" + tag), N};
  return out;
}

}  // namespace reglab::families
