#include "reglab/core.hpp"

#include "reglab/errors.hpp"

#include <algorithm>
#include <set>

namespace reglab::core {

namespace {
void same_universe(std::size_t n, const VertexSet& s) {
  if (s.universe() != n) throw DomainError("vertex set universe does not match graph order");
}
void nonempty(const VertexSet& s) {
  if (s.empty()) throw DomainError("empty side");
}
void check_vertex(int v, std::size_t n) {
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw DomainError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
}
}  // namespace

std::uint64_t count2(const Graph& g, const VertexSet& x, const VertexSet& y) {
  same_universe(g.n(), x);
  same_universe(g.n(), y);
  std::uint64_t c = 0;
  x.for_each([&](int a) { c += g.adj(a).intersection_size(y); });
  return c;
}

std::uint64_t count3(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z) {
  same_universe(h.n(), x);
  same_universe(h.n(), y);
  same_universe(h.n(), z);
  const auto& zw = z.words();
  std::uint64_t c = 0;
  x.for_each([&](int a) {
    y.for_each([&](int b) {
      const auto* row = h.link_row(a, b);
      for (std::size_t i = 0; i < h.words(); ++i) c += __builtin_popcountll(row[i] & zw[i]);
    });
  });
  return c;
}

Rational density2(const Graph& g, const VertexSet& x, const VertexSet& y) {
  nonempty(x);
  nonempty(y);
  return Rational(static_cast<long long>(count2(g, x, y)), static_cast<long long>(x.size() * y.size()));
}

Rational density3(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z) {
  nonempty(x);
  nonempty(y);
  nonempty(z);
  return Rational(static_cast<long long>(count3(h, x, y, z)),
                  static_cast<long long>(x.size() * y.size() * z.size()));
}

template <class G>
static Rational delta_impl(const G& a, const G& b, long long perms) {
  if (a.n() != b.n()) throw DomainError("delta_close: graphs of different order");
  if (a.n() == 0) return Rational(0);
  std::vector<typename std::decay_t<decltype(a.edges())>::value_type> diff;
  std::set_symmetric_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                std::back_inserter(diff));
  BigInt den = boost::multiprecision::pow(BigInt(a.n()), G::arity);
  return Rational(BigInt(perms) * diff.size(), den);
}

Rational delta_close(const Graph& a, const Graph& b) { return delta_impl(a, b, 2); }
Rational delta_close(const ThreeGraph& a, const ThreeGraph& b) { return delta_impl(a, b, 6); }

std::vector<std::size_t> averaging_split(const VertexSet& a, const VertexSet& host, std::span<const VertexSet> parts,
                                         const Rational& aFrac, const Rational& bFrac) {
  if (aFrac <= 0 || aFrac >= 1 || bFrac <= 0 || bFrac >= 1)
    throw DomainError("averaging_split: fractions must lie in (0,1)");
  if (!a.subset_of(host)) throw DomainError("averaging_split: a is not inside host");
  VertexSet seen(host.universe());
  for (const auto& p : parts) {
    if (p.intersects(seen) || !p.subset_of(host)) throw DomainError("averaging_split: parts do not partition host");
    seen |= p;
  }
  if (seen != host) throw DomainError("averaging_split: parts do not cover host");
  const auto hs = static_cast<long long>(host.size());
  if (Rational(static_cast<long long>(a.size())) < (1 - aFrac * bFrac) * hs)
    throw ContractError("averaging_split: |a| < (1 - aFrac*bFrac)|host|");

  std::vector<std::size_t> sigma;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto ys = static_cast<long long>(parts[i].size());
    if (Rational(static_cast<long long>(a.intersection_size(parts[i]))) >= (1 - aFrac) * ys) {
      sigma.push_back(i);
      covered += parts[i].size();
    }
  }
  if (Rational(static_cast<long long>(covered)) < (1 - bFrac) * hs)
    throw ContractError("averaging_split: union of selected parts is smaller than (1 - bFrac)|host|");
  return sigma;
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
  same_universe(g.n(), s);
  auto map = s.to_vector();
  std::vector<int> inv(g.n(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
  std::vector<Edge2> es;
  for (auto& e : g.edges())
    if (inv[e[0]] >= 0 && inv[e[1]] >= 0) es.push_back({inv[e[0]], inv[e[1]]});
  return {Graph(map.size(), std::move(es)), std::move(map)};
}

InducedThreeGraph induced(const ThreeGraph& h, const VertexSet& s) {
  same_universe(h.n(), s);
  auto map = s.to_vector();
  std::vector<int> inv(h.n(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
  std::vector<Edge3> es;
  for (auto& e : h.edges())
    if (inv[e[0]] >= 0 && inv[e[1]] >= 0 && inv[e[2]] >= 0) es.push_back({inv[e[0]], inv[e[1]], inv[e[2]]});
  return {ThreeGraph(map.size(), std::move(es)), std::move(map)};
}

std::vector<Edge2> k2_product(const VertexSet& x, const VertexSet& y) {
  std::set<Edge2> out;
  x.for_each([&](int a) {
    y.for_each([&](int b) {
      if (a != b) out.insert({std::min(a, b), std::max(a, b)});
    });
  });
  return {out.begin(), out.end()};
}

std::vector<Edge3> k3_product(const VertexSet& x, const VertexSet& y, const VertexSet& z) {
  std::set<Edge3> out;
  x.for_each([&](int a) {
    y.for_each([&](int b) {
      if (a == b) return;
      z.for_each([&](int c) {
        if (c == a || c == b) return;
        Edge3 e{a, b, c};
        std::sort(e.begin(), e.end());
        out.insert(e);
      });
    });
  });
  return {out.begin(), out.end()};
}

VertexSet neighborhood(const Graph& g, int v) {
  check_vertex(v, g.n());
  return g.adj(v);
}

std::vector<Edge2> neighborhood(const ThreeGraph& h, int v) {
  check_vertex(v, h.n());
  std::vector<Edge2> out;
  for (auto& e : h.edges()) {
    if (e[0] == v) out.push_back({e[1], e[2]});
    else if (e[1] == v) out.push_back({e[0], e[2]});
    else if (e[2] == v) out.push_back({e[0], e[1]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet pair_neighborhood(const ThreeGraph& h, int v, int w) {
  check_vertex(v, h.n());
  check_vertex(w, h.n());
  return h.link(v, w);
}

}  // namespace reglab::core
