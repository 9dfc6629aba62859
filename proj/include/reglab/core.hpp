#pragma once

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace reglab::core {

// Ordered-tuple counts |E-bar ∩ (X×Y)| and |E-bar ∩ (X×Y×Z)|.
// Sides may overlap.
std::uint64_t count2(const Graph& g, const VertexSet& x, const VertexSet& y);
std::uint64_t count3(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z);

Rational density2(const Graph& g, const VertexSet& x, const VertexSet& y);
Rational density3(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z);

// |E1-bar Δ E2-bar| / n^k
Rational delta_close(const Graph& a, const Graph& b);
Rational delta_close(const ThreeGraph& a, const ThreeGraph& b);

// Indices of the parts Y with |a ∩ Y| >= (1 - aFrac)|Y|. The parts must
// partition host and a must be a subset of host.
std::vector<std::size_t> averaging_split(const VertexSet& a, const VertexSet& host, std::span<const VertexSet> parts,
                                         const Rational& aFrac, const Rational& bFrac);

struct InducedGraph {
  Graph graph;
  std::vector<int> to_parent;  // new index -> old index
};
struct InducedThreeGraph {
  ThreeGraph graph;
  std::vector<int> to_parent;
};
InducedGraph induced(const Graph& g, const VertexSet& s);
InducedThreeGraph induced(const ThreeGraph& h, const VertexSet& s);

// K2[X,Y] and K3[X,Y,Z] as sorted lists of distinct sets
std::vector<Edge2> k2_product(const VertexSet& x, const VertexSet& y);
std::vector<Edge3> k3_product(const VertexSet& x, const VertexSet& y, const VertexSet& z);

VertexSet neighborhood(const Graph& g, int v);
std::vector<Edge2> neighborhood(const ThreeGraph& h, int v);
VertexSet pair_neighborhood(const ThreeGraph& h, int v, int w);

}  // namespace reglab::core
