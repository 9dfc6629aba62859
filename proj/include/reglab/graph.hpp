#pragma once

#include "reglab/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace reglab {

using Edge2 = std::array<int, 2>;
using Edge3 = std::array<int, 3>;

// Simple graph on 0..n-1; edges stored sorted as {i<j}.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge2> edges);

  static constexpr int arity = 2;
  std::size_t n() const { return n_; }
  const std::vector<Edge2>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int a, int b) const { return a != b && adj_[a].contains(b); }
  const VertexSet& adj(int v) const { return adj_[v]; }
  std::size_t degree(int v) const { return adj_[v].size(); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge2> edges_;
  std::vector<VertexSet> adj_;
};

// 3-uniform hypergraph on 0..n-1; edges stored sorted as {i<j<k}.
// Pair links are kept as a flat bitset table.
class ThreeGraph {
 public:
  ThreeGraph() = default;
  ThreeGraph(std::size_t n, std::vector<Edge3> edges);

  static constexpr int arity = 3;
  std::size_t n() const { return n_; }
  const std::vector<Edge3>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int a, int b, int c) const {
    return (link_row(a, b)[c >> 6] >> (c & 63)) & 1;
  }
  // {c : abc in E}
  VertexSet link(int a, int b) const;
  const std::uint64_t* link_row(int a, int b) const { return &links_[(a * n_ + b) * words_]; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge3> edges_;
  std::vector<std::uint64_t> links_;
};

using AnyGraph = std::variant<Graph, ThreeGraph>;

inline std::size_t order(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.n(); }, g);
}
inline int arity(const AnyGraph& g) { return g.index() == 0 ? 2 : 3; }

// A partition of 0..n-1 into nonempty parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t n, std::vector<VertexSet> parts);
  Partition(std::size_t n, const std::vector<std::vector<int>>& parts);
  static Partition singleton_parts(std::size_t n);
  static Partition trivial(std::size_t n);
  // restricted growth string: label[v] = part index
  static Partition from_labels(const std::vector<int>& labels);

  std::size_t n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& operator[](std::size_t i) const { return parts_[i]; }
  int part_of(int v) const { return owner_[v]; }
  // parts reordered by least element
  Partition canonical() const;
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.canonical().parts_ == b.canonical().parts_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> parts_;
  std::vector<int> owner_;
};

}  // namespace reglab
