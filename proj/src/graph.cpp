#include "reglab/graph.hpp"

#include "reglab/errors.hpp"

#include <algorithm>

namespace reglab {

namespace {
void check_vertex(int v, std::size_t n) {
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw DomainError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
}
}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge2> edges) : n_(n), adj_(n, VertexSet(n)) {
  for (auto& e : edges) {
    check_vertex(e[0], n);
    check_vertex(e[1], n);
    if (e[0] == e[1]) throw DomainError("loop at vertex " + std::to_string(e[0]));
    std::sort(e.begin(), e.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto& e : edges_) {
    adj_[e[0]].insert(e[1]);
    adj_[e[1]].insert(e[0]);
  }
}

ThreeGraph::ThreeGraph(std::size_t n, std::vector<Edge3> edges)
    : n_(n), words_((n + 63) / 64), links_(n * n * ((n + 63) / 64), 0) {
  for (auto& e : edges) {
    for (int v : e) check_vertex(v, n);
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
      throw DomainError("3-edge with repeated vertex " + std::to_string(e[1]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  auto set = [&](int a, int b, int c) { links_[(a * n_ + b) * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); };
  for (auto& e : edges_) {
    int a = e[0], b = e[1], c = e[2];
    set(a, b, c); set(b, a, c);
    set(a, c, b); set(c, a, b);
    set(b, c, a); set(c, b, a);
  }
}

VertexSet ThreeGraph::link(int a, int b) const {
  check_vertex(a, n_);
  check_vertex(b, n_);
  VertexSet s(n_);
  const auto* row = link_row(a, b);
  for (std::size_t i = 0; i < n_; ++i)
    if ((row[i >> 6] >> (i & 63)) & 1) s.insert(static_cast<int>(i));
  return s;
}

Partition::Partition(std::size_t n, std::vector<VertexSet> parts) : n_(n), parts_(std::move(parts)), owner_(n, -1) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].universe() != n) throw DomainError("partition part over wrong universe");
    if (parts_[i].empty()) throw DomainError("partition part " + std::to_string(i) + " is empty");
    parts_[i].for_each([&](int v) {
      if (owner_[v] != -1) throw DomainError("vertex " + std::to_string(v) + " appears in two parts");
      owner_[v] = static_cast<int>(i);
    });
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner_[v] == -1) throw DomainError("vertex " + std::to_string(v) + " not covered by partition");
}

static std::vector<VertexSet> to_sets(std::size_t n, const std::vector<std::vector<int>>& parts) {
  std::vector<VertexSet> out;
  for (auto& p : parts) out.push_back(VertexSet::of(n, std::span<const int>(p)));
  return out;
}

Partition::Partition(std::size_t n, const std::vector<std::vector<int>>& parts) : Partition(n, to_sets(n, parts)) {}

Partition Partition::singleton_parts(std::size_t n) {
  std::vector<VertexSet> ps;
  for (std::size_t v = 0; v < n; ++v) ps.push_back(VertexSet::of(n, {static_cast<int>(v)}));
  return Partition(n, std::move(ps));
}

Partition Partition::trivial(std::size_t n) {
  if (n == 0) return Partition(0, std::vector<VertexSet>{});
  return Partition(n, std::vector<VertexSet>{VertexSet::full(n)});
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  int m = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<VertexSet> ps(m, VertexSet(labels.size()));
  for (std::size_t v = 0; v < labels.size(); ++v) ps[labels[v]].insert(static_cast<int>(v));
  std::erase_if(ps, [](const VertexSet& s) { return s.empty(); });
  return Partition(labels.size(), std::move(ps));
}

Partition Partition::canonical() const {
  auto ps = parts_;
  std::sort(ps.begin(), ps.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return Partition(n_, std::move(ps));
}

}  // namespace reglab
