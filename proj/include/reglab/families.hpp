#pragma once

#include "reglab/graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reglab::families {

// A generated graph with named vertex sets. `classes` lists the labels
// whose sets form the generator's class partition, in vertex order.
struct Instance {
  AnyGraph graph;
  std::map<std::string, VertexSet> labels;
  std::vector<std::string> classes;
  std::string family;

  const Graph& g() const { return std::get<Graph>(graph); }
  const ThreeGraph& h() const { return std::get<ThreeGraph>(graph); }
  std::size_t n() const { return order(graph); }
  bool has(const std::string& label) const { return labels.count(label) != 0; }
  const VertexSet& at(const std::string& label) const;  // DomainError if missing
  int vertex(const std::string& label) const;           // singleton label -> vertex
  Partition class_partition() const;
};

// "b_{1,3}", "W_{}"; indices are 1-based
std::string set_label(const std::string& prefix, unsigned mask);
std::string index_label(const std::string& prefix, int i);

Instance gen_powerset_graph(int k);
Instance gen_halfgraph(int k);
Instance gen_matching(int k);
Instance gen_comatching(int k);

enum class IrrKind { half, matching, comatching, none };
const char* to_string(IrrKind k);
bool irr_adjacent(IrrKind k, int i, int j);  // pattern entry for a_i b_j, 1-based

// Which of H(k), M(k), co-M(k) the cross pairs realize; only pairs
// (aOrder[i], bOrder[j]) are inspected.
IrrKind is_irr_member(const Graph& g, const std::vector<int>& aOrder, const std::vector<int>& bOrder);

Instance bip_double(const Graph& g);
Instance trip_triple(const ThreeGraph& h);
// requires labels "U" and "V"
Instance otimes(int n, const Instance& bip);
Instance ghat(const Instance& bip);
Instance uhat(int k);

using Fill = std::function<bool(const std::vector<int>&)>;
// Class u of the base becomes sizes[u] consecutive vertices. Within
// repeated-class tuples, `fill` decides (never consulted when simple).
Instance blowup(const Instance& base, const std::vector<int>& sizes, bool simple = true, const Fill& fill = {});
Instance blowup(const AnyGraph& base, const std::vector<int>& sizes, bool simple = true, const Fill& fill = {});
Instance blowup(const Instance& base, int size);

bool is_blowup_of(const AnyGraph& g, const AnyGraph& base, const Partition& classes);

// a_i b_j adjacency matches the pattern; lists must be distinct and
// disjoint. When U/V are given the lists must lie inside them.
bool is_uv_copy(const Graph& g, IrrKind pattern, const std::vector<int>& aList, const std::vector<int>& bList,
                const VertexSet* u = nullptr, const VertexSet* v = nullptr);

Instance gen_hkn(int k, int n);

struct UkBlowupLb {
  Instance gamma;  // simple N-blowup of U(K), labels V_i, W_S
  Instance g;      // each W_S shrunk to smallSide, labels V_i, U_S
  int blowup_size;
};
UkBlowupLb gen_uk_blowup_lb(int K, int n, int smallSide);

}  // namespace reglab::families
