#pragma once

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"
#include "reglab/regularity.hpp"

#include <vector>

namespace reglab::reduction {

enum class ClassKind { singleton, clique, independent, mixed };
const char* to_string(ClassKind k);

struct TwinClasses {
  Partition partition;  // parts ordered by least element
  std::vector<ClassKind> kinds;
  bool irreducible = false;
};

TwinClasses twin_classes_graph(const Graph& g);
TwinClasses twin_classes_threegraph(const ThreeGraph& h);
TwinClasses twin_classes(const AnyGraph& g);

// the pairwise definition, used to validate classes
bool are_twins(const Graph& g, int x, int y);
bool are_twins(const ThreeGraph& h, int x, int y);

struct ClassPartitionCheck {
  TwinClasses classes;
  regularity::PartitionVerdict verdict;
};
ClassPartitionCheck class_partition_regular(const AnyGraph& g, const Threshold& eps);

struct Reduced {
  AnyGraph graph;
  std::vector<int> to_parent;
};
// keeps the least vertex of each class (two for 3-graph classes of size >= 2)
Reduced reduce(const AnyGraph& g);

}  // namespace reglab::reduction
