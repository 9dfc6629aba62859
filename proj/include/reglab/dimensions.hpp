#pragma once

#include "reglab/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace reglab::dimensions {

// Graph shattering: a[i] adjacent to b[S] exactly when bit i of S is set.
// For 3-graphs the shattered objects are the pairs (a[i], b[i]) and the
// witnesses are c[S].
struct ShatterCertificate {
  int k = 0;
  std::vector<int> a;
  std::vector<int> b;  // graphs: indexed by mask; 3-graphs: partners of a
  std::vector<int> c;  // 3-graphs only, indexed by mask
};

struct VcResult {
  int value = 0;
  bool at_least = false;  // a certificate exists at kMax, larger values unexplored
  std::optional<ShatterCertificate> certificate;
};

constexpr int kVcGuard = 4;

VcResult vc_graph(const Graph& g, int kMax = kVcGuard);
VcResult vc_threegraph(const ThreeGraph& h, int kMax = kVcGuard);

bool verify_certificate(const Graph& g, const ShatterCertificate& c);
bool verify_certificate(const ThreeGraph& h, const ShatterCertificate& c);

// H_x = {yz : xyz in F}, on the same vertex set
Graph slice_graph(const ThreeGraph& h, int x);

struct SvcResult {
  int value = 0;
  bool at_least = false;
  int slice_vertex = -1;
  std::optional<ShatterCertificate> certificate;
};
SvcResult svc(const ThreeGraph& h, int kMax = kVcGuard);

}  // namespace reglab::dimensions
