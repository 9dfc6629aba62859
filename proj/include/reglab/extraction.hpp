#pragma once

#include "reglab/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reglab::extraction {

struct UvCopy {
  families::IrrKind pattern = families::IrrKind::none;
  std::vector<int> a;  // inside U
  std::vector<int> b;  // inside V
};

constexpr int kBruteGuard = 3;

// Lexicographically least (a, b) copy of H(k), M(k) or co-M(k); equal
// lists are resolved in that pattern order.
std::optional<UvCopy> find_uv_copy_bruteforce(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                                              int guard = kBruteGuard);

// For each a-tuple in order, visits the least b-list of every pattern it
// realizes; stop by returning true.
void for_each_uv_copy(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                      const std::function<bool(const UvCopy&)>& visit, int guard = kBruteGuard);

struct IterativeResult {
  std::optional<UvCopy> copy;
  int phase1_steps = 0;
  int kept_after_first_filter = 0;
  int pivots = 0;
  int final_length = 0;
  std::string orientation;  // how the realized copy was read off
};

// The halving construction; every pair in u must be separated by some
// vertex of v other than the pair itself (ContractError otherwise).
IterativeResult extract_uv_copy_iterative(const Graph& g, const VertexSet& u, const VertexSet& v, int k,
                                          int budget = 100000);

struct IrrWitness {
  families::IrrKind kind;
  std::vector<int> a;
  std::vector<int> b;
};
// g must be irreducible; SearchExhausted when no copy survives deletion.
IrrWitness find_irr_subgraph(const Graph& g, int k);

struct Equiv3Witness {
  std::string branch;  // "singletons" or "pairs"
  bool hypothesis_ok = false;
  std::string hypothesis_note;
  Graph gamma;
  std::vector<std::string> gamma_labels;  // one per vertex of gamma
  UvCopy copy;                            // in gamma
  std::vector<int> trip_x, trip_y, trip_z;
  bool trip_induced_exact = false;  // Trip(h) restricted to the image is exactly ghat
};
Equiv3Witness equiv3_trip_witness(const ThreeGraph& h, int k);

}  // namespace reglab::extraction
