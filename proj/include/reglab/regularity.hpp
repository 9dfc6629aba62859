#pragma once

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace reglab::regularity {

enum class Mode { exact, heuristic };
enum class Status { regular, irregular, unknown };
const char* to_string(Status s);

struct Witness {
  std::vector<VertexSet> subsets;  // in the order of the cell's sides
  Rational sub_density;
  Rational cell_density;
  Rational gap;
};

struct Verdict {
  Status status = Status::unknown;
  Mode mode = Mode::exact;
  Rational density;
  std::optional<Witness> witness;
  bool regular() const { return status == Status::regular; }
};

struct ExactOptions {
  // the enumerated sides may hold at most this many vertices in total
  unsigned max_enum_bits = 22;
  // return at the first violating witness instead of the maximal one
  bool stop_at_first = false;
};

// Exhaustive check. On failure the witness has maximal gap; among equal
// gaps the first one in enumeration order wins.
Verdict check_pair_exact(const Graph& g, const VertexSet& x, const VertexSet& y, const Threshold& eps,
                         const ExactOptions& opt = {});
Verdict check_triple_exact(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                           const Threshold& eps, const ExactOptions& opt = {});
Verdict check_cell_exact(const AnyGraph& g, const std::vector<VertexSet>& cell, const Threshold& eps,
                         const ExactOptions& opt = {});

struct HomVerdict {
  bool homogeneous;
  Rational density;
};
// density in [0, eps) or (1 - eps, 1]
HomVerdict check_hom_pair(const Graph& g, const VertexSet& x, const VertexSet& y, const Threshold& eps);
HomVerdict check_hom_triple(const ThreeGraph& h, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                            const Threshold& eps);
bool is_homogeneous_density(const Rational& d, const Threshold& eps);

// Only refutes: returns irregular with a witness, or unknown.
// Deterministic in (seed, trial index).
Verdict witness_search_heuristic(const AnyGraph& g, const std::vector<VertexSet>& cell, const Threshold& eps,
                                 int trials, std::uint64_t seed);

// Memo of cell verdicts keyed by the (sorted) vertex sets of a cell.
class CellCache {
 public:
  struct Entry {
    Status status;
    Rational density;
  };
  const Entry* find(const std::vector<const VertexSet*>& cell) const;
  void put(const std::vector<const VertexSet*>& cell, Entry e);
  std::size_t size() const { return map_.size(); }

 private:
  static std::string key(const std::vector<const VertexSet*>& cell);
  std::unordered_map<std::string, Entry> map_;
};

enum class CellKind { regular, homogeneous };

struct CellResult {
  std::vector<int> parts;  // sorted part indices
  Status status;           // regular/irregular, or homogeneous/not for the hom kind
  Rational density;
  std::uint64_t weight;  // ordered tuples of parts covered by this cell class
  std::optional<Witness> witness;
};

struct PartitionVerdict {
  bool pass = false;
  bool certified = true;  // false when heuristic cells were counted as covered
  bool complete = true;   // false after an early exit
  Rational covered_mass;  // fraction of n^k
  std::vector<CellResult> cells;
};

struct PartitionOptions {
  Mode mode = Mode::exact;
  CellKind kind = CellKind::regular;
  ExactOptions exact{};
  bool early_exit = false;
  bool keep_cells = true;
  CellCache* cache = nullptr;
  int heuristic_trials = 64;
  std::uint64_t seed = 1;
  // largest uncovered tuple count still passing; computed when absent
  std::optional<std::uint64_t> allowed_uncovered;
};

// Largest integer U with U / n^k <= eps.
std::uint64_t allowed_uncovered(std::size_t n, int k, const Threshold& eps);

PartitionVerdict check_partition(const AnyGraph& g, const Partition& p, const Threshold& eps,
                                 const PartitionOptions& opt = {});
PartitionVerdict check_hom_partition(const AnyGraph& g, const Partition& p, const Threshold& eps);

struct SlicingReport {
  Rational density;      // d(x, y)
  Rational sub_density;  // d(x', y')
  Threshold sub_threshold;
  bool subpair_regular;
  bool density_strictly_within;  // d' in (d - eps, d + eps)
  bool density_within;           // d' in [d - eps, d + eps]
};

SlicingReport slicing_expectation(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& xs,
                                  const VertexSet& ys, const Rational& eps, const Rational& gamma,
                                  bool verify_parent = true);

}  // namespace reglab::regularity
