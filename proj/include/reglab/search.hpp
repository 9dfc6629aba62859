#pragma once

#include "reglab/graph.hpp"
#include "reglab/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reglab::search {

enum class Kind { regular, homogeneous };
const char* to_string(Kind k);

struct SearchOptions {
  std::size_t n_cap = 12;
  unsigned threads = 0;  // 0: REGLAB_THREADS, else 1
};

// REGLAB_THREADS, clamped to [1, 64]; 1 when unset or malformed
unsigned thread_hint();

// Set partitions of 0..n-1 with exactly t blocks as restricted growth
// strings, in lexicographic order. Stop by returning true.
void for_each_rgs(std::size_t n, std::size_t t, const std::function<bool(const std::vector<int>&)>& visit);

struct MinPartition {
  std::size_t size = 0;
  Partition partition;  // the lexicographically least optimum
  bool minimal_proven = true;
  std::uint64_t examined = 0;
};

MinPartition min_partition_exhaustive(const AnyGraph& g, const Threshold& eps, Kind kind = Kind::regular,
                                      const SearchOptions& opt = {});

inline constexpr const char* kDisclaimer =
    "finite-size evidence only; desk-scale sizes do not establish asymptotic growth rates";

struct SweepRecord {
  std::string family;
  std::string params;
  Rational eps;
  std::size_t vertices = 0;
  std::size_t size_lower = 0;
  std::size_t size_upper = 0;
  std::string method;  // exhaustive | constructed-upper+witness-lower
  bool certified = false;
  double seconds = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::map<std::string, std::string> classification;  // eps -> constant | growing | mixed
  std::string disclaimer = kDisclaimer;
};

// family: blowup:M2 | blowup:H2 | blowup:coM2 | blowup:U1 | blowup:U2 |
// edgeless | complete | halfgraph | hkn:<k>
SweepResult growth_sweep(const std::string& family, const std::vector<int>& scales, const std::vector<Rational>& eps,
                         Kind kind = Kind::regular, const SearchOptions& opt = {});
std::string sweep_csv(const SweepResult& r, bool with_timing = true);

struct LbReport {
  Rational s1, s2, eps;
  int n = 0;
  int m = 0;
  bool degenerate = false;  // m == 1
  std::size_t vertices = 0;
  BigInt bound;  // ceil(eps^-s2)
  std::optional<std::size_t> size;
  std::optional<bool> bound_met;
  std::string method;
  bool certified = false;
  std::string disclaimer = kDisclaimer;
};
LbReport lb_blowup_experiment(const Rational& s1, const Rational& s2, const Rational& eps, int n,
                              const SearchOptions& opt = {});

// least integer N >= x^(p/q) for x >= 1
BigInt ceil_rational_power(const Rational& x, const Rational& e);

struct TowerValue {
  std::string kind;
  int arg = 0;
  bool overflow = false;
  BigInt value;
  std::optional<BigInt> exponent;  // value == 2^exponent when set
  std::string str() const;
};
constexpr std::size_t kTowerBitBudget = std::size_t{1} << 20;
TowerValue tower(int i);
TowerValue chung_f(int x);
TowerValue tower_f(int x, bool literal = true);

struct UkLbReport {
  int K = 0, n = 0, small_side = 0;
  Rational eps;
  std::size_t vertices = 0;
  std::optional<std::size_t> size;
  std::size_t size_lower = 0;
  std::string method;
  bool certified = false;
  std::string disclaimer = kDisclaimer;
};
UkLbReport ukblowup_lb_verify(int K, int n, int smallSide, const Rational& eps, std::size_t cap = 12);

}  // namespace reglab::search
