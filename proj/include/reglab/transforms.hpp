#pragma once

#include "reglab/families.hpp"
#include "reglab/regularity.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reglab::transforms {

struct Contract {
  std::string kind;  // "regular" or "homogeneous"
  Threshold threshold;
};

struct TransferReport {
  std::string transfer;
  std::string branch;  // "single-part" or "split"
  Partition input;
  Partition output;
  AnyGraph target;  // the graph the output partition lives on
  Contract input_contract;
  Contract output_contract;
  bool input_checked = false;
  bool input_ok = true;
  bool output_checked = false;
  bool verified = false;  // input holds (or unchecked), output holds, bound holds
  std::size_t claimed_bound = 0;
  std::size_t actual_parts = 0;
  std::optional<regularity::PartitionVerdict> output_verdict;
  std::map<std::string, std::string> extra;
};

struct TransferOptions {
  bool verify_input = true;
  bool verify_output = true;
};

// throws ContractError naming the failed piece
void require_verified(const TransferReport& r);

// Partition of Bip(g) restricted to A = all u-copies and B = w-copies of z2.
TransferReport bip_transfer(const Graph& g, const Partition& p, const Rational& eps,
                            const std::optional<VertexSet>& z2 = std::nullopt, const TransferOptions& opt = {});

// Partition of Trip(h) restricted to x-copies, y-copies of z2, z-copies of z3.
TransferReport trip_transfer(const ThreeGraph& h, const Partition& p, const Rational& eps,
                             const std::optional<VertexSet>& z2 = std::nullopt,
                             const std::optional<VertexSet>& z3 = std::nullopt, const TransferOptions& opt = {});

// p partitions n⊗g with n = max(|U|, |V|); the output partitions g.
TransferReport otimes_project(const families::Instance& bip, const Partition& p, const Rational& eps,
                              const TransferOptions& opt = {});

// bigH is a simple blow-up of ghat(g) carrying labels A, B, C. The output
// partitions the blown-up graph on A ∪ B (target), in increasing vertex order.
TransferReport blowup_hom_project(const families::Instance& bigH, const Partition& p, const Rational& eps,
                                  const TransferOptions& opt = {});

struct BlowupRegHom {
  int k1 = 0;  // number of b-classes
  regularity::PartitionVerdict hom;  // at 4*mu
  bool holds = false;
};
BlowupRegHom check_blowup_reg_is_hom(const families::Instance& bigH, const Partition& p, const Rational& mu,
                                     bool verify_regular = true);

struct ClassPartitionOptions {
  Rational min_eps{1, 16};
};
// inst is gen_hkn(k, n) or an induced piece of it, with labels U_i, V_i, W_S.
TransferReport exp_class_partition(const families::Instance& inst, const Rational& eps,
                                   const ClassPartitionOptions& opt = {});

struct TechOutcome {
  bool sparse = false;
  std::optional<std::array<int, 3>> aligned;  // f(i), 1-based
  Rational density;
};
TechOutcome tech_triple_classify(const ThreeGraph& h, const std::array<VertexSet, 3>& sides,
                                 const std::array<VertexSet, 3>& d, const Rational& eps, bool verify_regular = true);

}  // namespace reglab::transforms
