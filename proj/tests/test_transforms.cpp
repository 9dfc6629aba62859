#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "reglab/reduction.hpp"
#include "reglab/regularity.hpp"
#include "reglab/transforms.hpp"
#include "util.hpp"

using namespace reglab;
using namespace reglab::transforms;

namespace {

families::Instance edge_bip() {
  return {Graph(2, {{0, 1}}), {{"U", vs(2, {0})}, {"V", vs(2, {1})}}, {}, "edge"};
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("bip transfer on blow-ups") {
    auto g = families::blowup(families::gen_halfgraph(2), 2);
    auto tw = reduction::twin_classes(g.graph).partition;
    auto r = bip_transfer(g.g(), tw, R(1, 3));
    CHECK(r.verified);
    CHECK(r.input_ok);
    CHECK(r.actual_parts <= 2 * tw.size() + 1);
    CHECK(r.branch == "split");
    // independent re-check of the output on Bip(g)
    CHECK(oracle::partition_ok(r.target, sets_of(r.output), R(2, 3)));
    auto e = bip_transfer(Graph(4, {}), Partition::trivial(4), R(1, 3));
    CHECK(e.verified);
  }

  TEST_CASE("bip transfer single-part branch") {
    Graph g(10, {{0, 9}});
    auto r = bip_transfer(g, Partition::singleton_parts(10), R(1, 2), vs(10, {9}));
    CHECK(r.verified);
    CHECK(r.branch == "single-part");
    CHECK(r.output.size() == 1);
  }

  TEST_CASE("bip transfer reports a bad input") {
    auto h = families::gen_halfgraph(4);
    auto r = bip_transfer(h.g(), Partition::trivial(8), R(1, 3));
    CHECK(r.input_checked);
    CHECK_FALSE(r.input_ok);
    CHECK_FALSE(r.verified);
    CHECK_THROWS_AS(require_verified(r), ContractError);
  }

  TEST_CASE("trip transfer") {
    auto h = families::blowup(AnyGraph(ThreeGraph(3, {{0, 1, 2}})), {2, 2, 2});
    auto tw = reduction::twin_classes(h.graph).partition;
    auto r = trip_transfer(h.h(), tw, R(1, 2));
    CHECK(r.verified);
    CHECK(r.actual_parts <= 3 * tw.size() + 2);
    auto e = trip_transfer(ThreeGraph(3, {}), Partition::trivial(3), R(1, 2));
    CHECK(e.verified);
    ThreeGraph one(4, {{0, 1, 3}});
    auto s = trip_transfer(one, Partition::singleton_parts(4), R(2, 3), vs(4, {3}), vs(4, {3}));
    CHECK(s.branch == "single-part");
    CHECK(s.verified);
  }

  TEST_CASE("otimes projection") {
    auto e = edge_bip();
    auto big = families::otimes(1, e);
    auto r = otimes_project(e, Partition::singleton_parts(big.n()), R(1, 2));
    CHECK(r.verified);
    families::Instance k22{Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), {{"U", vs(4, {0, 1})}, {"V", vs(4, {2, 3})}},
                           {}, "K22"};
    auto big2 = families::otimes(2, k22);
    auto tw = reduction::twin_classes(big2.graph).partition;
    auto r2 = otimes_project(k22, tw, R(1, 2));
    CHECK(r2.verified);
    CHECK(r2.actual_parts <= 2 * tw.size() + 2);
    families::Instance bare{Graph(2, {{0, 1}}), {}, {}, "edge"};
    CHECK_THROWS_AS(otimes_project(bare, Partition::trivial(3), R(1, 2)), DomainError);
  }

  TEST_CASE("blow-up homogeneity projection") {
    auto big = families::blowup(families::ghat(edge_bip()), 2);
    auto tw = reduction::twin_classes(big.graph).partition;
    auto r = blowup_hom_project(big, tw, R(1, 4));
    CHECK(r.verified);
    CHECK(r.extra.count("achieved_threshold"));
    auto s = blowup_hom_project(big, Partition::singleton_parts(big.n()), R(1, 4));
    CHECK(s.verified);
    CHECK(s.output.size() == 4);
    auto coarse = blowup_hom_project(big, Partition::trivial(big.n()), R(1, 100));
    CHECK_FALSE(coarse.input_ok);
    CHECK_FALSE(coarse.verified);
  }

  TEST_CASE("regular blow-up partitions are homogeneous") {
    auto big = families::blowup(families::ghat(edge_bip()), 2);
    auto tw = reduction::twin_classes(big.graph).partition;
    auto r = check_blowup_reg_is_hom(big, tw, R(1, 8));
    CHECK(r.k1 == 1);
    CHECK(r.holds);
    CHECK(check_blowup_reg_is_hom(big, Partition::singleton_parts(big.n()), R(1, 8)).holds);
    CHECK_THROWS_AS(check_blowup_reg_is_hom(big, tw, R(1, 2)), ContractError);
  }

  TEST_CASE("hkn class partition") {
    auto h = families::gen_hkn(2, 3);
    for (const auto& e : {R(1, 2), R(1, 3)}) {
      auto r = exp_class_partition(h, e);
      CHECK(r.verified);
      CHECK(r.actual_parts <= r.claimed_bound);
      CHECK(r.extra.at("hom_at_eps") == "true");
    }
    auto one = exp_class_partition(families::gen_hkn(1, 4), R(1, 3));
    CHECK(one.verified);
    CHECK_THROWS_AS(exp_class_partition(h, R(1, 32)), CapacityError);
  }

  TEST_CASE("tech triple classification") {
    std::vector<Edge3> all;
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b)
        for (int c = 4; c < 6; ++c) all.push_back({a, b, c});
    ThreeGraph t(6, all);
    std::array<VertexSet, 3> sides{vs(6, {0, 1}), vs(6, {2, 3}), vs(6, {4, 5})};
    auto a = tech_triple_classify(t, sides, sides, R(1, 4));
    CHECK_FALSE(a.sparse);
    REQUIRE(a.aligned);
    CHECK(*a.aligned == std::array<int, 3>{1, 2, 3});
    std::array<VertexSet, 3> same{vs(6, {0}), vs(6, {1}), vs(6, {2, 3})};
    auto s = tech_triple_classify(t, sides, same, R(1, 4));
    CHECK(s.sparse);
    CHECK(s.density == R(0));
    CHECK_THROWS_AS(tech_triple_classify(t, sides, sides, R(1, 2)), ContractError);
  }
}
