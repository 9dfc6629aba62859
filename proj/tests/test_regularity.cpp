#include "reglab/core.hpp"
#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "reglab/regularity.hpp"
#include "util.hpp"

using namespace reglab;
using namespace reglab::regularity;

namespace {

// a witness must be admissible and at gap > eps
void check_witness(const AnyGraph& g, const std::vector<VertexSet>& cell, const Verdict& v, const Threshold& eps) {
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  REQUIRE(w.subsets.size() == cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    CHECK(w.subsets[i].subset_of(cell[i]));
    CHECK(w.subsets[i].size() >= eps.min_size(cell[i].size()));
  }
  Rational d = g.index() == 0 ? core::density2(std::get<Graph>(g), w.subsets[0], w.subsets[1])
                              : core::density3(std::get<ThreeGraph>(g), w.subsets[0], w.subsets[1], w.subsets[2]);
  CHECK(d == w.sub_density);
  CHECK(w.gap == (d - v.density).abs());
  CHECK(eps.below(w.gap));
}

}  // namespace

TEST_SUITE("regularity") {
  TEST_CASE("trivial cells are regular") {
    Graph kb(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(check_pair_exact(kb, vs(6, {0, 1, 2}), vs(6, {3, 4, 5}), R(1, 100)).regular());
    CHECK(check_pair_exact(Graph(6, {}), vs(6, {0, 1, 2}), vs(6, {3, 4, 5}), R(1, 100)).regular());
    std::vector<Edge3> all;
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b)
        for (int c = 4; c < 6; ++c) all.push_back({a, b, c});
    ThreeGraph t(6, all);
    CHECK(check_triple_exact(t, vs(6, {0, 1}), vs(6, {2, 3}), vs(6, {4, 5}), R(1, 100)).regular());
    CHECK(check_triple_exact(ThreeGraph(6, {}), vs(6, {0, 1}), vs(6, {2, 3}), vs(6, {4, 5}), R(1, 100)).regular());
  }

  TEST_CASE("half-graph H(4) is irregular at 1/4") {
    auto h = families::gen_halfgraph(4);
    auto x = h.at("a-side"), y = h.at("b-side");
    auto v = check_pair_exact(h.g(), x, y, R(1, 4));
    CHECK(v.status == Status::irregular);
    CHECK(v.density == R(5, 8));
    check_witness(h.graph, {x, y}, v, R(1, 4));
    CHECK(v.witness->gap == R(5, 8));
    CHECK(v.witness->sub_density == R(0));
    CHECK(v.witness->subsets[0].size() == 1);
    CHECK(v.witness->subsets[1] == vs(8, {4}));
  }

  TEST_CASE("exact pair check matches the naive oracle") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 120; ++t) {
      std::size_t a = 2 + rng() % 5, b = 2 + rng() % 5;
      Graph g = oracle::random_bipartite(a, b, 0.2 + 0.6 * (t % 3) / 2.0, rng);
      oracle::Set xs, ys;
      for (int i = 0; i < static_cast<int>(a); ++i) xs.push_back(i);
      for (int i = 0; i < static_cast<int>(b); ++i) ys.push_back(static_cast<int>(a) + i);
      Rational eps[] = {R(1, 8), R(1, 4), R(1, 3), R(1, 2)};
      for (const auto& e : eps) {
        auto X = VertexSet::of(a + b, xs), Y = VertexSet::of(a + b, ys);
        auto v = check_pair_exact(g, X, Y, e);
        CHECK(v.regular() == oracle::pair_regular(g, xs, ys, {e, 1}));
        if (!v.regular()) check_witness(g, {X, Y}, v, e);
        auto fast = check_pair_exact(g, X, Y, e, {22, true});
        CHECK(fast.regular() == v.regular());
      }
      auto cube = Threshold::root(R(1, 8), 3);
      auto v3 = check_pair_exact(g, VertexSet::of(a + b, xs), VertexSet::of(a + b, ys), cube);
      CHECK(v3.regular() == oracle::pair_regular(g, xs, ys, {R(1, 8), 3}));
    }
  }

  TEST_CASE("overlapping sides count ordered pairs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
      Graph g = oracle::random_graph(7, 0.5, rng);
      oracle::Set xs{0, 1, 2, 3}, ys{2, 3, 4, 5, 6};
      auto v = check_pair_exact(g, VertexSet::of(7, xs), VertexSet::of(7, ys), R(1, 4));
      CHECK(v.regular() == oracle::pair_regular(g, xs, ys, {R(1, 4), 1}));
    }
  }

  TEST_CASE("exact triple check matches the naive oracle") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
      ThreeGraph h = oracle::random_three_graph(9, 0.5, rng);
      oracle::Set x{0, 1, 2}, y{3, 4, 5}, z{6, 7, 8};
      for (const auto& e : {R(1, 4), R(1, 2)}) {
        auto v = check_triple_exact(h, VertexSet::of(9, x), VertexSet::of(9, y), VertexSet::of(9, z), e);
        CHECK(v.regular() == oracle::triple_regular(h, x, y, z, {e, 1}));
        if (!v.regular()) check_witness(h, {VertexSet::of(9, x), VertexSet::of(9, y), VertexSet::of(9, z)}, v, e);
      }
    }
  }

  TEST_CASE("hkn(2,2) cell is irregular at 1/8") {
    auto inst = families::gen_hkn(2, 2);
    auto x = inst.at("U"), y = inst.at("V");
    auto z = inst.at("W_{1}") | inst.at("W_{2}");
    auto v = check_triple_exact(inst.h(), x, y, z, R(1, 8));
    CHECK(v.status == Status::irregular);
    CHECK(v.density > R(0));
    check_witness(inst.graph, {x, y, z}, v, R(1, 8));
    // mismatched indices give an empty admissible sub-cell
    auto a = inst.at("U_1"), b = inst.at("V_2"), c = inst.at("W_{1}");
    CHECK(core::density3(inst.h(), a, b, c) == R(0));
    CHECK(a.size() * 8 >= x.size());
    CHECK((v.density - R(0)) > R(1, 8));
  }

  TEST_CASE("capacity guard") {
    auto h = families::gen_halfgraph(24);
    CHECK_THROWS_AS(check_pair_exact(h.g(), h.at("U"), h.at("V"), R(1, 100)), CapacityError);
    CHECK_THROWS_AS(check_pair_exact(h.g(), VertexSet(48), h.at("V"), R(1, 4)), DomainError);
  }

  TEST_CASE("partition checks") {
    Graph e(5, {});
    auto v = check_partition(e, Partition::trivial(5), R(1, 4));
    CHECK(v.pass);
    CHECK(v.covered_mass == R(1));
    auto m = families::blowup(families::gen_matching(2), 2);
    CHECK(check_partition(m.graph, m.class_partition(), R(1, 10)).pass);
    auto p3 = families::blowup(families::Instance{path_graph(3), {}, {}, "P3"}, 4);
    auto one = check_partition(p3.graph, Partition::trivial(12), R(1, 10));
    CHECK_FALSE(one.pass);
    REQUIRE(one.cells.size() == 1);
    REQUIRE(one.cells[0].witness);
    CHECK(one.cells[0].witness->gap > R(1, 10));
    CHECK(check_partition(p3.graph, p3.class_partition(), R(1, 10)).pass);
  }

  TEST_CASE("partition check matches the naive oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
      Graph g = oracle::random_graph(8, 0.5, rng);
      std::vector<int> lab(8);
      for (auto& l : lab) l = static_cast<int>(rng() % 3);
      // relabel into a growth string
      std::vector<int> map(3, -1);
      int next = 0;
      for (auto& l : lab) {
        if (map[l] < 0) map[l] = next++;
        l = map[l];
      }
      auto p = Partition::from_labels(lab);
      for (const auto& e : {R(1, 4), R(1, 2)}) {
        CHECK(check_partition(g, p, e).pass == oracle::partition_ok(g, sets_of(p), e));
        CHECK(check_hom_partition(g, p, e).pass == oracle::partition_ok(g, sets_of(p), e, true));
        PartitionOptions early;
        early.early_exit = true;
        CHECK(check_partition(g, p, e, early).pass == oracle::partition_ok(g, sets_of(p), e));
      }
    }
    for (int t = 0; t < 10; ++t) {
      ThreeGraph h = oracle::random_three_graph(6, 0.5, rng);
      auto p = Partition::from_labels({0, 0, 1, 1, 2, 2});
      CHECK(check_partition(h, p, R(1, 2)).pass == oracle::partition_ok(h, sets_of(p), R(1, 2)));
    }
  }

  TEST_CASE("allowed uncovered") {
    CHECK(allowed_uncovered(10, 2, R(1, 4)) == 25);
    CHECK(allowed_uncovered(3, 3, R(1, 2)) == 13);
    CHECK(allowed_uncovered(10, 2, Threshold::root(R(1, 4), 2)) == 50);
  }

  TEST_CASE("homogeneity") {
    CHECK(is_homogeneous_density(R(0), R(1, 100)));
    CHECK_FALSE(is_homogeneous_density(R(1, 2), R(1, 4)));
    CHECK_FALSE(is_homogeneous_density(R(1, 4), R(1, 4)));
    CHECK_FALSE(is_homogeneous_density(R(3, 4), R(1, 4)));
    CHECK(is_homogeneous_density(R(4, 5), R(1, 4)));
    Graph m2(4, {{0, 2}, {1, 3}});
    CHECK_FALSE(check_hom_pair(m2, vs(4, {0, 1}), vs(4, {2, 3}), R(1, 4)).homogeneous);
    CHECK(check_hom_pair(Graph(4, {}), vs(4, {0, 1}), vs(4, {2, 3}), R(1, 4)).homogeneous);
    CHECK_THROWS_AS(check_hom_pair(m2, VertexSet(4), vs(4, {2}), R(1, 4)), DomainError);
  }

  TEST_CASE("heuristic search only refutes") {
    Graph kb(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto v = witness_search_heuristic(kb, {vs(4, {0, 1}), vs(4, {2, 3})}, R(1, 8), 50, 1);
    CHECK(v.status == Status::unknown);
    CHECK(witness_search_heuristic(Graph(4, {}), {vs(4, {0, 1}), vs(4, {2, 3})}, R(1, 8), 50, 1).status ==
          Status::unknown);
    auto h = families::gen_halfgraph(12);
    auto w = witness_search_heuristic(h.graph, {h.at("U"), h.at("V")}, R(1, 8), 200, 7);
    CHECK(w.status == Status::irregular);
    check_witness(h.graph, {h.at("U"), h.at("V")}, w, R(1, 8));
    auto again = witness_search_heuristic(h.graph, {h.at("U"), h.at("V")}, R(1, 8), 200, 7);
    CHECK(again.witness->subsets == w.witness->subsets);
    for (int k = 4; k <= 8; ++k) {
      auto hk = families::gen_halfgraph(k);
      auto hv = witness_search_heuristic(hk.graph, {hk.at("U"), hk.at("V")}, R(1, 8), 100, 3);
      auto ex = check_pair_exact(hk.g(), hk.at("U"), hk.at("V"), R(1, 8));
      if (hv.status == Status::irregular) {
        CHECK(ex.status == Status::irregular);
        check_witness(hk.graph, {hk.at("U"), hk.at("V")}, hv, R(1, 8));
      }
    }
  }

  TEST_CASE("slicing") {
    Graph kb(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    auto r = slicing_expectation(kb, vs(6, {0, 1, 2}), vs(6, {3, 4, 5}), vs(6, {0, 1}), vs(6, {3, 4}), R(1, 2),
                                 R(1, 2));
    CHECK(r.sub_density == R(1));
    CHECK(r.density_strictly_within);
    CHECK(r.subpair_regular);
    auto same = slicing_expectation(kb, vs(6, {0, 1, 2}), vs(6, {3, 4, 5}), vs(6, {0, 1, 2}), vs(6, {3, 4, 5}),
                                    R(1, 4), R(1));
    CHECK(same.density_strictly_within);
    auto h = families::gen_halfgraph(4);
    // H(4) is not 1/4-regular
    CHECK_THROWS_AS(slicing_expectation(h.g(), h.at("U"), h.at("V"), h.at("U"), h.at("V"), R(1, 4), R(1)),
                    ContractError);
    // x' below gamma |x|
    CHECK_THROWS_AS(
        slicing_expectation(kb, vs(6, {0, 1, 2}), vs(6, {3, 4, 5}), vs(6, {0}), vs(6, {3, 4}), R(1, 2), R(1, 2)),
        ContractError);
  }

  TEST_CASE("cache returns the stored verdict") {
    CellCache c;
    auto a = vs(4, {0, 1}), b = vs(4, {2, 3});
    c.put({&a, &b}, {Status::regular, R(1, 2)});
    REQUIRE(c.find({&b, &a}));
    CHECK(c.find({&b, &a})->density == R(1, 2));
    CHECK(c.size() == 1);
  }
}
