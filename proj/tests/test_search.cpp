#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "reglab/regularity.hpp"
#include "reglab/search.hpp"
#include "util.hpp"

using namespace reglab;
using namespace reglab::search;

TEST_SUITE("search") {
  TEST_CASE("restricted growth strings") {
    std::size_t total = 0;
    std::vector<std::vector<int>> seen;
    for (std::size_t t = 1; t <= 5; ++t)
      for_each_rgs(5, t, [&](const std::vector<int>& l) {
        seen.push_back(l);
        ++total;
        return false;
      });
    CHECK(total == 52);  // Bell(5)
    std::size_t s42 = 0;
    for_each_rgs(4, 2, [&](const std::vector<int>&) { return ++s42, false; });
    CHECK(s42 == 7);
    std::vector<int> first;
    for_each_rgs(4, 2, [&](const std::vector<int>& l) {
      first = l;
      return true;
    });
    CHECK(first == std::vector<int>{0, 0, 0, 1});
  }

  TEST_CASE("trivial minimal partitions") {
    CHECK(min_partition_exhaustive(Graph(6, {}), R(1, 4)).size == 1);
    // diagonal cells of a small clique are irregular: d(X,X) < 1
    CHECK(min_partition_exhaustive(complete_graph(6), R(1, 4)).size == oracle::min_partition(complete_graph(6), R(1, 4)));
    CHECK(min_partition_exhaustive(complete_graph(6), R(1, 4)).size == 4);
    CHECK(min_partition_exhaustive(complete_graph(9), R(1, 4)).size == 1);
    CHECK_THROWS_AS(min_partition_exhaustive(Graph(13, {}), R(1, 4)), CapacityError);
  }

  TEST_CASE("minimal partitions match the naive oracle") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 12; ++t) {
      Graph g = oracle::random_graph(6, 0.5, rng);
      for (const auto& e : {R(1, 8), R(1, 4)}) {
        auto r = min_partition_exhaustive(g, e);
        CHECK(r.size == oracle::min_partition(g, e));
        CHECK(oracle::partition_ok(g, sets_of(r.partition), e));
        auto hom = min_partition_exhaustive(g, e, Kind::homogeneous);
        CHECK(hom.size == oracle::min_partition(g, e, true));
      }
    }
    auto h = oracle::random_three_graph(5, 0.5, rng);
    CHECK(min_partition_exhaustive(h, R(1, 4)).size == oracle::min_partition(h, R(1, 4)));
  }

  TEST_CASE("minimal size is non-increasing in eps") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 6; ++t) {
      Graph g = oracle::random_graph(7, 0.5, rng);
      std::size_t prev = SIZE_MAX;
      for (const auto& e : {R(1, 16), R(1, 8), R(1, 4), R(1, 2)}) {
        auto s = min_partition_exhaustive(g, e).size;
        CHECK(s <= prev);
        prev = s;
      }
    }
  }

  TEST_CASE("threads do not change the answer") {
    auto g = families::blowup(families::gen_halfgraph(2), 2);
    SearchOptions one, four;
    one.threads = 1;
    four.threads = 4;
    auto a = min_partition_exhaustive(g.graph, R(1, 8), Kind::regular, one);
    auto b = min_partition_exhaustive(g.graph, R(1, 8), Kind::regular, four);
    CHECK(a.size == b.size);
    CHECK(a.partition == b.partition);
    CHECK(a.examined == b.examined);
  }

  TEST_CASE("sweeps") {
    auto m = growth_sweep("blowup:M2", {1, 2, 3}, {R(1, 4), R(1, 8)});
    for (auto& r : m.records) {
      CHECK(r.method == "exhaustive");
      CHECK(r.certified);
    }
    CHECK(m.classification.at("1/4").rfind("constant", 0) == 0);
    CHECK_FALSE(m.disclaimer.empty());
    auto e = growth_sweep("edgeless", {2, 5, 20}, {R(1, 4)});
    for (auto& r : e.records) CHECK(r.size_upper == 1);
    auto csv = sweep_csv(e, false);
    CHECK(csv.rfind("family,params,eps,size,method,certified,seconds\n", 0) == 0);
    CHECK(csv.find("edgeless,scale=20,1/4,1,") != std::string::npos);
    auto u = growth_sweep("ukblowup_lb:2:1", {1}, {R(1, 4)});
    CHECK(u.records[0].size_lower >= 2);
    CHECK_THROWS_AS(growth_sweep("nope", {1}, {R(1, 4)}), DomainError);
  }

  TEST_CASE("blow-ups of twin-reduced bases are constant") {
    // classCount = 4, eps <= 1/12
    auto s = growth_sweep("blowup:H2", {1, 2, 3}, {R(1, 12), R(1, 16)});
    for (auto& r : s.records) {
      CHECK(r.size_upper == 4);
      CHECK(r.certified);
    }
  }

  TEST_CASE("large sweeps fall back to bounds") {
    auto s = growth_sweep("blowup:P3", {5}, {R(1, 10)});
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].method == "constructed-upper+witness-lower");
    CHECK(s.records[0].size_lower == 2);
    CHECK(s.records[0].size_upper == 2);  // the two leaves of P3 are twins
    CHECK(s.records[0].certified);
    auto h = growth_sweep("halfgraph", {7}, {R(1, 4)});
    CHECK(h.records[0].size_upper == 14);
    CHECK_FALSE(h.records[0].certified);
  }

  TEST_CASE("lower-bound experiment") {
    auto d = lb_blowup_experiment(R(1, 3), R(3, 4), R(1, 2), 1);
    CHECK(d.m == 1);
    CHECK(d.degenerate);
    auto a = lb_blowup_experiment(R(1, 3), R(3, 4), R(1, 8), 1);
    CHECK(a.m == 2);
    CHECK(a.vertices == 4);
    CHECK(a.size);
    auto b = lb_blowup_experiment(R(1, 3), R(3, 4), R(1, 8), 2);
    CHECK(b.vertices == 8);
    CHECK(b.bound == 5);
    REQUIRE(b.size);
    REQUIRE(b.bound_met);
    CHECK(*b.bound_met == (*b.size >= 5));
    CHECK_FALSE(b.disclaimer.empty());
    CHECK_THROWS_AS(lb_blowup_experiment(R(1, 2), R(3, 4), R(1, 8), 1), DomainError);
    CHECK_THROWS_AS(lb_blowup_experiment(R(1, 4), R(3, 4), R(1, 2), 1), DomainError);  // 1 - s1 = s2
    CHECK_THROWS_AS(lb_blowup_experiment(R(1, 4), R(1, 2), R(1, 8), 1), DomainError);
  }

  TEST_CASE("rational powers round up exactly") {
    CHECK(ceil_rational_power(R(8), R(3, 4)) == 5);
    CHECK(ceil_rational_power(R(16), R(1, 2)) == 4);
    CHECK(ceil_rational_power(R(17), R(1, 2)) == 5);
    CHECK(ceil_rational_power(R(1), R(1, 2)) == 1);
  }

  TEST_CASE("tower arithmetic") {
    CHECK(tower(1).value == 1);
    CHECK(tower(5).value == 65536);
    for (int i = 2; i <= 6; ++i) CHECK(tower(i).value == (BigInt(1) << tower(i - 1).value.convert_to<std::size_t>()));
    CHECK(tower(6).str() == "2^65536");
    CHECK(tower(7).overflow);
    CHECK(chung_f(1).value == 3);
    CHECK(chung_f(3).value == 3);
    CHECK(chung_f(4).value == 2);
    CHECK(chung_f(5).value == 1);
    CHECK(tower_f(1, true).value == 3);
    CHECK(tower_f(2, true).value == 8);
    CHECK(tower_f(5, true).value == 4);
    CHECK(tower_f(1, false).value == 3);
    CHECK(tower_f(2, false).value == 8);
    CHECK(tower_f(3, false).value == 256);
    CHECK(tower_f(5, false).overflow);
    CHECK_THROWS_AS(tower(0), DomainError);
  }

  TEST_CASE("uk blow-up verification") {
    auto r = ukblowup_lb_verify(2, 1, 1, R(1, 4));
    CHECK(r.vertices == 8);
    REQUIRE(r.size);
    CHECK(*r.size >= 2);
    CHECK(r.certified);
    auto k1 = ukblowup_lb_verify(1, 1, 1, R(1, 4));
    CHECK(k1.size);
    auto same = ukblowup_lb_verify(1, 2, 2, R(1, 4));
    CHECK(same.size);
    auto big = ukblowup_lb_verify(3, 2, 1, R(1, 4));
    CHECK(big.method == "witness-lower");
    CHECK_FALSE(big.certified);
    CHECK_FALSE(big.disclaimer.empty());
  }
}
