#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "reglab/reduction.hpp"
#include "util.hpp"

using namespace reglab;
using namespace reglab::reduction;

namespace {

std::vector<oracle::Set> canon(std::vector<oracle::Set> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("graph twin classes") {
    auto k4 = twin_classes_graph(complete_graph(4));
    CHECK(k4.partition.size() == 1);
    CHECK(k4.kinds[0] == ClassKind::clique);
    CHECK_FALSE(k4.irreducible);
    auto h2 = twin_classes_graph(families::gen_halfgraph(2).g());
    CHECK(h2.partition.size() == 4);
    CHECK(h2.irreducible);
    auto k22 = twin_classes_graph(Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(k22.partition.size() == 2);
    CHECK(k22.kinds[0] == ClassKind::independent);
  }

  TEST_CASE("graph twin classes match the oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      auto base = oracle::random_graph(4, 0.5, rng);
      std::vector<int> sizes{1 + int(rng() % 3), 1 + int(rng() % 3), 1 + int(rng() % 3), 1 + int(rng() % 3)};
      auto g = families::blowup(AnyGraph(base), sizes).g();
      CHECK(canon(sets_of(twin_classes_graph(g).partition)) == canon(oracle::twin_classes(g)));
      auto r = oracle::random_graph(7, 0.5, rng);
      CHECK(canon(sets_of(twin_classes_graph(r).partition)) == canon(oracle::twin_classes(r)));
      for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
          if (x != y) CHECK(are_twins(r, x, y) == oracle::twins(r, x, y));
    }
  }

  TEST_CASE("3-graph twin classes") {
    auto e = twin_classes_threegraph(ThreeGraph(4, {}));
    CHECK(e.partition.size() == 1);
    CHECK_FALSE(e.irreducible);
    ThreeGraph one(3, {{0, 1, 2}});
    CHECK(canon(sets_of(twin_classes_threegraph(one).partition)) == canon(oracle::twin_classes(one)));
    auto u = twin_classes_threegraph(families::uhat(2).h());
    CHECK(u.irreducible);
    for (auto& p : u.partition.parts()) CHECK(p.size() <= 2);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
      auto h = oracle::random_three_graph(6, 0.5, rng);
      CHECK(canon(sets_of(twin_classes_threegraph(h).partition)) == canon(oracle::twin_classes(h)));
      auto b = families::blowup(AnyGraph(oracle::random_three_graph(3, 0.7, rng)), {2, 1, 2}).h();
      CHECK(canon(sets_of(twin_classes_threegraph(b).partition)) == canon(oracle::twin_classes(b)));
    }
  }

  TEST_CASE("class partitions") {
    auto m = families::blowup(families::gen_matching(2), 3);
    auto c = class_partition_regular(m.graph, R(1, 10));
    CHECK(c.classes.partition.size() == 4);
    CHECK(c.verdict.pass);
    auto h3 = families::gen_halfgraph(3);
    auto s = class_partition_regular(h3.graph, R(1, 10));
    CHECK(s.classes.partition.size() == 6);
    CHECK(s.verdict.pass);
    auto t = families::blowup(AnyGraph(ThreeGraph(3, {{0, 1, 2}})), {2, 2, 2});
    auto tc = class_partition_regular(t.graph, R(1, 10));
    CHECK(tc.classes.partition.size() == 3);
    CHECK(tc.verdict.pass);
  }

  TEST_CASE("reduce") {
    auto r = reduce(Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(std::get<Graph>(r.graph).n() == 2);
    CHECK(std::get<Graph>(r.graph).edge_count() == 1);
    auto h3 = families::gen_halfgraph(3);
    auto id = reduce(h3.graph);
    CHECK(std::get<Graph>(id.graph).edges() == h3.g().edges());
    auto b = families::blowup(families::gen_halfgraph(2), 2);
    auto back = reduce(b.graph);
    CHECK(std::get<Graph>(back.graph).edges() == families::gen_halfgraph(2).g().edges());
    auto t = reduce(families::blowup(AnyGraph(ThreeGraph(3, {{0, 1, 2}})), {3, 3, 3}).graph);
    CHECK(std::get<ThreeGraph>(t.graph).n() == 6);
  }
}
