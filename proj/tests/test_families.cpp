#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "util.hpp"

using namespace reglab;
using namespace reglab::families;

TEST_SUITE("families") {
  TEST_CASE("power-set graph sizes") {
    auto u1 = gen_powerset_graph(1);
    CHECK(u1.n() == 3);
    CHECK(u1.g().edge_count() == 1);
    CHECK(u1.g().has_edge(u1.vertex("a_1"), u1.vertex("b_{1}")));
    auto u2 = gen_powerset_graph(2);
    CHECK(u2.n() == 6);
    CHECK(u2.g().edge_count() == 4);
    for (auto [a, b] : {std::pair{"a_1", "b_{1}"}, {"a_1", "b_{1,2}"}, {"a_2", "b_{2}"}, {"a_2", "b_{1,2}"}})
      CHECK(u2.g().has_edge(u2.vertex(a), u2.vertex(b)));
    auto u3 = gen_powerset_graph(3);
    CHECK(u3.n() == 11);
    CHECK(u3.g().edge_count() == 12);
    CHECK(u2.has("b_{}"));
    CHECK_THROWS_AS(gen_powerset_graph(21), CapacityError);
  }

  TEST_CASE("irreducible patterns") {
    auto h2 = gen_halfgraph(2);
    CHECK(h2.g().edge_count() == 3);
    CHECK(h2.g().has_edge(h2.vertex("a_1"), h2.vertex("b_2")));
    CHECK_FALSE(h2.g().has_edge(h2.vertex("a_2"), h2.vertex("b_1")));
    CHECK(gen_matching(3).g().edge_count() == 3);
    auto cm = gen_comatching(2);
    CHECK(cm.g().edge_count() == 2);
    CHECK(cm.g().has_edge(cm.vertex("a_1"), cm.vertex("b_2")));
  }

  TEST_CASE("is_irr_member") {
    auto h3 = gen_halfgraph(3);
    CHECK(is_irr_member(h3.g(), {0, 1, 2}, {3, 4, 5}) == IrrKind::half);
    CHECK(is_irr_member(gen_matching(2).g(), {0, 1}, {2, 3}) == IrrKind::matching);
    Graph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(is_irr_member(k22, {0, 1}, {2, 3}) == IrrKind::none);
    CHECK(is_irr_member(k22, {1, 0}, {3, 2}) == IrrKind::none);
    CHECK_THROWS_AS(is_irr_member(k22, {0, 1}, {2}), DomainError);
  }

  TEST_CASE("bip_double") {
    auto b = bip_double(Graph(2, {{0, 1}}));
    CHECK(b.n() == 4);
    CHECK(b.g().edge_count() == 2);
    CHECK(b.g().has_edge(b.vertex("u_0"), b.vertex("w_1")));
    CHECK(b.g().has_edge(b.vertex("u_1"), b.vertex("w_0")));
    CHECK(bip_double(Graph(3, {})).g().edge_count() == 0);
    CHECK(bip_double(complete_graph(3)).g().edge_count() == 6);
  }

  TEST_CASE("trip_triple") {
    auto t = trip_triple(ThreeGraph(3, {{0, 1, 2}}));
    CHECK(t.n() == 9);
    CHECK(t.h().edge_count() == 6);
    CHECK(trip_triple(ThreeGraph(3, {})).h().edge_count() == 0);
    CHECK(trip_triple(ThreeGraph(4, {{0, 1, 2}, {0, 1, 3}})).h().edge_count() == 12);
  }

  TEST_CASE("otimes") {
    Instance e{Graph(2, {{0, 1}}), {{"U", vs(2, {0})}, {"V", vs(2, {1})}}, {}, "edge"};
    auto o = otimes(2, e);
    CHECK(o.n() == 4);
    CHECK(o.h().edge_count() == 2);
    CHECK(otimes(3, gen_powerset_graph(1)).h().edge_count() == 3);
    Instance none{Graph(4, {}), {{"U", vs(4, {0, 1})}, {"V", vs(4, {2, 3})}}, {}, "empty"};
    CHECK(otimes(2, none).h().edge_count() == 0);
    Instance bare{Graph(2, {{0, 1}}), {}, {}, "edge"};
    CHECK_THROWS_AS(otimes(1, bare), DomainError);
  }

  TEST_CASE("ghat and uhat") {
    Instance e{Graph(2, {{0, 1}}), {{"U", vs(2, {0})}, {"V", vs(2, {1})}}, {}, "edge"};
    auto g = ghat(e);
    CHECK(g.n() == 3);
    CHECK(g.h().edge_count() == 1);
    auto u = uhat(1);
    CHECK(u.n() == 4);
    CHECK(u.h().edge_count() == 1);
    CHECK(u.h().has_edge(u.vertex("a_1"), u.vertex("c_1"), u.vertex("b_{1}")));
    CHECK(u.has("b_{}"));
    Instance none{Graph(4, {}), {{"U", vs(4, {0, 1})}, {"V", vs(4, {2, 3})}}, {}, "empty"};
    CHECK(ghat(none).h().edge_count() == 0);
    Instance bare{Graph(2, {{0, 1}}), {}, {}, "edge"};
    CHECK_THROWS_AS(ghat(bare), DomainError);
  }

  TEST_CASE("blowups") {
    Graph edge(2, {{0, 1}});
    auto b = blowup(AnyGraph(edge), {2, 2});
    CHECK(b.g().edge_count() == 4);
    CHECK(is_blowup_of(b.graph, edge, b.class_partition()));
    auto id = blowup(gen_halfgraph(3), 1);
    CHECK(id.g().edges() == gen_halfgraph(3).g().edges());
    auto t = blowup(AnyGraph(ThreeGraph(3, {{0, 1, 2}})), {2, 2, 2});
    CHECK(t.h().edge_count() == 8);
    Graph k4 = complete_graph(4);
    // only cross cells are constrained, so K4 is a non-simple blow-up of an edge
    CHECK(is_blowup_of(k4, edge, Partition(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}})));
    CHECK_FALSE(is_blowup_of(k4, Graph(2, {}), Partition(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}})));
    CHECK_FALSE(is_blowup_of(b.graph, edge, Partition(4, std::vector<std::vector<int>>{{0, 2}, {1, 3}})));
    auto m = blowup(gen_matching(2), 3);
    CHECK(is_blowup_of(m.graph, gen_matching(2).graph, m.class_partition()));
    CHECK(m.has("a_1"));
    CHECK(m.at("a_1").size() == 3);
    CHECK_THROWS_AS(is_blowup_of(m.graph, gen_matching(2).graph, Partition::trivial(m.n())), DomainError);
  }

  TEST_CASE("non-simple blowup consults the fill") {
    Graph edge(2, {{0, 1}});
    auto b = blowup(AnyGraph(edge), {2, 2}, false, [](const std::vector<int>&) { return true; });
    CHECK(b.g().edge_count() == 6);
  }

  TEST_CASE("is_uv_copy") {
    for (int k = 1; k <= 8; ++k) {
      auto h = gen_halfgraph(k);
      std::vector<int> a, bl;
      for (int i = 0; i < k; ++i) {
        a.push_back(i);
        bl.push_back(k + i);
      }
      CHECK(is_uv_copy(h.g(), IrrKind::half, a, bl));
    }
    auto h3 = gen_halfgraph(3);
    CHECK_FALSE(is_uv_copy(h3.g(), IrrKind::half, {2, 1, 0}, {3, 4, 5}));
    CHECK(is_uv_copy(Graph(2, {{0, 1}}), IrrKind::matching, {0}, {1}));
    CHECK_THROWS_AS(is_uv_copy(h3.g(), IrrKind::half, {0, 1}, {3}), DomainError);
  }

  TEST_CASE("hkn") {
    auto a = gen_hkn(1, 1);
    CHECK(a.n() == 4);  // U_1, V_1, W_{}, W_{1}
    CHECK(a.h().edge_count() == 1);
    auto b = gen_hkn(2, 1);
    CHECK(b.n() == 8);
    CHECK(b.h().edge_count() == 4);
    CHECK(b.has("W_{1,2}"));
  }

  TEST_CASE("uk blowup lower-bound instance") {
    auto r = gen_uk_blowup_lb(2, 1, 1);
    CHECK(r.g.at("V").size() == 4);
    CHECK(r.g.at("U").size() == 4);
    CHECK(r.g.n() == 8);
    CHECK(r.blowup_size == 2);
    auto same = gen_uk_blowup_lb(2, 1, 2);
    CHECK(same.g.g().edges() == same.gamma.g().edges());
  }
}
