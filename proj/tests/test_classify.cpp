#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "primegraph/classify.hpp"

using namespace pg;

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Graph k4_minus_edge() { return fx::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}); }

Graph triangle_pendant() { return fx::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}}); }

Graph triangle_isolated() { return fx::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

// g plus a disjoint copy of h with prefixed ids.
Graph disjoint(const Graph& g, const Graph& h, const std::string& prefix) {
  std::vector<std::string> ids = g.vertices();
  for (const auto& v : h.vertices()) ids.push_back(prefix + v);
  Graph out(ids);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(prefix + u, prefix + v);
  return out;
}

Graph path(std::size_t n) {
  Graph g = fx::empty(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST(Solvable, Examples) {
  EXPECT_TRUE(classify_solvable(fx::empty(5)).accepted);
  const auto c5 = classify_solvable(fx::cycle(5));
  EXPECT_TRUE(c5.accepted);
  EXPECT_EQ(c5.condition_tag, "solvable");
  const auto k3 = classify_solvable(fx::complete(3));
  EXPECT_FALSE(k3.accepted);
  EXPECT_EQ(k3.refutation_kind, "triangle");
  EXPECT_EQ(k3.refutation.rfind("triangle {", 0), 0u);
}

TEST(Solvable, TriangleFreeButNot3Colorable) {
  // Groetzsch graph: triangle-free, chromatic number 4.
  Graph g = fx::empty(11);
  const Edges e = {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}, {"5", "1"}, {"5", "4"},
                   {"6", "0"}, {"6", "2"}, {"7", "1"}, {"7", "3"}, {"8", "2"}, {"8", "4"}, {"9", "3"},
                   {"9", "0"}, {"10", "5"}, {"10", "6"}, {"10", "7"}, {"10", "8"}, {"10", "9"}};
  for (const auto& [u, v] : e) g.add_edge(u, v);
  const auto v = classify_solvable(g);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.refutation_kind, "not-3-colorable");
}

TEST(A7, Examples) {
  const auto v = classify_A7(k4_minus_edge());
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.condition_tag, "A7:2.1");
  EXPECT_FALSE(classify_A7(fx::complete(4)).accepted);
}

TEST(A7, ClauseTwoFourFixture) {
  const Graph g = fx::a7_clause_2_4();
  const auto v = classify_A7(g);
  ASSERT_TRUE(v.accepted) << v.refutation;
  EXPECT_EQ(v.condition_tag, "A7:2.4");
  EXPECT_EQ(recheck(g, v), "");
  EXPECT_EQ(role_set(v).size(), 4u);
}

TEST(TriangleFreeFamily, Examples) {
  EXPECT_TRUE(classify_trianglefree_family(fx::cycle(5), "A9").accepted);
  EXPECT_FALSE(classify_trianglefree_family(triangle_isolated(), "A9").accepted);
}

TEST(SpoonFamily, Examples) {
  const auto iso = classify_spoon_family(disjoint(triangle_isolated(), fx::cycle(5), "z"), "A8");
  EXPECT_TRUE(iso.accepted);
  EXPECT_EQ(iso.condition_tag, "spoon:2");
  const auto pend = classify_spoon_family(triangle_pendant(), "A8");
  EXPECT_TRUE(pend.accepted);
  EXPECT_EQ(pend.condition_tag, "spoon:3");
  const Graph two = disjoint(fx::complete(3), fx::complete(3), "z");
  EXPECT_FALSE(classify_spoon_family(two, "A8").accepted);
}

TEST(PslFamily, Examples) {
  const Graph fig = fx::psl35_clause_3();
  const auto v = classify_pslfam(fig, "PSL(3,5)");
  ASSERT_TRUE(v.accepted) << v.refutation;
  EXPECT_EQ(v.condition_tag, "PSLfam:3");
  EXPECT_EQ(recheck(fig, v), "");

  const auto bad = classify_pslfam(fx::psl35_bad_coloring(), "PSL(3,5)");
  EXPECT_FALSE(bad.accepted);
  EXPECT_EQ(bad.refutation_kind, "coloring-constraint");

  const auto iso = classify_pslfam(triangle_isolated(), "PSL(3,5)");
  EXPECT_TRUE(iso.accepted);
  EXPECT_EQ(iso.condition_tag, "PSLfam:2");
}

TEST(PslFamily, SiblingClauseNoted) {
  // The pendant graph plus an isolated vertex fits both clauses.
  Graph g = triangle_pendant();
  g.add_vertex("e");
  const auto v = classify_pslfam(g, "U3(4)");
  ASSERT_TRUE(v.accepted);
  EXPECT_EQ(v.condition_tag, "PSLfam:3");
  bool noted = false;
  for (const auto& t : v.trace) noted = noted || t.find("clause 2 also matches") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Mathieu, Examples) {
  const auto m11 = classify_M11(k4_minus_edge());
  EXPECT_TRUE(m11.accepted);
  EXPECT_EQ(m11.condition_tag, "M11:2.1");
  const auto m12 = classify_M12(triangle_pendant());
  EXPECT_TRUE(m12.accepted);
  EXPECT_EQ(m12.condition_tag, "M12:2");
}

TEST(Mathieu, SharedFixture) {
  const Graph g = fx::m11_m12_shared();
  const auto a = classify_M11(g), b = classify_M12(g);
  ASSERT_TRUE(a.accepted) << a.refutation;
  ASSERT_TRUE(b.accepted) << b.refutation;
  EXPECT_EQ(recheck(g, a), "");
  EXPECT_EQ(recheck(g, b), "");
}

TEST(ComponentFamilies, K4PlusFiveCycle) {
  const Graph g = disjoint(fx::complete(4), fx::cycle(5), "z");
  const auto v = classify_PSL34(g);
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.condition_tag, "PSL(3,4):2");
  EXPECT_TRUE(partial_coloring_clause(v.condition_tag));
  EXPECT_FALSE(classify_G2_3(g).accepted);
  EXPECT_FALSE(classify_U43(g).accepted);
}

TEST(ComponentFamilies, K4MinusEdgePlusPath) {
  const Graph g = disjoint(k4_minus_edge(), path(3), "z");
  EXPECT_TRUE(classify_PSL34(g).accepted);
  EXPECT_TRUE(classify_G2_3(g).accepted);
  EXPECT_TRUE(classify_U43(g).accepted);
}

TEST(ComponentFamilies, ExternalEdgeFromX) {
  Graph g = triangle_pendant();
  g.add_vertex("e");
  g.add_edge("d", "e");
  for (auto f : {classify_G2_3, classify_PSL34, classify_U43}) {
    const auto v = f(g);
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.refutation_kind, "no-structural-match");
  }
}

TEST(A5, Examples) {
  const auto t = classify_A5(fx::complete(3));
  EXPECT_TRUE(t.accepted);
  EXPECT_EQ(t.condition_tag, "A5:2.1");
  const Graph six = fx::a5_clause_2_3();
  const auto v = classify_A5(six);
  ASSERT_TRUE(v.accepted) << v.refutation;
  EXPECT_EQ(v.condition_tag, "A5:2.3");
  EXPECT_EQ(recheck(six, v), "");
  EXPECT_FALSE(classify_A5(fx::complete(4)).accepted);
}

TEST(ClassifyAll, EmptyGraphAcceptedEverywhere) {
  for (const auto& [f, v] : classify_all(fx::empty(4))) EXPECT_TRUE(v.accepted) << f;
}

TEST(ClassifyAll, K4OnlyPSL34) {
  std::set<std::string> acc;
  for (const auto& [f, v] : classify_all(fx::complete(4)))
    if (v.accepted) acc.insert(f);
  EXPECT_EQ(acc, (std::set<std::string>{"PSL(3,4)"}));
}

TEST(ClassifyAll, K4MinusEdge) {
  std::set<std::string> acc;
  for (const auto& [f, v] : classify_all(k4_minus_edge()))
    if (v.accepted) acc.insert(f);
  EXPECT_EQ(acc, (std::set<std::string>{"A7", "M11", "G2(3)", "U4(3)", "PSL(3,4)"}));
}

TEST(ClassifyAll, UnknownFamilyThrows) {
  EXPECT_THROW(classify(fx::empty(2), "Monster"), InputError);
  EXPECT_THROW(classify(fx::empty(2), "Sz(8)"), InputError);
}

TEST(ClassifyProperty, RecheckAcceptsEveryVerdict) {
  std::mt19937_64 rng(31);
  const auto families = classified_families();
  for (int k = 0; k < 150; ++k) {
    const Graph g = fx::random_graph(rng, 5 + k % 4, 0.2 + 0.05 * (k % 5));
    for (const auto& f : families) {
      const auto v = classify(g, f);
      if (v.accepted) {
        EXPECT_EQ(recheck(g, v), "") << f << "\n" << graph_to_edge_list(g);
      } else {
        EXPECT_FALSE(v.refutation.empty());
      }
    }
  }
}

TEST(ClassifyProperty, RecheckCatchesTamperedColoring) {
  const Graph g = fx::a7_clause_2_4();
  auto v = classify_A7(g);
  ASSERT_TRUE(v.accepted);
  // Give an edge's endpoints the same color.
  const auto [u, w] = g.edges().front();
  (*v.coloring)[u] = (*v.coloring)[w];
  EXPECT_NE(recheck(g, v), "");
}

TEST(ClassifyProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(32);
  const auto families = classified_families();
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 4 + k % 4;
    const Graph g = fx::random_graph(rng, n, 0.35);
    const Graph h = fx::relabel(g, fx::random_perm(rng, n), "u");
    for (const auto& f : families) {
      const auto a = classify(g, f), b = classify(h, f);
      EXPECT_EQ(a.accepted, b.accepted) << f;
      EXPECT_EQ(a.condition_tag, b.condition_tag) << f;
    }
  }
}

TEST(ClassifyProperty, VerdictJsonRoundTrip) {
  const Graph g = fx::a7_clause_2_4();
  for (const auto& f : {"A7", "M11", "solvable", "PSL(3,4)"}) {
    const auto v = classify(g, f);
    const auto w = verdict_from_json(json::parse(verdict_to_json(v).dump()));
    EXPECT_EQ(w.accepted, v.accepted);
    EXPECT_EQ(w.condition_tag, v.condition_tag);
    EXPECT_EQ(w.assignment, v.assignment);
    EXPECT_EQ(w.coloring, v.coloring);
    EXPECT_EQ(w.refutation_kind, v.refutation_kind);
  }
}

TEST(ClassifyProperty, EveryTraceNotesInclusionReading) {
  const auto v = classify_A7(k4_minus_edge());
  EXPECT_NE(std::find(v.trace.begin(), v.trace.end(), "subset relations are read as non-strict inclusion"),
            v.trace.end());
}
