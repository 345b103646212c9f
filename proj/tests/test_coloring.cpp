#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "primegraph/coloring.hpp"
#include "primegraph/io.hpp"

using namespace pg;

namespace {

Graph star3() { return fx::from_edges({"h", "x", "y", "z"}, {{"h", "x"}, {"h", "y"}, {"h", "z"}}); }

Orientation path_orientation(std::size_t arcs) {
  Orientation o;
  for (std::size_t i = 0; i <= arcs; ++i) o.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i < arcs; ++i) o.arcs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return o;
}

// Triangle a,b,c with d pendant on c and five spokes c-s_i-t_i, t_i on a 5-cycle.
Graph spoke_wheel() {
  std::vector<std::string> ids = {"a", "b", "c", "d"};
  std::vector<std::pair<std::string, std::string>> es = {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}};
  for (int i = 0; i < 5; ++i) {
    const std::string s = "s" + std::to_string(i), t = "t" + std::to_string(i);
    ids.push_back(s);
    ids.push_back(t);
    es.emplace_back("c", s);
    es.emplace_back(s, t);
    es.emplace_back(t, "t" + std::to_string((i + 1) % 5));
  }
  return fx::from_edges(ids, es);
}

}  // namespace

TEST(Coloring, TriangleUsesThreeColors) {
  const auto c = find_3coloring(fx::complete(3));
  ASSERT_TRUE(c);
  std::set<Color> used;
  for (const auto& [v, col] : *c) used.insert(col);
  EXPECT_EQ(used.size(), 3u);
}

TEST(Coloring, K4HasNone) { EXPECT_FALSE(find_3coloring(fx::complete(4))); }

TEST(Coloring, StarWithMonoLeaves) {
  const Graph g = star3();
  const auto c = find_3coloring(g, {{"x", "y", "z"}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->at("x"), c->at("y"));
  EXPECT_EQ(c->at("y"), c->at("z"));
  EXPECT_NE(c->at("h"), c->at("x"));
}

TEST(Coloring, MonoSetOverEdgeIsImpossible) {
  EXPECT_FALSE(find_3coloring(star3(), {{"h", "x"}}));
}

TEST(Coloring, SpokeWheelBlocksCommonColor) {
  const Graph g = spoke_wheel();
  EXPECT_TRUE(find_3coloring(g));
  const VertexSet spokes = {"s0", "s1", "s2", "s3", "s4"};
  EXPECT_FALSE(find_3coloring(g, {spokes}));
  EXPECT_FALSE(fx::brute_3colorable(g, {spokes}));
}

TEST(Coloring, FixedColorsRespected) {
  const Graph g = fx::cycle(4);
  const auto c = find_3coloring(g, {}, {{"0", Color::I}, {"2", Color::O}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->at("0"), Color::I);
  EXPECT_EQ(c->at("2"), Color::O);
  EXPECT_TRUE(is_proper(g, *c));
  EXPECT_FALSE(find_3coloring(g, {}, {{"0", Color::I}, {"1", Color::I}}));
}

TEST(Coloring, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, 6);
  for (int k = 0; k < 300; ++k) {
    const Graph g = fx::random_graph(rng, 7, 0.35 + 0.1 * (k % 4));
    std::vector<VertexSet> mono;
    if (k % 2) mono.push_back({g.id(pick(rng)), g.id(pick(rng)), g.id(pick(rng))});
    const bool expect = fx::brute_3colorable(g, mono);
    const auto got = find_3coloring(g, mono);
    ASSERT_EQ(got.has_value(), expect) << graph_to_edge_list(g);
    if (got) EXPECT_TRUE(satisfies(g, *got, mono));
  }
}

TEST(Coloring, ColorLetters) {
  for (Color c : {Color::O, Color::D, Color::I}) EXPECT_EQ(color_from_letter(color_letter(c)), c);
  EXPECT_THROW(color_from_letter('X'), InputError);
}

TEST(Orientation, PathLengths) {
  EXPECT_FALSE(has_3path(path_orientation(2)));
  EXPECT_TRUE(has_3path(path_orientation(3)));
}

TEST(Orientation, SingleArcLayers) {
  const Coloring c = ghrv_coloring(path_orientation(1));
  EXPECT_EQ(c.at("0"), Color::D);  // layer 1
  EXPECT_EQ(c.at("1"), Color::I);  // layer 0
}

TEST(Orientation, EmptyGraphAllLayerZero) {
  Orientation o{{"a", "b", "c"}, {}};
  for (const auto& [v, col] : ghrv_coloring(o)) EXPECT_EQ(col, Color::I);
}

TEST(Orientation, GhrvRejectsThreePath) { EXPECT_THROW(ghrv_coloring(path_orientation(3)), InputError); }

TEST(Orientation, ClassOrientationDirectsLowToHigh) {
  const Graph g = fx::from_edges({"o", "i"}, {{"o", "i"}});
  const auto ori = class_orientation(g, {{"o", Color::O}, {"i", Color::I}});
  ASSERT_EQ(ori.arcs.size(), 1u);
  EXPECT_EQ(ori.arcs[0], (std::pair<std::string, std::string>{"o", "i"}));
}

TEST(Orientation, AlternatingPath) {
  const Graph g = fx::from_edges({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}});
  const Coloring c = {{"0", Color::O}, {"1", Color::I}, {"2", Color::O}, {"3", Color::I}};
  const auto ori = class_orientation(g, c);
  for (const auto& [t, h] : ori.arcs) EXPECT_EQ(c.at(t), Color::O);
  EXPECT_FALSE(has_3path(ori));
}

TEST(Orientation, RoundTripThroughClassOrientation) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const Graph g = fx::random_graph(rng, 8, 0.4);
    const auto c = find_3coloring(g);
    if (!c) continue;
    const auto ori = class_orientation(g, *c);
    ASSERT_TRUE(orients(ori, g));
    ASSERT_FALSE(has_3path(ori));
    EXPECT_TRUE(is_proper(g, ghrv_coloring(ori)));
  }
}

TEST(Orientation, OrientsChecksEdgeSet) {
  const Graph g = fx::cycle(3);
  Orientation o{g.vertices(), {{"0", "1"}, {"1", "2"}}};
  EXPECT_FALSE(orients(o, g));
  o.arcs.emplace_back("0", "2");
  EXPECT_TRUE(orients(o, g));
  o.arcs.emplace_back("2", "0");
  EXPECT_FALSE(orients(o, g));
}
