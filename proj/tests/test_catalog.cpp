#include <gtest/gtest.h>

#include <algorithm>

#include "primegraph/catalog.hpp"

using namespace pg;

namespace {

std::set<int> center_orders(const std::string& base) {
  std::set<int> out;
  for (const auto& c : catalog().covers_of(base)) out.insert(c.center_order);
  return out;
}

}  // namespace

TEST(Catalog, A7Row) {
  const auto& a7 = catalog().group("A7");
  EXPECT_EQ(a7.order, (Factorization{{2, 3}, {3, 2}, {5, 1}, {7, 1}}));
  EXPECT_EQ(a7.out_order, 2);
  EXPECT_EQ(a7.schur_order, 6);
  EXPECT_EQ(a7.fc, (std::map<Prime, bool>{{2, true}, {3, false}, {5, true}, {7, true}}));
  EXPECT_EQ(a7.shape, "K4-minus-edge");
}

TEST(Catalog, M12Complement) {
  const auto& g = *catalog().group("M12").complement;
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.adjacent("3", "5"));
  EXPECT_TRUE(g.adjacent("5", "11"));
  EXPECT_TRUE(g.adjacent("3", "11"));
  EXPECT_TRUE(g.adjacent("11", "2"));
}

TEST(Catalog, SuzukiIsComplete) {
  const auto& g = *catalog().group("Sz(8)").complement;
  EXPECT_TRUE(is_complete(g));
  EXPECT_EQ(catalog().group("Sz(8)").primes(), (PrimeSet{2, 5, 7, 13}));
}

TEST(Catalog, A7Covers) {
  EXPECT_EQ(center_orders("A7"), (std::set<int>{1, 2, 3, 6, 16, 64}));
  const auto rec = catalog().lookup("2.A7");
  const auto& c = std::get<CoverFact>(rec);
  EXPECT_EQ(c.vectors, (std::vector<PrimeSet>{{2, 3, 5, 7}, {2, 3, 5}, {3, 5, 7}, {3, 7}}));
  EXPECT_TRUE(c.central);
  EXPECT_FALSE(std::get<CoverFact>(catalog().lookup("16.A7")).central);
}

TEST(Catalog, M11OnlyCentralCoverIsItself) {
  std::vector<std::string> central;
  for (const auto& c : catalog().covers_of("M11"))
    if (c.central) central.push_back(c.name);
  EXPECT_EQ(central, (std::vector<std::string>{"M11"}));
  const auto rec = catalog().lookup("M11");
  // The group row wins over the trivial cover.
  ASSERT_TRUE(std::holds_alternative<GroupFact>(rec));
  for (const auto& c : catalog().covers_of("M11"))
    if (c.name == "M11") EXPECT_EQ(c.vectors, (std::vector<PrimeSet>{{2, 3, 5, 11}, {2, 3, 5}}));
}

TEST(Catalog, SL25Vectors) {
  const auto& c = std::get<CoverFact>(catalog().lookup("SL(2,5)"));
  EXPECT_EQ(c.vectors, (std::vector<PrimeSet>{{2, 3, 5}, {2, 3}, {3, 5}, {3}, {}}));
}

TEST(Catalog, UnknownNameThrows) {
  EXPECT_THROW(catalog().lookup("Monster"), InputError);
  EXPECT_THROW(catalog().group("Monster"), InputError);
}

TEST(Catalog, ValidatesClean) { EXPECT_TRUE(validate_catalog(catalog()).empty()); }

TEST(Catalog, InjectedEdgeBreaksShape) {
  Catalog c = catalog();
  for (auto& g : c.mutable_groups())
    if (g.name == "A7") g.complement->add_edge("2", "3");
  const auto v = validate_catalog(c);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("A7"), std::string::npos);
}

TEST(Catalog, MissingGroupIsReported) {
  Catalog c = catalog();
  auto& gs = c.mutable_groups();
  gs.erase(std::remove_if(gs.begin(), gs.end(), [](const GroupFact& g) { return g.name == "Sz(32)"; }), gs.end());
  const auto v = validate_catalog(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v.front().find("completeness"), std::string::npos);
}

TEST(Catalog, EveryRequiredGroupPresent) {
  for (const auto& n : required_k4_groups()) EXPECT_TRUE(catalog().has_group(n)) << n;
}

TEST(Catalog, ShapeTags) {
  EXPECT_EQ(shape_of(*catalog().group("A8").complement), "triangle-plus-pendant");
  EXPECT_EQ(shape_of(*catalog().group("PSL(3,4)").complement), "K4-complete");
}

TEST(Catalog, CentralCoverIsolatesCenterPrimes) {
  const Graph base = *catalog().group("A7").complement;
  const Graph two = central_cover_complement(base, 2);
  EXPECT_EQ(two.degree(two.index_of("2")), 0u);
  EXPECT_TRUE(two.adjacent("5", "7"));
  EXPECT_TRUE(two.adjacent("3", "5"));
  EXPECT_EQ(central_cover_complement(base, 1), base);
}

TEST(Catalog, RealizerForCoverAndExtension) {
  const auto r = catalog().realizer("2.A7");
  EXPECT_EQ(r.kind, "cover");
  EXPECT_EQ(r.complement.degree(r.complement.index_of("2")), 0u);
  const auto e = catalog().realizer("C2.S5");
  EXPECT_EQ(e.kind, "extension");
  EXPECT_EQ(e.primes(), (PrimeSet{2, 3, 5}));
}
