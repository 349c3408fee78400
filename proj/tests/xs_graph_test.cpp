#include <gtest/gtest.h>

#include "test_support.hpp"

namespace xsdmerge {
namespace {

using testing::names_of;
using testing::WorkedExample;

TEST(Proximity, WorkedExamplePredicates) {
  WorkedExample ex;
  const RefTargetMap none;
  const auto& customer = ex.c1("customer");
  EXPECT_EQ(proximity(ex.s1, none, customer, customer), Proximity::VeryClose);
  EXPECT_EQ(proximity(ex.s1, none, customer, ex.s1.require("firstName", Typology::SimpleElement)),
            Proximity::VeryClose);
  EXPECT_EQ(proximity(ex.s1, none, customer, ex.s1.require("SSN", Typology::Attribute)), Proximity::VeryClose);
  EXPECT_EQ(proximity(ex.s1, none, customer, ex.c1("musicAcquirement")), Proximity::Close);
  EXPECT_EQ(proximity(ex.s1, none, ex.c1("shop"), ex.s1.require("acquirementDate", Typology::Attribute)),
            Proximity::Reachable);
  EXPECT_EQ(proximity(ex.s1, none, customer, ex.c1("book")), Proximity::Unreachable);
  EXPECT_EQ(proximity(ex.s1, none, ex.s1.require("firstName", Typology::SimpleElement), customer),
            Proximity::Unreachable);
}

TEST(Proximity, IdrefEvidenceMakesTargetsClose) {
  WorkedExample ex;
  std::vector<std::string> docs{testing::read_fixture("s1_instance.xml")};
  auto refs = resolve_idrefs(ex.s1, docs);
  EXPECT_EQ(proximity(ex.s1, refs, ex.c1("bookAcquirement"), ex.c1("book")), Proximity::Close);
  EXPECT_EQ(proximity(ex.s1, refs, ex.c1("musicAcquirement"), ex.c1("music")), Proximity::Close);
  EXPECT_EQ(proximity(ex.s1, refs, ex.c1("customer"), ex.c1("book")), Proximity::Reachable);
}

TEST(ConnectionCost, WorkedExampleValues) {
  WorkedExample ex;
  const auto& customer = ex.c1("customer");
  EXPECT_EQ(connection_cost(ex.g1, customer, customer), 0U);
  EXPECT_EQ(connection_cost(ex.g1, customer, ex.s1.require("firstName", Typology::SimpleElement)), 0U);
  EXPECT_EQ(connection_cost(ex.g1, customer, ex.s1.require("acquirementDate", Typology::Attribute)), 1U);
  EXPECT_EQ(connection_cost(ex.g1, ex.c1("shop"), ex.s1.require("acquiredBooks", Typology::Attribute)), 2U);
  EXPECT_EQ(connection_cost(ex.g1, ex.s1.require("firstName", Typology::SimpleElement), customer), kInfiniteCost);
}

TEST(ConnectionCost, UnknownComponentThrows) {
  WorkedExample ex;
  XComponent ghost{"ghost", Typology::ComplexElement, std::nullopt, "S1"};
  try {
    connection_cost(ex.g1, ghost, ex.c1("shop"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownComponent);
  }
}

TEST(Neighborhood, CustomerLevelZero) {
  WorkedExample ex;
  EXPECT_EQ(names_of(neighborhood(ex.g1, ex.c1("customer"), 0)),
            (std::set<std::string>{"customer", "SSN", "firstName", "lastName", "address", "gender", "birthDate",
                                   "profession"}));
}

TEST(Neighborhood, ClientLevelZero) {
  WorkedExample ex;
  EXPECT_EQ(names_of(neighborhood(ex.g2, ex.c2("client"), 0)),
            (std::set<std::string>{"client", "SSN", "firstName", "lastName", "address", "phone", "email"}));
}

TEST(Neighborhood, CustomerLevelOneAddsAcquirements) {
  WorkedExample ex;
  auto level1 = names_of(neighborhood(ex.g1, ex.c1("customer"), 1));
  EXPECT_EQ(level1.size(), 13U);
  for (const char* n : {"bookAcquirement", "musicAcquirement", "acquirementDate", "acquiredBooks", "acquiredMusics"}) {
    EXPECT_TRUE(level1.count(n)) << n;
  }
}

TEST(XsGraph, InstanceArcsAppear) {
  WorkedExample ex;
  std::vector<std::string> docs{testing::read_fixture("s1_instance.xml")};
  auto g = build_xs_graph(ex.s1, resolve_idrefs(ex.s1, docs));
  auto has_arc = [&](const std::string& from, const std::string& to) {
    for (const auto& a : g.arcs()) {
      if (g.nodes()[a.source].name == from && g.nodes()[a.target].name == to && a.cost == 1) return true;
    }
    return false;
  };
  EXPECT_TRUE(has_arc("bookAcquirement", "book"));
  EXPECT_TRUE(has_arc("musicAcquirement", "music"));
  EXPECT_FALSE(has_arc("bookAcquirement", "music"));
  EXPECT_EQ(g.arcs().size(), ex.g1.arcs().size() + 2);
}

TEST(XsGraph, ArcsMatchIndependentDerivation) {
  WorkedExample ex;
  for (const auto* pair : {&ex.s1, &ex.s2}) {
    auto g = build_xs_graph(*pair, RefTargetMap{});
    auto oracle = testing::oracle_graph(*pair, RefTargetMap{});
    ASSERT_EQ(g.arcs().size(), oracle.arc_cost.size());
    for (const auto& a : g.arcs()) {
      auto it = oracle.arc_cost.find({a.source, a.target});
      ASSERT_NE(it, oracle.arc_cost.end());
      EXPECT_EQ(it->second, a.cost);
    }
  }
}

}  // namespace
}  // namespace xsdmerge
