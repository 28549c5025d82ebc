#include <gtest/gtest.h>

#include <set>

#include "jmb/catalog_io.hpp"
#include "jmb/verify.hpp"

using jmb::Catalog;
using jmb::Characteristic;
using jmb::Nat;
using jmb::Status;

TEST(Registry, PristineCatalogHasNoFailures) {
  const auto r = jmb::run_registry();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Status::Fail), 0u);
  EXPECT_GT(r.items.size(), 1000u);
  for (const char* id : {"L33.i", "P28.wr34", "L23.sharp", "P31", "W18"}) {
    const auto* item = r.find(id);
    ASSERT_NE(item, nullptr) << id;
    EXPECT_EQ(item->status, Status::Pass) << id << ": " << item->note;
  }
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : jmb::registry_claims()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(Registry, FailuresAndDisputes) {
  std::vector<jmb::Claim> claims = {
      {"ok", "fact(59) < 2520^19*fact(19) < fact(60)", "t", {}, false},
      {"bad", "fact(60) < 2520^19*fact(19)", "t", {}, false},
      {"disputed", "2 < 1", "t", {}, true},
      {"per-l", "N(2,l) >= 60", "t", jmb::CharCondition::not_in({2, 5}), false},
      {"per-l-bad", "N(2,l) > 60", "t", jmb::CharCondition::any(), false},
  };
  const auto r = jmb::evaluate_claims(claims, Catalog::paper());
  EXPECT_EQ(r.find("ok")->status, Status::Pass);
  EXPECT_EQ(r.find("bad")->status, Status::Fail);
  EXPECT_EQ(r.find("disputed")->status, Status::Discrepancy);
  EXPECT_EQ(r.find("per-l")->status, Status::Pass);
  EXPECT_EQ(r.find("per-l-bad")->status, Status::Fail);
  EXPECT_NE(r.find("per-l-bad")->note.find("l = 2 3"), std::string::npos) << r.find("per-l-bad")->note;
  EXPECT_FALSE(r.ok());
}

TEST(PrimitiveRows, AllRowsPass) {
  const auto r = jmb::verify_prop8();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.items.size(), Catalog::paper().primitive_rows().size());
  const auto* n9 = r.find("P8.n9.in:5");
  ASSERT_NE(n9, nullptr);
  EXPECT_EQ(n9->status, Status::Pass);
  EXPECT_NE(n9->note.find("exception"), std::string::npos);
  EXPECT_EQ(r.find("P8.n4.in:3")->status, Status::Pass);
  EXPECT_EQ(r.find("P8.n6.in:3")->status, Status::Pass);
}

TEST(PrimitiveRows, CorruptedRowFails) {
  auto c = Catalog::builtin();
  c.put(jmb::PrimitiveRow{6, jmb::CharCondition::in({3}), Nat(604801), "2.J2", "t"});
  const auto r = jmb::verify_prop8(c);
  EXPECT_EQ(r.find("P8.n6.in:3")->status, Status::Fail);
}

TEST(Golden, PaperCatalog) {
  const auto r = jmb::golden_tables();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.find("ThmC.ii.l7.n16")->status, Status::Pass);
  EXPECT_EQ(r.find("ThmD.n29")->status, Status::Pass);
  EXPECT_EQ(r.find("ThmE.n57")->status, Status::Discrepancy);
  EXPECT_EQ(r.find("ThmE.n65")->status, Status::Discrepancy);
}

TEST(Golden, CorruptedCatalogFails) {
  auto c = Catalog::builtin();
  c.put(jmb::ConstituentRow{jmb::CharCondition::not_in({2, 3}),
                            {4, Nat(25), "Sp4(3)", 2, jmb::ConstituentKind::Table, "t"}});
  const auto r = jmb::golden_tables(c);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.find("ThmC.ii.l7.n16")->status, Status::Fail);
}

TEST(Golden, DiscrepancyIds) {
  EXPECT_EQ(jmb::golden_discrepancy_id(57, 3), "ThmE-57");
  EXPECT_EQ(jmb::golden_discrepancy_id(65, 3), "ThmE-65");
  EXPECT_EQ(jmb::golden_discrepancy_id(57, 5), "");
  EXPECT_TRUE(jmb::is_known_discrepancy("ThmE-65"));
  EXPECT_FALSE(jmb::is_known_discrepancy("ThmE-66"));
}

TEST(Weisfeiler, WorstAlpha) {
  const auto rows = jmb::weisfeiler(70, {2, 3, 5, 7, 11, 13, 17, 19});
  EXPECT_EQ(rows.size(), 70u * 8u);
  for (const auto& r : rows) EXPECT_TRUE(r.dominates) << r.n << "," << r.l;
  const auto* w = jmb::worst_alpha(rows);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->n, 18u);
  EXPECT_EQ(w->l, 5u);
  EXPECT_NEAR(w->alpha, 3.8873, 0.001);
}
