#include <gtest/gtest.h>

#include <random>

#include "latknot/certify.hpp"
#include "latknot/dataset.hpp"
#include "latknot/generate.hpp"
#include "oracles.hpp"

using namespace latknot;

namespace {

const BoundCheck *find_check(const ConstructionCertificate &c, const std::string &name) {
  for (const auto &b : c.bound_checks)
    if (b.name == name)
      return &b;
  return nullptr;
}

} // namespace

TEST(ConstructAuto, FigureEight) {
  const auto r = construct_auto(find_dataset_entry("4_1")->arcs);
  EXPECT_EQ(r.certificate.branch, Branch::NonStar);
  EXPECT_EQ(r.certificate.stick_count, 14);
  EXPECT_EQ(stick_count(r.polygon), 14);
  EXPECT_EQ(r.certificate.invariant_match, InvariantMatch::Matched);
  const auto c = check_bounds(r.certificate, 4);
  const auto *b = find_check(c, "3c+2");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->lhs, 14);
  EXPECT_EQ(b->rhs, 14);
  EXPECT_TRUE(b->holds);
  EXPECT_FALSE(c.bound_failed());
}

TEST(ConstructAuto, Trefoil) {
  const auto r = construct_auto(find_dataset_entry("3_1")->arcs);
  EXPECT_EQ(r.certificate.branch, Branch::TorusStar);
  EXPECT_EQ(r.certificate.torus_params, (std::pair{3, 2}));
  EXPECT_EQ(r.certificate.stick_count, 13);
  const auto c = check_bounds(r.certificate, 3);
  const auto *b = find_check(c, "3c+2");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->rhs, 11);
  EXPECT_FALSE(b->holds);
  EXPECT_TRUE(b->expected_failure);
  EXPECT_EQ(c.torus_crossing_match, true);
  EXPECT_EQ(find_check(c, "3c-5"), nullptr);
  EXPECT_FALSE(c.bound_failed());
}

TEST(ConstructAuto, TorusEightNineteen) {
  const auto r = construct_auto(find_dataset_entry("8_19")->arcs);
  EXPECT_EQ(r.certificate.branch, Branch::TorusStar);
  EXPECT_EQ(r.certificate.torus_params, (std::pair{4, 3}));
  EXPECT_EQ(r.certificate.stick_count, 19);
  const auto c = check_bounds(r.certificate, 8);
  const auto *b = find_check(c, "3c-5");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->rhs, 19);
  EXPECT_TRUE(b->holds);
  EXPECT_EQ(c.torus_crossing_match, true);
  EXPECT_FALSE(c.bound_failed());

  const auto wrong = check_bounds(r.certificate, 9);
  EXPECT_EQ(wrong.torus_crossing_match, false);
  EXPECT_TRUE(wrong.bound_failed());
}

TEST(ConstructAuto, DualBranch) {
  // Star shaped with pages (1,3,2,4,5): not torus order, so the dual is used.
  const auto P = star_presentation({1, 3, 2, 4, 5});
  const auto r = construct_auto(P);
  EXPECT_EQ(r.certificate.branch, Branch::DualNonStar);
  EXPECT_EQ(r.certificate.stick_count, 11);
  EXPECT_FALSE(is_star_shaped(dual(P)));
  EXPECT_EQ(r.certificate.invariant_match, InvariantMatch::Matched);
}

TEST(ConstructAuto, NonAlternatingBound) {
  for (const char *name : {"8_20", "8_21"}) {
    const auto e = *find_dataset_entry(name);
    const auto c = check_bounds(construct_auto(e.arcs).certificate, e.crossing_number, e.flags);
    const auto *b = find_check(c, "3c-4");
    ASSERT_NE(b, nullptr) << name;
    EXPECT_EQ(b->lhs, 20);
    EXPECT_EQ(b->rhs, 20);
    EXPECT_TRUE(b->holds);
    EXPECT_FALSE(c.bound_failed());
  }
}

TEST(ConstructAuto, ArcCountGate) {
  try {
    construct_auto(validate({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ArcCountOutOfRange);
  }
}

TEST(ConstructAuto, SkipInvariant) {
  const auto r = construct_auto(find_dataset_entry("5_2")->arcs, {.check_invariant = false});
  EXPECT_EQ(r.certificate.invariant_match, InvariantMatch::Skipped);
  EXPECT_FALSE(r.certificate.input_alexander.has_value());
}

TEST(ConstructAuto, RandomSuite) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 5 + trial % 5;
    const auto P = a % 2 && trial % 4 == 0 ? random_star_presentation((a - 1) / 2, rng) : random_presentation(a, rng);
    const auto r = construct_auto(P);
    const int expected = r.certificate.branch == Branch::TorusStar ? 3 * a - 2 : 3 * a - 4;
    EXPECT_EQ(r.certificate.stick_count, expected);
    EXPECT_EQ(stick_count(r.polygon), expected);
    EXPECT_TRUE(oracle::unit_walk_valid(r.polygon));
    EXPECT_EQ(r.certificate.invariant_match, InvariantMatch::Matched);
    EXPECT_FALSE(r.certificate.bound_failed());
  }
}

TEST(CheckBounds, RejectsNonPositiveCrossingNumber) {
  const auto r = construct_auto(find_dataset_entry("4_1")->arcs, {.check_invariant = false});
  EXPECT_THROW(check_bounds(r.certificate, 0), Error);
}

TEST(CheckBounds, FailureIsReported) {
  // 4_1 with a wrong crossing number of 3: 14 > 11.
  const auto r = construct_auto(find_dataset_entry("4_1")->arcs, {.check_invariant = false});
  const auto c = check_bounds(r.certificate, 3);
  EXPECT_TRUE(c.bound_failed());
}
