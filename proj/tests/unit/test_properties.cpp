#include <gtest/gtest.h>

#include "kit.hpp"

namespace {
void expect_ok(const kit::SuiteResult& r, long long need, const char* name) {
  EXPECT_EQ(r.failures, 0) << name << ": " << r.first_failure;
  EXPECT_GE(r.instances, need) << name;
}
}  // namespace

TEST(WordProperties, Randomized) {
  kit::WordSuites s = kit::word_suites(81, 1000);
  expect_ok(s.canonical, 1000, "canonical");
  expect_ok(s.loop_roundtrip, 1000, "loop round trip");
  expect_ok(s.extend_twice, 1000, "extend twice");
  expect_ok(s.twist_inverse, 1000, "twist inverse");
  expect_ok(s.twist_agree, 1000, "twist letter vs loop");
  expect_ok(s.merge_parity, 1000, "merge parity");
  expect_ok(s.merge_components, 1000, "merge components");
  expect_ok(s.fixed_rotation, 1000, "fixed point rotation");
}

TEST(MoveProperties, GatedRandomized) {
  kit::MoveSuites s = kit::move_suites(82, 500, 8);
  expect_ok(s.sym_extend, 500, "delta_sym extend");
  expect_ok(s.sym_twist, 500, "delta_sym twist");
  expect_ok(s.sym_merge, 500, "delta_sym merge");
  expect_ok(s.mu_extend, 500, "delta_mubar extend");
  expect_ok(s.mu_twist, 500, "delta_mubar twist");
  expect_ok(s.mu_merge, 500, "delta_mubar merge");
  EXPECT_EQ(s.sym_merge.cases.count("beta+beta"), 0u);
  EXPECT_GE(s.sym_merge.cases.size(), 8u);
}

TEST(Oracles, SelfCheck) {
  EXPECT_EQ(kit::det_laplace({{2, 1}, {1, 2}}), 3);
  kit::SturmCount c = kit::sturm_signature({{1, 0, 0}, {0, -2, 0}, {0, 0, 0}});
  EXPECT_EQ(c.positive, 1);
  EXPECT_EQ(c.negative, 1);
  EXPECT_EQ(c.zero, 1);
  kit::SturmCount d = kit::sturm_signature({{-2, 0}, {0, -2}});
  EXPECT_EQ(d.negative, 2);
  EXPECT_EQ(pc::to_string(kit::canonical_naive(pc::parse_word("abBAbba"))), "(abb)");
}
