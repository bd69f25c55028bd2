#include <gtest/gtest.h>

#include "kit.hpp"
#include "plumbcurve/errors.hpp"
#include "plumbcurve/harness.hpp"
#include "plumbcurve/loopcalc.hpp"

using namespace pc;

namespace {
CyclicWord cw(const std::string& s) { return canonicalize(parse_word(s)); }
CyclicWord lw(const std::string& s) { return loop_decode(parse_loop(s)); }
}  // namespace

TEST(Twist, Examples) {
  EXPECT_EQ(twist_op(single(cw("b")), -2), single(cw("baa")));
  EXPECT_EQ(twist_op(single(cw("babaBAABaba")), 0), single(cw("babaBAABaba")));
  EXPECT_EQ(twist_op(single(lw("c[0] c[-1] c[-1] c[-1] c[0] c[-2]")), -1),
            single(lw("c[1] c[0] c[0] c[0] c[1] c[-1]")));
}

TEST(Extend, Examples) {
  EXPECT_EQ(extend_op(single(cw("baa"))), single(cw("aBB")));
  EXPECT_EQ(to_string(extend_word(cw("baa"))), to_string(cw("bbA")));
  EXPECT_EQ(extend_op(single(lw("c[1] c[0] c[0] c[0] c[1] c[-1]"))), single(cw("aBaaaaBab")));
}

TEST(Merge, Examples) {
  EXPECT_EQ(merge_op(lw("c[0] c[-1]"), lw("c[0] c[0] c[-1]")), single(lw("c[0] c[-1] c[-1] c[-1] c[0] c[-2]")));
  EXPECT_EQ(merge_op(lw("c[0] c[-1]"), lw("a[-1] b[-1] c[-4]")),
            single(lw("a[-1] b[-1] c[-4] a[-1] b[-1] c[-5]")));
}

TEST(Merge, UnitRowIsIdentity) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    CyclicWord w = kit::random_reduced_with_beta(rng, 1, 14);
    EXPECT_EQ(merge_op(cw("b"), w), single(w)) << to_string(w);
  }
}

TEST(Merge, SymmetricWhenBothAllC) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    CyclicWord a = kit::random_all_c(rng, 1 + i % 3, 3), b = kit::random_all_c(rng, 1 + i % 4, 3);
    EXPECT_EQ(merge_op(a, b), merge_op(b, a)) << to_string(a) << " " << to_string(b);
  }
}

TEST(Merge, PreconditionError) {
  try {
    merge_op(lw("a[1] b[1] c[0]"), lw("a[-1] b[-1] c[-4]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::merge_precondition);
  }
}

TEST(Invariant, Fixtures) {
  EXPECT_EQ(invariant(fixtures::TA()), single(cw("babaBAABaba")));
  EXPECT_EQ(invariant(fixtures::TB()), single(cw("baabaaababaaabaaababaaa")));
  EXPECT_EQ(invariant(fixtures::T1()), single(cw("babab")));
  EXPECT_EQ(invariant(fixtures::T0()), single(cw("b")));
}

TEST(Invariant, MergeErrorNamesNode) {
  const RootedTree t = merge(extend(fixtures::TA()), extend(fixtures::TA()));
  try {
    invariant(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::merge_precondition);
    EXPECT_NE(std::string(e.what()).find("at node Merge("), std::string::npos);
  }
}
