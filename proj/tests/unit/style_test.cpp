#include "fournet/error.hpp"
#include "fournet/style.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace fournet {
namespace {

TEST(LinearStyle, RejectsInvalidWeights) {
    EXPECT_THROW(LinearStyle(-1, 2), ValidationError);
    EXPECT_THROW(LinearStyle(2, -1), ValidationError);
    EXPECT_THROW(LinearStyle(0, 0), ValidationError);
    EXPECT_NO_THROW(LinearStyle(0, 1));
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(LinearStyle(1, 1), 0.5, 5), 10.0);
    EXPECT_EQ(evaluate(LinearStyle(3, 0), 1.0, 10), 30.0);
    // hand-expanded: 2 * 7.3 + 5 * 4 = 14.6 + 20
    EXPECT_NEAR(evaluate(LinearStyle(2, 5), 0.73, 4), 34.6, 1e-12);
}

TEST(Evaluate, RangeChecks) {
    const LinearStyle s(1, 1);
    EXPECT_THROW(evaluate(s, -0.01, 3), ValidationError);
    EXPECT_THROW(evaluate(s, 1.01, 3), ValidationError);
    EXPECT_THROW(evaluate(s, 0.5, 11), ValidationError);
    EXPECT_THROW(evaluate(s, 0.5, -1), ValidationError);
}

TEST(Importance, Examples) {
    auto i = importance(LinearStyle(1, 1));
    EXPECT_EQ(i.pass, 0.5);
    EXPECT_EQ(i.risk, 0.5);
    i = importance(LinearStyle(3, 1));
    EXPECT_EQ(i.pass, 0.75);
    EXPECT_EQ(i.risk, 0.25);
    i = importance(LinearStyle(0, 4));
    EXPECT_EQ(i.pass, 0.0);
    EXPECT_EQ(i.risk, 1.0);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(LinearStyle(3, 1)), StyleClass::Possession);
    EXPECT_EQ(classify(LinearStyle(1, 3)), StyleClass::Direct);
    EXPECT_EQ(classify(LinearStyle(2, 2)), StyleClass::Balanced);
}

TEST(ParseStyle, Notation) {
    EXPECT_EQ(parse_style("3:1"), LinearStyle(3, 1));
    EXPECT_EQ(parse_style("0:4"), LinearStyle(0, 4));
    EXPECT_EQ(to_string(LinearStyle(12, 5)), "12:5");
    for (const char* bad : {"0:0", "-1:2", "2:-1", "3", "3:", ":1", "a:b", "1.5:2", "1:2:3", " 1:2", ""})
        EXPECT_THROW(parse_style(bad), ValidationError) << bad;
}

TEST(StyleProperties, LinearityMonotonicityImportanceSymmetry) {
    testing::Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const LinearStyle s = testing::random_style(rng);
        const double p = testing::uniform(rng, 0, 1);
        const int r = testing::uniform_int(rng, 0, 10);
        const int c = testing::uniform_int(rng, 1, 12);

        const LinearStyle scaled(c * s.pass_weight(), c * s.risk_weight());
        ASSERT_NEAR(evaluate(scaled, p, r), c * evaluate(s, p, r), 1e-12 * std::max(1.0, c * evaluate(s, p, r)));
        // dyadic p keeps every product exact
        const double pk = testing::uniform_int(rng, 0, 8) / 8.0;
        ASSERT_EQ(evaluate(scaled, pk, r), c * evaluate(s, pk, r));

        const double p2 = testing::uniform(rng, p, 1.0);
        const int r2 = testing::uniform_int(rng, r, 10);
        ASSERT_LE(evaluate(s, p, r), evaluate(s, p2, r));
        ASSERT_LE(evaluate(s, p, r), evaluate(s, p, r2));

        const auto imp = importance(s);
        ASSERT_GE(imp.pass, 0.0);
        ASSERT_LE(imp.pass, 1.0);
        ASSERT_GE(imp.risk, 0.0);
        ASSERT_LE(imp.risk, 1.0);
        ASSERT_NEAR(imp.pass + imp.risk, 1.0, 1e-12);

        if (s.pass_weight() != s.risk_weight()) {
            const LinearStyle mirrored(s.risk_weight(), s.pass_weight());
            ASSERT_EQ(classify(s) == StyleClass::Possession, classify(mirrored) == StyleClass::Direct);
        }
    }
}

} // namespace
} // namespace fournet
