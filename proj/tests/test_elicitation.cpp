#include <gtest/gtest.h>

#include "dseu/elicitation.hpp"
#include "dseu/errors.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

TEST(Elicitation, HalfLifeRecoversRate) {
    for (double lambda : {0.05, 0.3, 1.0, 2.5, 7.0}) {
        const StateSpace space({"E"});
        const DSEUModel model{DiscountRate(lambda), UtilityModel({{"x", 2.0}, {"y", -1.0}}), Beliefs({{"E", 1.0}})};
        const auto o = seu_oracle(model, space);
        const LambdaElicitation e = elicit_lambda(*o, "x", "y");
        EXPECT_NEAR(e.rate.value() / lambda, 1.0, 1e-6);
        EXPECT_NEAR(e.half_life, std::log(2.0) / lambda, 1e-8);
        EXPECT_THROW(elicit_lambda(*o, "y", "x"), ProtocolError);
    }
}

TEST(Elicitation, EventProbabilities) {
    std::mt19937_64 rng(51);
    const auto outs = alphabet(3);
    for (int k = 0; k < 10; ++k) {
        const StateSpace space = states(2 + k % 4);
        const DSEUModel model = random_model(rng, space, outs);
        const auto o = seu_oracle(model, space);
        const ElicitationReport r = elicit(*o, model.util.best(), model.util.worst());
        EXPECT_NEAR(r.lambda_hat.value() / model.rate.value(), 1.0, 1e-6);
        for (const auto& [event, v] : r.mu_hat) EXPECT_NEAR(v, model.beliefs.of(event), 1e-6);
        EXPECT_TRUE(r.additive);
        EXPECT_LE(r.max_abs_residual, 1e-5);
    }
}

TEST(Elicitation, EmptyAndFullEvents) {
    const StateSpace space({"E", "F"});
    const DSEUModel model{DiscountRate(1.0), UtilityModel({{"x", 1.0}, {"y", 0.0}}),
                          Beliefs({{"E", 0.4}, {"F", 0.6}})};
    const auto o = seu_oracle(model, space);
    EXPECT_EQ(elicit_event(*o, model.rate, {}, "x", "y").mu_hat, 0.0);
    EXPECT_EQ(elicit_event(*o, model.rate, {"E", "F"}, "x", "y").mu_hat, 1.0);
}

TEST(Elicitation, ContaminationIsFlagged) {
    const StateSpace space({"R", "B"});
    const Beliefs half({{"R", 0.5}, {"B", 0.5}});
    const UtilityModel util({{"w", 1.0}, {"l", 0.0}});
    const auto ambiguous = choquet_oracle(DiscountRate(1.0), util, Capacity::contamination(space, half, 0.1));
    const ElicitationReport r = elicit(*ambiguous, "w", "l");
    EXPECT_NEAR(r.max_abs_residual, 0.1, 1e-6);
    EXPECT_FALSE(r.additive);
    const auto plain = choquet_oracle(DiscountRate(1.0), util, Capacity::additive(space, half));
    EXPECT_TRUE(elicit(*plain, "w", "l").additive);
}

TEST(Chain, ChainAndIdentity) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const double lambda = 0.05 + 5 * u(rng);
        const double mu_e = 0.01 + 0.97 * u(rng);
        const double mu_f = (1.0 - mu_e) * (0.01 + 0.98 * u(rng));
        const ChainTrace t = chain_demo(DiscountRate(lambda), mu_e, mu_f);
        ASSERT_EQ(t.acts.size(), 7u);
        ASSERT_EQ(t.checks.size(), 7u);
        EXPECT_LE(t.max_gap(), 1e-12);
        EXPECT_LE(std::abs(t.identity_residual), 1e-12);
        EXPECT_LE(std::abs(t.additivity_residual), 1e-12);
    }
}

TEST(Chain, ComplementaryEqualBeliefsGiveExactHalf) {
    for (double lambda : {0.1, 0.5, 1.0, 2.0, 3.7}) {
        const ChainTrace t = chain_demo(DiscountRate(lambda), 0.5, 0.5);
        ASSERT_TRUE(t.complementary_case);
        EXPECT_EQ(t.complementary_mu_hat, 0.5);
    }
}

TEST(Chain, RenderEndsWithVerdict) {
    const std::string s = render_chain(chain_demo(DiscountRate(1.0), 0.3, 0.2));
    EXPECT_NE(s.find("additivity residual <= 1e-12"), std::string::npos);
    EXPECT_THROW(chain_demo(DiscountRate(1.0), 0.7, 0.5), ValidationError);
}
