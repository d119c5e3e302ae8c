#include <gtest/gtest.h>

#include "dseu/errors.hpp"
#include "dseu/oracles.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

TEST(Capacity, Validation) {
    const StateSpace s({"A", "B"});
    EXPECT_THROW((void)Capacity(s, {0.0, 0.5, 0.5}), ValidationError);
    EXPECT_THROW((void)Capacity(s, {0.1, 0.5, 0.5, 1.0}), ValidationError);
    EXPECT_THROW((void)Capacity(s, {0.0, 0.5, 0.5, 0.9}), ValidationError);
    EXPECT_THROW((void)Capacity(StateSpace({"A", "B", "C"}), {0, 0.6, 0.2, 0.5, 0.3, 0.7, 0.6, 1}), ValidationError);
}

TEST(Capacity, ContaminationGapIsEpsilon) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 20; ++k) {
        const StateSpace space = states(2 + k % 4);
        const Beliefs mu = random_beliefs(rng, space);
        const double eps = 0.05 + 0.01 * k;
        const Capacity nu = Capacity::contamination(space, mu, eps);
        EXPECT_NEAR(nu.max_additivity_gap(), eps, 1e-12);
        EXPECT_NEAR(Capacity::additive(space, mu).max_additivity_gap(), 0.0, 1e-12);
    }
}

TEST(Choquet, AdditiveCapacityIsExpectation) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int k = 0; k < 100; ++k) {
        const StateSpace space = states(1 + k % 6);
        const Beliefs mu = random_beliefs(rng, space);
        std::vector<double> v(space.size());
        double expect = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) expect += mu(space[i]) * (v[i] = u(rng));
        EXPECT_NEAR(choquet_integral(Capacity::additive(space, mu), v), expect, 1e-12);
    }
}

TEST(Choquet, ContaminationIsWorstCaseMix) {
    // For nu = (1 - eps) mu + eps on S only: integral = (1 - eps) E_mu[v] + eps min(v).
    const StateSpace space({"R", "B", "G"});
    const Beliefs mu({{"R", 0.2}, {"B", 0.3}, {"G", 0.5}});
    const Capacity nu = Capacity::contamination(space, mu, 0.1);
    const std::vector<double> v{1.0, -2.0, 0.5};
    EXPECT_NEAR(choquet_integral(nu, v), 0.9 * (0.2 - 0.6 + 0.25) + 0.1 * -2.0, 1e-15);
}

TEST(Oracle, SeuComparesByValue) {
    const StateSpace space({"E", "F"});
    const DSEUModel model{DiscountRate(1.0), UtilityModel({{"x", 1.0}, {"y", 0.0}}),
                          Beliefs({{"E", 0.3}, {"F", 0.7}})};
    const auto o = seu_oracle(model, space);
    const GridAct on_e = GridAct::bet(space, {"E"}, "x", "y");
    const GridAct on_f = GridAct::bet(space, {"F"}, "x", "y");
    EXPECT_EQ(o->compare(on_f, on_e), Preference::StrictlyPrefersFirst);
    EXPECT_EQ(o->compare(on_e, on_f), Preference::StrictlyPrefersSecond);
    EXPECT_EQ(o->compare(on_e, on_e), Preference::Indifferent);
    const auto wide = noisy_oracle(o, 0.5);
    EXPECT_EQ(wide->compare(on_f, on_e), Preference::Indifferent);
}

TEST(Oracle, CountingOracleCounts) {
    const StateSpace space({"E"});
    const DSEUModel model{DiscountRate(1.0), UtilityModel({{"x", 1.0}, {"y", 0.0}}), Beliefs({{"E", 1.0}})};
    const auto o = seu_oracle(model, space);
    CountingOracle c(*o);
    c.compare(GridAct::constant(space, "x"), GridAct::constant(space, "y"));
    c.compare(GridAct::constant(space, "x"), GridAct::constant(space, "y"));
    EXPECT_EQ(c.queries(), 2u);
}

TEST(Oracle, RankDependentReducesToSeuAtExponentOne) {
    std::mt19937_64 rng(33);
    const auto outs = alphabet(4);
    const StateSpace space = states(3);
    const DSEUModel model = random_model(rng, space, outs);
    const auto rd = rank_dependent_time_oracle(model, space, 1.0);
    const ActSampler sampler{outs, model.rate};
    for (int k = 0; k < 50; ++k) {
        const GridAct f = sampler.act(rng, space);
        EXPECT_NEAR(rd->value(f), act_value(model, f), 1e-12);
    }
}
