#include <gtest/gtest.h>

#include "dseu/bracketing.hpp"
#include "dseu/errors.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

TEST(Bracketing, BinIndexOnGridPoints) {
    EXPECT_EQ(bin_index(0.0, 4), 0u);
    EXPECT_EQ(bin_index(0.25, 4), 1u);
    EXPECT_EQ(bin_index(1.0, 4), 3u);
    EXPECT_EQ(bin_index(0.3, 10), 3u);
    EXPECT_EQ(bin_index(0.7, 10), 7u);
    for (std::size_t n = 1; n <= 64; ++n) {
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(bin_index(static_cast<double>(k) / n, n), k);
    }
}

TEST(Bracketing, SelectionErrors) {
    EXPECT_THROW(independent_selection(DiscountRate(1.0), {TimeSet::whole()}, 1.0), RangeError);
    EXPECT_THROW(independent_selection(DiscountRate(1.0), {TimeSet::whole()}, -0.1), DomainError);
    EXPECT_TRUE(independent_selection(DiscountRate(1.0), {TimeSet::whole()}, 0.0).empty());
}

TEST(Bracketing, ProfileSandwich) {
    std::mt19937_64 rng(71);
    const auto outs = alphabet(6);
    const StateSpace space = states(1);
    for (int k = 0; k < 40; ++k) {
        const DSEUModel model = random_model(rng, space, outs);
        const StepProfile p = ActSampler{outs, model.rate}.profile(rng);
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) {
            const ProfileBracket b = bracket_profile(model, p, n);
            EXPECT_LE(b.value_lower, b.value_target + 1e-12);
            EXPECT_LE(b.value_target, b.value_upper + 1e-12);
            EXPECT_LE(b.gap, 1.0 / static_cast<double>(n) + 1e-12);
            ASSERT_EQ(b.selections.size(), n + 1);
            for (std::size_t j = 0; j <= n; ++j) {
                EXPECT_NEAR(mass(model.rate, b.selections[j]), static_cast<double>(j) / n, 1e-12);
                for (const auto& a : b.bins) {
                    EXPECT_NEAR(mass(model.rate, intersect(b.selections[j], a)),
                                mass(model.rate, b.selections[j]) * mass(model.rate, a), 1e-12);
                }
            }
            EXPECT_EQ(b.lower.outcomes().size() <= 2, true);
        }
    }
}

TEST(Bracketing, ActSandwich) {
    std::mt19937_64 rng(72);
    const auto outs = alphabet(6);
    for (int k = 0; k < 40; ++k) {
        const StateSpace space = states(1 + k % 6);
        const DSEUModel model = random_model(rng, space, outs);
        const GridAct f = ActSampler{outs, model.rate}.act(rng, space);
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) {
            const ActBracket b = bracket_act(model, f, n);
            EXPECT_LE(b.value_lower, b.value_target + 1e-12);
            EXPECT_LE(b.value_target, b.value_upper + 1e-12);
            EXPECT_LE(b.gap, 1.0 / static_cast<double>(n) + 1e-12);
        }
    }
}
