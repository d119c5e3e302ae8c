#include <gtest/gtest.h>

#include "dseu/aa_reduction.hpp"
#include "dseu/errors.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

namespace {

LotteryAct random_lottery_act(std::mt19937_64& rng, const StateSpace& space, const std::vector<Outcome>& outs) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Lottery> rows;
    for (std::size_t i = 0; i < space.size(); ++i) {
        std::map<Outcome, double> p;
        double total = 0.0;
        for (const auto& o : outs) {
            if (u(rng) < 0.3) continue;
            total += (p[o] = u(rng));
        }
        if (p.empty()) p[outs[0]] = total = 1.0;
        double assigned = 0.0;
        for (auto it = p.begin(); it != p.end(); ++it) {
            if (std::next(it) == p.end()) {
                it->second = 1.0 - assigned;
            } else {
                assigned += (it->second /= total);
            }
        }
        rows.emplace_back(std::move(p));
    }
    return LotteryAct(space, std::move(rows));
}

}  // namespace

TEST(Lottery, Validation) {
    EXPECT_THROW((void)Lottery({{"a", 0.5}, {"b", 0.6}}), ValidationError);
    EXPECT_THROW((void)Lottery({}), ValidationError);
    EXPECT_EQ(Lottery::degenerate("a")("a"), 1.0);
    EXPECT_EQ(Lottery::degenerate("a")("b"), 0.0);
}

TEST(Reduction, ProfileMassesBecomeProbabilities) {
    const DiscountRate r(std::log(2.0));
    const Lottery l = reduce_profile(r, StepProfile::from_starts({{0.0, "a"}, {1.0, "b"}, {2.0, "a"}}));
    EXPECT_NEAR(l("a"), 0.75, 1e-15);
    EXPECT_NEAR(l("b"), 0.25, 1e-15);
}

TEST(Reduction, AaValueEqualsActValue) {
    std::mt19937_64 rng(61);
    const auto outs = alphabet(5);
    for (int k = 0; k < 300; ++k) {
        const StateSpace space = states(1 + k % 6);
        const DSEUModel model = random_model(rng, space, outs);
        const GridAct f = ActSampler{outs, model.rate}.act(rng, space);
        EXPECT_NEAR(aa_value(model, f), act_value(model, f), 1e-12);
    }
}

TEST(Reduction, IndependenceWitness) {
    std::mt19937_64 rng(62);
    const auto outs = alphabet(4);
    for (int k = 0; k < 200; ++k) {
        const StateSpace space = states(1 + k % 4);
        const ActSampler sampler{outs, DiscountRate(0.2 + 0.01 * k)};
        const GridAct f = sampler.act(rng, space);
        const LotteryAct g = random_lottery_act(rng, space, outs);
        const double t = k % 9 == 0 ? 0.0 : sampler.time(rng);
        const auto [lhs, rhs] = independence_witness(sampler.rate, t, g, f);
        EXPECT_LE(max_entry_gap(lhs, rhs), 1e-12);
    }
}

TEST(Reduction, RealizationRecoversRationalLotteries) {
    const DiscountRate r(1.3);
    const TimeInterval window(0.4, 2.9);
    for (int den = 1; den <= 12; ++den) {
        for (int num = 0; num <= den; ++num) {
            const double p = static_cast<double>(num) / den;
            const Lottery l({{"a", p}, {"b", 1.0 - p}});
            const StepProfile prof(
                [&] {
                    std::vector<Piece> pieces{Piece{TimeInterval(0, window.lo()), "z"}};
                    for (auto& pc : realize_lottery(r, window, l)) pieces.push_back(pc);
                    pieces.push_back(Piece{TimeInterval(window.hi(), kInfinity), "z"});
                    return pieces;
                }());
            const Lottery back = reduce_window(r, prof, window);
            EXPECT_NEAR(back("a"), p, 1e-15);
            EXPECT_NEAR(back("b"), 1.0 - p, 1e-15);
        }
    }
}

TEST(Reduction, MixWeights) {
    const StateSpace space({"E"});
    const LotteryAct a(space, {Lottery::degenerate("x")});
    const LotteryAct b(space, {Lottery::degenerate("y")});
    const LotteryAct m = mix(a, b, 0.25);
    EXPECT_DOUBLE_EQ(m.at(0)("x"), 0.25);
    EXPECT_DOUBLE_EQ(m.at(0)("y"), 0.75);
    EXPECT_THROW(mix(a, b, 1.5), DomainError);
}
