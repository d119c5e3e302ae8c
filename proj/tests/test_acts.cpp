#include <gtest/gtest.h>

#include "dseu/acts.hpp"
#include "dseu/errors.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

TEST(StepProfile, ValidatesTiling) {
    EXPECT_THROW((void)StepProfile({}), ValidationError);
    EXPECT_THROW((void)StepProfile({Piece{TimeInterval(1, kInfinity), "a"}}), ValidationError);
    EXPECT_THROW((void)StepProfile({Piece{TimeInterval(0, 1), "a"}, Piece{TimeInterval(2, kInfinity), "b"}}),
                 ValidationError);
    EXPECT_THROW((void)StepProfile({Piece{TimeInterval(0, 1), "a"}}), ValidationError);
    EXPECT_THROW(StepProfile::from_starts({{0.0, "a"}, {0.0, "b"}}), ValidationError);
}

TEST(StepProfile, NormalizeMergesEqualNeighbours) {
    const StepProfile p = StepProfile::from_starts({{0.0, "a"}, {1.0, "a"}, {2.0, "b"}});
    EXPECT_FALSE(p.canonical());
    const StepProfile q = normalize(p);
    EXPECT_TRUE(q.canonical());
    EXPECT_EQ(q.pieces().size(), 2u);
    EXPECT_EQ(q.at(1.5), "a");
    EXPECT_EQ(q.at(2.0), "b");
}

TEST(StepProfile, LevelSets) {
    const StepProfile p = StepProfile::from_starts({{0.0, "a"}, {1.0, "b"}, {2.0, "a"}});
    EXPECT_EQ(p.level_set("a"), TimeSet::from_intervals({TimeInterval(0, 1), TimeInterval(2, kInfinity)}));
    EXPECT_TRUE(p.level_set("z").empty());
}

TEST(GridAct, Constructors) {
    const StateSpace s({"E", "F"});
    EXPECT_THROW((void)StateSpace({"E", "E"}), ValidationError);
    EXPECT_THROW(s.index_of("G"), LookupError);
    const GridAct bet = GridAct::bet(s, {"E"}, "x", "y");
    EXPECT_EQ(bet.at("E", 5.0), "x");
    EXPECT_EQ(bet.at("F", 0.0), "y");
    EXPECT_TRUE(bet.is_stochastic());
    EXPECT_FALSE(bet.is_deterministic());
    EXPECT_TRUE(GridAct::constant(s, "x").is_deterministic());
    EXPECT_THROW((void)GridAct(s, {StepProfile::constant("x")}), ValidationError);
}

TEST(Splice, TimeSpliceIsPointwise) {
    std::mt19937_64 rng(1);
    const ActSampler sampler{alphabet(4), DiscountRate(1.0)};
    const StateSpace space = states(3);
    for (int k = 0; k < 200; ++k) {
        const GridAct h = sampler.act(rng, space), f = sampler.act(rng, space);
        const double t = k % 10 == 0 ? 0.0 : sampler.time(rng);
        const GridAct g = splice_time(h, t, f);
        for (const auto& s : space.labels()) {
            for (double x = 0.0; x < 10.0; x += 0.0731) {
                EXPECT_EQ(g.at(s, x), x < t ? h.at(s, x) : f.at(s, x - t));
            }
        }
    }
}

TEST(Splice, EventSpliceIsPointwise) {
    std::mt19937_64 rng(2);
    const ActSampler sampler{alphabet(4), DiscountRate(1.0)};
    const StateSpace space = states(3);
    for (int k = 0; k < 200; ++k) {
        const GridAct f = sampler.act(rng, space), g = sampler.act(rng, space);
        const Event e = Event::rectangle({"s0", "s2"}, sampler.time_set(rng));
        const GridAct out = splice_event(f, e, g);
        for (const auto& s : space.labels()) {
            for (double x = 0.0; x < 10.0; x += 0.0731) {
                const bool in = e.states.count(s) && e.times.contains(x);
                EXPECT_EQ(out.at(s, x), in ? f.at(s, x) : g.at(s, x));
            }
        }
    }
}

TEST(Splice, ZeroDelayGivesTail) {
    const StateSpace space = states(2);
    const GridAct f = GridAct::bet(space, {"s0"}, "a", "b");
    EXPECT_EQ(splice_time(GridAct::constant(space, "z"), 0.0, f), f);
}

TEST(Splice, CommonBreakpoints) {
    const auto cuts = common_breakpoints({StepProfile::from_starts({{0.0, "a"}, {2.0, "b"}}),
                                         StepProfile::from_starts({{0.0, "a"}, {1.0, "b"}, {2.0, "c"}})});
    EXPECT_EQ(cuts, (std::vector<double>{0.0, 1.0, 2.0}));
}
