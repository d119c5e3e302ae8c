#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"

namespace dseu {

/// Finitely supported lottery over outcomes.
class Lottery {
public:
    explicit Lottery(std::map<Outcome, double> probs);
    static Lottery degenerate(const Outcome& x);

    /// Probability of x (0 outside the support).
    double operator()(const Outcome& x) const;
    const std::map<Outcome, double>& probs() const { return probs_; }

private:
    std::map<Outcome, double> probs_;
};

/// One lottery per state.
class LotteryAct {
public:
    LotteryAct(StateSpace space, std::vector<Lottery> lotteries);

    const StateSpace& space() const { return space_; }
    const std::vector<Lottery>& lotteries() const { return lotteries_; }
    const Lottery& at(std::size_t i) const { return lotteries_[i]; }

private:
    StateSpace space_;
    std::vector<Lottery> lotteries_;
};

inline constexpr double kLotteryTolerance = 1e-12;

/// Pushes the exponential measure through the profile: P(x) = mass{t : p(t) = x}.
Lottery reduce_profile(DiscountRate rate, const StepProfile& p);
LotteryAct reduce_act(DiscountRate rate, const GridAct& f);

/// Conditional distribution of the profile's outcomes given the window [lo, hi).
Lottery reduce_window(DiscountRate rate, const StepProfile& p, const TimeInterval& window);

/// w a + (1 - w) b, state by state.
LotteryAct mix(const LotteryAct& a, const LotteryAct& b, double w);

/// Lays the lottery out on consecutive sub-intervals of `interval` so each
/// outcome's share of the interval's mass equals its probability. Outcomes
/// are placed in key order.
std::vector<Piece> realize_lottery(DiscountRate rate, const TimeInterval& interval, const Lottery& n);

/// Lottery realization on [0, t) in every state, followed by a fixed filler
/// outcome: the lexicographically first outcome in the support of g.
GridAct realize_lottery_act(DiscountRate rate, double t, const LotteryAct& g);

/// h = realize_lottery_act(t, g); lhs = reduce(h_t f);
/// rhs = e^{-lambda t} reduce(f) + (1 - e^{-lambda t}) g.
std::pair<LotteryAct, LotteryAct> independence_witness(DiscountRate rate, double t, const LotteryAct& g,
                                                       const GridAct& f);

/// Largest entrywise difference between two lottery acts on the same space.
double max_entry_gap(const LotteryAct& a, const LotteryAct& b);

/// Expected utility of the reduced act under the model's beliefs.
double aa_value(const DSEUModel& model, const GridAct& f);

}  // namespace dseu
