#pragma once

#include <random>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/exp_measure.hpp"

namespace dseu {

/// Random step acts for property checks. Breakpoints are quantiles of the
/// exponential measure at uniform levels below `max_level`, so most structure
/// sits where the measure has mass.
struct ActSampler {
    std::vector<Outcome> outcomes;
    DiscountRate rate{1.0};
    std::size_t max_pieces = 6;
    double max_level = 0.999;

    double time(std::mt19937_64& rng) const;
    StepProfile profile(std::mt19937_64& rng) const;
    GridAct act(std::mt19937_64& rng, const StateSpace& space) const;
    GridAct deterministic(std::mt19937_64& rng, const StateSpace& space) const;
    /// Non-empty finite union of up to `max_intervals` intervals.
    TimeSet time_set(std::mt19937_64& rng, std::size_t max_intervals = 3) const;
    const Outcome& outcome(std::mt19937_64& rng) const;
};

}  // namespace dseu
