#include "dseu/random_acts.hpp"

#include <algorithm>

#include "dseu/errors.hpp"

namespace dseu {

namespace {

std::vector<double> sorted_times(std::mt19937_64& rng, const ActSampler& s, std::size_t count) {
    std::uniform_real_distribution<double> level(0.0, s.max_level);
    std::vector<double> ts;
    while (ts.size() < count) {
        const double t = quantile(s.rate, level(rng));
        if (t > 0.0) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace

double ActSampler::time(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> level(0.0, max_level);
    return quantile(rate, level(rng));
}

const Outcome& ActSampler::outcome(std::mt19937_64& rng) const {
    if (outcomes.empty()) throw ValidationError("sampler needs at least one outcome");
    std::uniform_int_distribution<std::size_t> pick(0, outcomes.size() - 1);
    return outcomes[pick(rng)];
}

StepProfile ActSampler::profile(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_pieces));
    const auto cuts = sorted_times(rng, *this, count(rng) - 1);
    std::vector<std::pair<double, Outcome>> starts{{0.0, outcome(rng)}};
    for (double t : cuts) starts.emplace_back(t, outcome(rng));
    return normalize(StepProfile::from_starts(std::move(starts)));
}

GridAct ActSampler::act(std::mt19937_64& rng, const StateSpace& space) const {
    std::vector<StepProfile> rows;
    rows.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) rows.push_back(profile(rng));
    return GridAct(space, std::move(rows));
}

GridAct ActSampler::deterministic(std::mt19937_64& rng, const StateSpace& space) const {
    return GridAct::deterministic(space, profile(rng));
}

TimeSet ActSampler::time_set(std::mt19937_64& rng, std::size_t max_intervals) const {
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_intervals));
    auto pts = sorted_times(rng, *this, 2 * count(rng));
    std::bernoulli_distribution open_end(0.2);
    if (pts.size() % 2 == 1 || open_end(rng)) {
        if (pts.size() % 2 == 0) pts.pop_back();
        pts.push_back(kInfinity);
    }
    std::vector<TimeInterval> ivs;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) ivs.emplace_back(pts[i], pts[i + 1]);
    return TimeSet::from_intervals(std::move(ivs));
}

}  // namespace dseu
