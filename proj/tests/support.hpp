#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"
#include "dseu/random_acts.hpp"

namespace dseu::testing {

inline StateSpace states(std::size_t n) {
    std::vector<State> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    return StateSpace(std::move(labels));
}

inline std::vector<Outcome> alphabet(std::size_t n) {
    std::vector<Outcome> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("o" + std::to_string(i));
    return out;
}

/// Random probability vector with every entry at least `floor`.
inline Beliefs random_beliefs(std::mt19937_64& rng, const StateSpace& space, double floor = 0.02) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(space.size());
    double total = 0.0;
    for (auto& x : w) total += (x = u(rng));
    std::map<State, double> probs;
    const double free = 1.0 - floor * static_cast<double>(space.size());
    double assigned = 0.0;
    for (std::size_t i = 0; i + 1 < space.size(); ++i) {
        probs[space[i]] = floor + free * w[i] / total;
        assigned += probs[space[i]];
    }
    probs[space[space.size() - 1]] = 1.0 - assigned;
    return Beliefs(std::move(probs));
}

/// Utilities drawn in [-2, 3], forced non-constant.
inline UtilityModel random_utility(std::mt19937_64& rng, const std::vector<Outcome>& outcomes) {
    std::uniform_real_distribution<double> u(-2.0, 3.0);
    std::map<Outcome, double> values;
    for (const auto& o : outcomes) values[o] = u(rng);
    values[outcomes.front()] = -2.5;
    values[outcomes.back()] = 3.5;
    return UtilityModel(std::move(values));
}

inline DSEUModel random_model(std::mt19937_64& rng, const StateSpace& space, const std::vector<Outcome>& outcomes) {
    std::uniform_real_distribution<double> rate(0.1, 3.0);
    return DSEUModel{DiscountRate(rate(rng)), random_utility(rng, outcomes), random_beliefs(rng, space)};
}

/// Midpoint rule for the discounted integral after the change of variable
/// s = 1 - e^{-lambda t}: value = integral over [0, 1) of u(p(quantile(s))) ds.
/// Each jump of the integrand costs at most range / m, so the error is
/// bounded by pieces * range / m.
inline double quadrature_value(const DSEUModel& model, const StepProfile& p, std::size_t m = 200000) {
    const double lambda = model.rate.value();
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(m);
        sum += model.util(p.at(-std::log1p(-s) / lambda));
    }
    return sum / static_cast<double>(m);
}

}  // namespace dseu::testing
