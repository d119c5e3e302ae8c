#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"
#include "dseu/oracles.hpp"

namespace dseu {

/// Prefix length t such that "x on [0, t), then y" matches a target.
/// `whole_horizon` marks the closure case where only x forever will do.
struct TimeEquivalent {
    double t = 0.0;
    bool whole_horizon = false;
    double bracket_width = 0.0;
    std::size_t queries = 0;
};

/// Closed form: t = quantile((v - u(y)) / (u(x) - u(y))).
/// Throws DomainError if u(x) <= u(y), RangeError if v is outside [u(y), u(x)].
TimeEquivalent time_equivalent_value(const DSEUModel& model, double v, const Outcome& x,
                                     const Outcome& y);

TimeEquivalent time_equivalent_act(const DSEUModel& model, const GridAct& f, const Outcome& x,
                                   const Outcome& y);

struct BisectionOptions {
    double tol = 1e-9;
    std::size_t max_queries = 64;
    /// Known discount rate. When set, the search stops at the (1 - 1e-9)
    /// quantile and reports the whole horizon instead of failing.
    std::optional<DiscountRate> rate;
    /// Search ceiling used when no rate is known.
    double ceiling = 1e6;
    double initial_upper = 1.0;
};

/// Mass beyond which the oracle-facing search declares the whole horizon.
inline constexpr double kWholeHorizonMass = 1.0 - 1e-9;

/// Finds the switch point of a response that reads "second preferred" for
/// small t and "first preferred" for large t. Geometric growth of the upper
/// bound, then bisection. Throws ProtocolError on sign patterns that cannot
/// come from a monotone response, or when the query budget runs out.
TimeEquivalent bisect_switch_time(const std::function<Preference(double)>& probe,
                                  const BisectionOptions& options);

/// Oracle version of the time equivalent of f with respect to the pair (x, y).
TimeEquivalent time_equivalent_bisect(const PreferenceOracle& oracle, const GridAct& f,
                                      const Outcome& x, const Outcome& y,
                                      const BisectionOptions& options = {});

}  // namespace dseu
