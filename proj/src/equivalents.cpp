#include "dseu/equivalents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dseu/errors.hpp"

namespace dseu {

namespace {

// Values computed from acts bounded by x and y can overshoot the bracket by
// a few ulps.
constexpr double kBracketSlack = 1e-12;

}  // namespace

TimeEquivalent time_equivalent_value(const DSEUModel& model, double v, const Outcome& x,
                                     const Outcome& y) {
    const double ux = model.util(x);
    const double uy = model.util(y);
    if (!(ux > uy)) throw DomainError("time equivalents need u(x) > u(y)");
    const double slack = kBracketSlack * (ux - uy);
    if (!(v >= uy - slack && v <= ux + slack)) {
        throw RangeError("value " + std::to_string(v) + " lies outside [u(y), u(x)] = [" +
                         std::to_string(uy) + ", " + std::to_string(ux) + "]");
    }
    const double p = std::clamp((v - uy) / (ux - uy), 0.0, 1.0);
    TimeEquivalent te;
    if (p >= 1.0) {
        te.whole_horizon = true;
        te.t = kInfinity;
    } else {
        te.t = quantile(model.rate, p);
    }
    return te;
}

TimeEquivalent time_equivalent_act(const DSEUModel& model, const GridAct& f, const Outcome& x,
                                   const Outcome& y) {
    return time_equivalent_value(model, act_value(model, f), x, y);
}

TimeEquivalent bisect_switch_time(const std::function<Preference(double)>& probe,
                                  const BisectionOptions& options) {
    if (!(options.tol > 0.0)) throw DomainError("bisection tolerance must be positive");
    if (!(options.initial_upper > 0.0)) throw DomainError("initial upper bound must be positive");

    TimeEquivalent te;
    auto ask = [&](double t) {
        if (te.queries >= options.max_queries) {
            throw ProtocolError("query budget of " + std::to_string(options.max_queries) +
                                " comparisons exhausted");
        }
        ++te.queries;
        return probe(t);
    };

    const Preference at_zero = ask(0.0);
    if (at_zero == Preference::Indifferent) return te;
    if (at_zero == Preference::StrictlyPrefersFirst) {
        throw ProtocolError("response at t = 0 already favours the prefix stream");
    }

    const double ceiling = options.rate ? quantile(*options.rate, kWholeHorizonMass) : options.ceiling;
    double lo = 0.0;
    double hi = std::min(options.initial_upper, ceiling);
    for (;;) {
        const Preference r = ask(hi);
        if (r == Preference::Indifferent) {
            te.t = hi;
            return te;
        }
        if (r == Preference::StrictlyPrefersFirst) break;
        lo = hi;
        if (hi >= ceiling) {
            if (options.rate) {
                te.whole_horizon = true;
                te.t = kInfinity;
                return te;
            }
            throw ProtocolError("no switch point below the search ceiling t = " + std::to_string(ceiling));
        }
        hi = std::min(2.0 * hi, ceiling);
    }

    while (hi - lo > options.tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const Preference r = ask(mid);
        if (r == Preference::Indifferent) {
            te.t = mid;
            return te;
        }
        (r == Preference::StrictlyPrefersFirst ? hi : lo) = mid;
    }
    te.t = lo + 0.5 * (hi - lo);
    te.bracket_width = hi - lo;
    return te;
}

TimeEquivalent time_equivalent_bisect(const PreferenceOracle& oracle, const GridAct& f,
                                      const Outcome& x, const Outcome& y,
                                      const BisectionOptions& options) {
    const StateSpace& space = f.space();
    const Preference top = oracle.compare(GridAct::constant(space, x), f);
    if (top == Preference::StrictlyPrefersSecond) {
        throw ProtocolError("oracle prefers the act to the upper outcome '" + x + "'");
    }
    if (top == Preference::Indifferent) {
        TimeEquivalent te;
        te.whole_horizon = true;
        te.t = kInfinity;
        te.queries = 1;
        return te;
    }
    auto probe = [&](double t) {
        return oracle.compare(GridAct::deterministic(space, StepProfile::prefix(x, t, y)), f);
    };
    BisectionOptions budget = options;
    budget.max_queries = options.max_queries > 0 ? options.max_queries - 1 : 0;
    TimeEquivalent te = bisect_switch_time(probe, budget);
    te.queries += 1;
    return te;
}

}  // namespace dseu
