#pragma once

#include <map>
#include <set>

#include "dseu/acts.hpp"
#include "dseu/exp_measure.hpp"

namespace dseu {

/// Bounded utility on a finite outcome alphabet. Must take at least two values.
class UtilityModel {
public:
    explicit UtilityModel(std::map<Outcome, double> values);

    /// Throws LookupError for outcomes outside the alphabet.
    double operator()(const Outcome& x) const;
    bool covers(const Outcome& x) const { return values_.count(x) != 0; }

    const std::map<Outcome, double>& values() const { return values_; }
    double min() const;
    double max() const;
    /// Lexicographically first outcome attaining min() / max().
    const Outcome& worst() const;
    const Outcome& best() const;

private:
    std::map<Outcome, double> values_;
};

/// Probability vector over a finite state space.
class Beliefs {
public:
    explicit Beliefs(std::map<State, double> probs);
    /// Uniform beliefs over a state space.
    static Beliefs uniform(const StateSpace& space);

    /// Throws LookupError for unknown states.
    double operator()(const State& s) const;
    double of(const std::set<State>& event) const;
    const std::map<State, double>& probs() const { return probs_; }
    /// True when every state of `space` has a probability.
    bool covers(const StateSpace& space) const;

private:
    std::map<State, double> probs_;
};

inline constexpr double kProbabilityTolerance = 1e-12;

/// The representing triple: discount rate, utility, beliefs.
struct DSEUModel {
    DiscountRate rate;
    UtilityModel util;
    Beliefs beliefs;
};

/// Discounted utility of a deterministic stream: sum of piece masses times utilities.
double profile_value(DiscountRate rate, const UtilityModel& util, const StepProfile& p);
double profile_value(const DSEUModel& model, const StepProfile& p);

/// Same integral restricted to [0, t).
double profile_prefix_value(DiscountRate rate, const UtilityModel& util, const StepProfile& p,
                            double t);

/// State-first order: sum over states of mu(s) times the state's discounted value.
double act_value(const DSEUModel& model, const GridAct& f);

/// Time-first order: refine all rows to a common partition, then integrate the
/// state expectation of each cell against the exponential measure.
double act_value_dual(const DSEUModel& model, const GridAct& f);

/// Expected value of h on [0, t) only.
double act_prefix_value(const DSEUModel& model, const GridAct& h, double t);

struct DecompositionResult {
    double lhs;
    double rhs;
    double residual() const { return lhs - rhs; }
};

/// lhs = V(h_t f); rhs = prefix value of h on [0, t) + e^{-lambda t} V(f).
DecompositionResult decomposition_check(const DSEUModel& model, const GridAct& h, double t,
                                        const GridAct& f);

}  // namespace dseu
