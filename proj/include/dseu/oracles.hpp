#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string_view>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"

namespace dseu {

enum class Preference { StrictlyPrefersFirst, Indifferent, StrictlyPrefersSecond };

std::string_view to_string(Preference p);
Preference flip(Preference p);

/// A black-box decision maker answering pairwise comparisons of acts.
class PreferenceOracle {
public:
    virtual ~PreferenceOracle() = default;

    virtual Preference compare(const GridAct& f, const GridAct& g) const = 0;
    virtual double band() const = 0;
    /// States the oracle reasons about; queries are built on this space.
    virtual const StateSpace& states() const = 0;
    /// Outcomes the oracle can evaluate.
    virtual std::set<Outcome> outcomes() const = 0;

    bool weakly_prefers(const GridAct& f, const GridAct& g) const {
        return compare(f, g) != Preference::StrictlyPrefersSecond;
    }
};

/// Oracle backed by a numerical value functional: differences within the
/// indifference band are reported as indifference.
class ValueOracle : public PreferenceOracle {
public:
    virtual double value(const GridAct& f) const = 0;
    Preference compare(const GridAct& f, const GridAct& g) const override;
};

/// Monotone set function on subsets of a finite state space with nu(empty) = 0
/// and nu(S) = 1. Subsets are bitmasks over the state order.
class Capacity {
public:
    using Mask = std::uint32_t;
    static constexpr std::size_t kMaxStates = 20;

    Capacity(StateSpace space, std::vector<double> values);

    static Capacity additive(const StateSpace& space, const Beliefs& beliefs);
    /// nu(A) = (1 - eps) mu(A) for A != S, nu(S) = 1.
    static Capacity contamination(const StateSpace& space, const Beliefs& beliefs, double eps);

    const StateSpace& space() const { return space_; }
    double operator()(Mask subset) const { return values_[subset]; }
    double of(const std::set<State>& subset) const;
    Mask mask_of(const std::set<State>& subset) const;
    Mask full() const { return static_cast<Mask>(values_.size() - 1); }
    const std::vector<double>& values() const { return values_; }
    /// Largest |nu(A u B) - nu(A) - nu(B)| over disjoint A, B.
    double max_additivity_gap() const;

private:
    StateSpace space_;
    std::vector<double> values_;
};

/// Choquet integral of per-state values: states sorted from best to worst,
/// each decrement weighted by the capacity of the upper set.
double choquet_integral(const Capacity& nu, const std::vector<double>& by_state);

using OraclePtr = std::shared_ptr<const ValueOracle>;

/// Compares acts by act_value.
OraclePtr seu_oracle(const DSEUModel& model, double band = 0.0);
OraclePtr seu_oracle(const DSEUModel& model, const StateSpace& space, double band = 0.0);

/// Discounts each state's stream first, then takes the Choquet integral over states.
OraclePtr choquet_oracle(DiscountRate rate, const UtilityModel& util, const Capacity& capacity,
                         double band = 0.0);

/// Widens the inner oracle's indifference band; responses stay deterministic.
OraclePtr noisy_oracle(OraclePtr inner, double band_inflation);

/// Wraps an arbitrary value functional.
OraclePtr functional_oracle(StateSpace space, std::set<Outcome> outcomes,
                            std::function<double(const GridAct&)> value, double band = 0.0);

/// Rank-dependent evaluation over time: each state's stream is valued by a
/// Choquet integral against the distorted measure (eps_lambda)^exponent, then
/// averaged with beliefs. Breaks stationarity for exponent != 1.
OraclePtr rank_dependent_time_oracle(const DSEUModel& model, const StateSpace& space,
                                     double exponent, double band = 0.0);

/// Each outcome's level set is discounted at its own rate, so which of two
/// time events looks "more likely" depends on the prizes. Breaks T-Separability
/// when the rates differ. Outcomes missing from `rates` use the model's rate.
OraclePtr outcome_rate_oracle(const DSEUModel& model, const StateSpace& space,
                              const std::map<Outcome, double>& rates, double band = 0.0);

/// Per-session query counter around a shared oracle.
class CountingOracle : public PreferenceOracle {
public:
    explicit CountingOracle(const PreferenceOracle& inner) : inner_(inner) {}

    Preference compare(const GridAct& f, const GridAct& g) const override {
        ++queries_;
        return inner_.compare(f, g);
    }
    double band() const override { return inner_.band(); }
    const StateSpace& states() const override { return inner_.states(); }
    std::set<Outcome> outcomes() const override { return inner_.outcomes(); }

    std::size_t queries() const { return queries_; }
    void reset() { queries_ = 0; }

private:
    const PreferenceOracle& inner_;
    mutable std::size_t queries_ = 0;
};

}  // namespace dseu
