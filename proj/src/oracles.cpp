#include "dseu/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dseu/errors.hpp"

namespace dseu {

std::string_view to_string(Preference p) {
    switch (p) {
        case Preference::StrictlyPrefersFirst: return "STRICTLY_PREFERS_FIRST";
        case Preference::Indifferent: return "INDIFFERENT";
        case Preference::StrictlyPrefersSecond: return "STRICTLY_PREFERS_SECOND";
    }
    return "?";
}

Preference flip(Preference p) {
    switch (p) {
        case Preference::StrictlyPrefersFirst: return Preference::StrictlyPrefersSecond;
        case Preference::StrictlyPrefersSecond: return Preference::StrictlyPrefersFirst;
        case Preference::Indifferent: break;
    }
    return Preference::Indifferent;
}

Preference ValueOracle::compare(const GridAct& f, const GridAct& g) const {
    const double diff = value(f) - value(g);
    if (std::abs(diff) <= band()) return Preference::Indifferent;
    return diff > 0.0 ? Preference::StrictlyPrefersFirst : Preference::StrictlyPrefersSecond;
}

// ---------------------------------------------------------------------------
// Capacity

Capacity::Capacity(StateSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (space_.size() > kMaxStates) throw ValidationError("capacity supports at most 20 states");
    const std::size_t n = std::size_t{1} << space_.size();
    if (values_.size() != n) throw ValidationError("capacity needs one value per subset");
    constexpr double tol = 1e-12;
    if (std::abs(values_[0]) > tol) throw ValidationError("capacity of the empty set must be 0");
    if (std::abs(values_[n - 1] - 1.0) > tol) throw ValidationError("capacity of the full set must be 1");
    for (Mask a = 0; a < n; ++a) {
        if (!std::isfinite(values_[a])) throw ValidationError("capacity values must be finite");
        for (std::size_t i = 0; i < space_.size(); ++i) {
            const Mask bit = Mask{1} << i;
            if (!(a & bit) && values_[a | bit] < values_[a] - tol) {
                throw ValidationError("capacity must be monotone under inclusion");
            }
        }
    }
    values_[0] = 0.0;
    values_[n - 1] = 1.0;
}

Capacity::Mask Capacity::mask_of(const std::set<State>& subset) const {
    Mask m = 0;
    for (const auto& s : subset) m |= Mask{1} << space_.index_of(s);
    return m;
}

double Capacity::of(const std::set<State>& subset) const { return values_[mask_of(subset)]; }

Capacity Capacity::additive(const StateSpace& space, const Beliefs& beliefs) {
    return contamination(space, beliefs, 0.0);
}

Capacity Capacity::contamination(const StateSpace& space, const Beliefs& beliefs, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("contamination weight must lie in [0, 1]");
    if (space.size() > kMaxStates) throw ValidationError("capacity supports at most 20 states");
    const std::size_t n = std::size_t{1} << space.size();
    std::vector<double> values(n, 0.0);
    for (Mask a = 1; a < n; ++a) {
        // Lowest set bit plus the already-computed remainder.
        const std::size_t i = static_cast<std::size_t>(__builtin_ctz(a));
        values[a] = values[a & (a - 1)] + beliefs(space[i]);
    }
    for (auto& v : values) v *= (1.0 - eps);
    values[n - 1] = 1.0;
    return Capacity(space, std::move(values));
}

double Capacity::max_additivity_gap() const {
    const Mask full_mask = full();
    double worst = 0.0;
    for (Mask a = 1; a <= full_mask; ++a) {
        const Mask rest = full_mask & ~a;
        for (Mask b = rest; b != 0; b = (b - 1) & rest) {
            worst = std::max(worst, std::abs(values_[a | b] - values_[a] - values_[b]));
        }
    }
    return worst;
}

double choquet_integral(const Capacity& nu, const std::vector<double>& by_state) {
    if (by_state.size() != nu.space().size()) throw ValidationError("one value per state required");
    std::vector<std::size_t> order(by_state.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return by_state[a] > by_state[b]; });
    double total = 0.0;
    Capacity::Mask upper = 0;
    double previous = 0.0;
    for (std::size_t i : order) {
        upper |= Capacity::Mask{1} << i;
        const double weight = nu(upper);
        total += by_state[i] * (weight - previous);
        previous = weight;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Concrete oracles

namespace {

std::set<Outcome> alphabet(const UtilityModel& util) {
    std::set<Outcome> out;
    for (const auto& [x, v] : util.values()) out.insert(x);
    return out;
}

StateSpace space_of(const Beliefs& beliefs) {
    std::vector<State> labels;
    for (const auto& [s, p] : beliefs.probs()) labels.push_back(s);
    return StateSpace(std::move(labels));
}

void require_band(double band) {
    if (!(band >= 0.0) || !std::isfinite(band)) throw DomainError("indifference band must be non-negative");
}

class SeuOracle final : public ValueOracle {
public:
    SeuOracle(DSEUModel model, StateSpace space, double band)
        : model_(std::move(model)), space_(std::move(space)), band_(band) {
        require_band(band);
        if (!model_.beliefs.covers(space_)) throw ValidationError("beliefs do not cover the oracle's states");
    }
    double value(const GridAct& f) const override { return act_value(model_, f); }
    double band() const override { return band_; }
    const StateSpace& states() const override { return space_; }
    std::set<Outcome> outcomes() const override { return alphabet(model_.util); }

private:
    DSEUModel model_;
    StateSpace space_;
    double band_;
};

class ChoquetOracle final : public ValueOracle {
public:
    ChoquetOracle(DiscountRate rate, UtilityModel util, Capacity capacity, double band)
        : rate_(rate), util_(std::move(util)), capacity_(std::move(capacity)), band_(band) {
        require_band(band);
    }
    double value(const GridAct& f) const override {
        const auto& space = capacity_.space();
        std::vector<double> by_state(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            by_state[i] = profile_value(rate_, util_, restrict(f, space[i]));
        }
        return choquet_integral(capacity_, by_state);
    }
    double band() const override { return band_; }
    const StateSpace& states() const override { return capacity_.space(); }
    std::set<Outcome> outcomes() const override { return alphabet(util_); }

private:
    DiscountRate rate_;
    UtilityModel util_;
    Capacity capacity_;
    double band_;
};

class NoisyOracle final : public ValueOracle {
public:
    NoisyOracle(OraclePtr inner, double inflation) : inner_(std::move(inner)), inflation_(inflation) {
        require_band(inflation);
        if (!inner_) throw ValidationError("noisy oracle needs an inner oracle");
    }
    double value(const GridAct& f) const override { return inner_->value(f); }
    double band() const override { return inner_->band() + inflation_; }
    const StateSpace& states() const override { return inner_->states(); }
    std::set<Outcome> outcomes() const override { return inner_->outcomes(); }

private:
    OraclePtr inner_;
    double inflation_;
};

class FunctionalOracle final : public ValueOracle {
public:
    FunctionalOracle(StateSpace space, std::set<Outcome> outcomes,
                     std::function<double(const GridAct&)> fn, double band)
        : space_(std::move(space)), outcomes_(std::move(outcomes)), fn_(std::move(fn)), band_(band) {
        require_band(band);
        if (!fn_) throw ValidationError("functional oracle needs a value function");
    }
    double value(const GridAct& f) const override { return fn_(f); }
    double band() const override { return band_; }
    const StateSpace& states() const override { return space_; }
    std::set<Outcome> outcomes() const override { return outcomes_; }

private:
    StateSpace space_;
    std::set<Outcome> outcomes_;
    std::function<double(const GridAct&)> fn_;
    double band_;
};

double rank_dependent_profile_value(DiscountRate rate, const UtilityModel& util, const StepProfile& p,
                                    double exponent) {
    std::vector<std::pair<double, double>> levels;  // (utility, mass)
    for (const auto& piece : p.pieces()) levels.emplace_back(util(piece.outcome), mass(rate, piece.interval));
    std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    double total = 0.0;
    double upper_mass = 0.0;
    double previous = 0.0;
    for (const auto& [u, m] : levels) {
        upper_mass += m;
        const double weight = std::pow(std::min(upper_mass, 1.0), exponent);
        total += u * (weight - previous);
        previous = weight;
    }
    return total;
}

}  // namespace

OraclePtr seu_oracle(const DSEUModel& model, double band) {
    return seu_oracle(model, space_of(model.beliefs), band);
}

OraclePtr seu_oracle(const DSEUModel& model, const StateSpace& space, double band) {
    return std::make_shared<SeuOracle>(model, space, band);
}

OraclePtr choquet_oracle(DiscountRate rate, const UtilityModel& util, const Capacity& capacity,
                         double band) {
    return std::make_shared<ChoquetOracle>(rate, util, capacity, band);
}

OraclePtr noisy_oracle(OraclePtr inner, double band_inflation) {
    return std::make_shared<NoisyOracle>(std::move(inner), band_inflation);
}

OraclePtr functional_oracle(StateSpace space, std::set<Outcome> outcomes,
                            std::function<double(const GridAct&)> value, double band) {
    return std::make_shared<FunctionalOracle>(std::move(space), std::move(outcomes), std::move(value),
                                              band);
}

OraclePtr rank_dependent_time_oracle(const DSEUModel& model, const StateSpace& space, double exponent,
                                     double band) {
    if (!(exponent > 0.0)) throw DomainError("distortion exponent must be positive");
    if (!model.beliefs.covers(space)) throw ValidationError("beliefs do not cover the oracle's states");
    auto fn = [model, exponent](const GridAct& f) {
        double total = 0.0;
        for (std::size_t i = 0; i < f.space().size(); ++i) {
            total += model.beliefs(f.space()[i]) *
                     rank_dependent_profile_value(model.rate, model.util, f.profile(i), exponent);
        }
        return total;
    };
    return functional_oracle(space, alphabet(model.util), std::move(fn), band);
}

OraclePtr outcome_rate_oracle(const DSEUModel& model, const StateSpace& space,
                              const std::map<Outcome, double>& rates, double band) {
    if (!model.beliefs.covers(space)) throw ValidationError("beliefs do not cover the oracle's states");
    std::map<Outcome, DiscountRate> by_outcome;
    for (const auto& [x, u] : model.util.values()) {
        auto it = rates.find(x);
        by_outcome.emplace(x, it == rates.end() ? model.rate : DiscountRate(it->second));
    }
    auto fn = [model, by_outcome](const GridAct& f) {
        double total = 0.0;
        for (std::size_t i = 0; i < f.space().size(); ++i) {
            double row = 0.0;
            for (const auto& piece : f.profile(i).pieces()) {
                row += model.util(piece.outcome) * mass(by_outcome.at(piece.outcome), piece.interval);
            }
            total += model.beliefs(f.space()[i]) * row;
        }
        return total;
    };
    return functional_oracle(space, alphabet(model.util), std::move(fn), band);
}

}  // namespace dseu
