#include "dseu/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "dseu/errors.hpp"

namespace dseu {

UtilityModel::UtilityModel(std::map<Outcome, double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("utility needs at least one outcome");
    for (const auto& [x, v] : values_) {
        if (!std::isfinite(v)) throw ValidationError("utility of '" + x + "' is not finite");
    }
    if (min() == max()) throw ValidationError("utility must be nonconstant");
}

double UtilityModel::operator()(const Outcome& x) const {
    auto it = values_.find(x);
    if (it == values_.end()) throw LookupError("no utility for outcome '" + x + "'");
    return it->second;
}

double UtilityModel::min() const { return values_.at(worst()); }
double UtilityModel::max() const { return values_.at(best()); }

const Outcome& UtilityModel::worst() const {
    return std::min_element(values_.begin(), values_.end(),
                            [](const auto& a, const auto& b) { return a.second < b.second; })
        ->first;
}

const Outcome& UtilityModel::best() const {
    // max_element returns the first maximum only with a strict comparator on
    // reversed arguments; spell it out.
    auto best = values_.begin();
    for (auto it = values_.begin(); it != values_.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

Beliefs::Beliefs(std::map<State, double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("beliefs need at least one state");
    double total = 0.0;
    for (const auto& [s, p] : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw ValidationError("probability of state '" + s + "' must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw ValidationError("state probabilities must sum to 1");
    }
}

Beliefs Beliefs::uniform(const StateSpace& space) {
    std::map<State, double> probs;
    for (const auto& s : space.labels()) probs[s] = 1.0 / static_cast<double>(space.size());
    return Beliefs(std::move(probs));
}

double Beliefs::operator()(const State& s) const {
    auto it = probs_.find(s);
    if (it == probs_.end()) throw LookupError("no probability for state '" + s + "'");
    return it->second;
}

double Beliefs::of(const std::set<State>& event) const {
    double total = 0.0;
    for (const auto& s : event) total += (*this)(s);
    return total;
}

bool Beliefs::covers(const StateSpace& space) const {
    return std::all_of(space.labels().begin(), space.labels().end(),
                       [&](const State& s) { return probs_.count(s) != 0; });
}

double profile_value(DiscountRate rate, const UtilityModel& util, const StepProfile& p) {
    double total = 0.0;
    for (const auto& piece : p.pieces()) total += mass(rate, piece.interval) * util(piece.outcome);
    return total;
}

double profile_value(const DSEUModel& model, const StepProfile& p) {
    return profile_value(model.rate, model.util, p);
}

double profile_prefix_value(DiscountRate rate, const UtilityModel& util, const StepProfile& p,
                            double t) {
    if (!(t >= 0.0)) throw DomainError("prefix length must be non-negative");
    double total = 0.0;
    for (const auto& piece : p.pieces()) {
        if (piece.interval.lo() >= t) break;
        const double hi = std::min(piece.interval.hi(), t);
        total += mass(rate, TimeInterval(piece.interval.lo(), hi)) * util(piece.outcome);
    }
    return total;
}

namespace {

void require_coverage(const DSEUModel& model, const GridAct& f) {
    if (!model.beliefs.covers(f.space())) throw LookupError("beliefs do not cover the act's states");
}

}  // namespace

double act_value(const DSEUModel& model, const GridAct& f) {
    require_coverage(model, f);
    double total = 0.0;
    for (std::size_t i = 0; i < f.space().size(); ++i) {
        total += model.beliefs(f.space()[i]) * profile_value(model, f.profile(i));
    }
    return total;
}

double act_value_dual(const DSEUModel& model, const GridAct& f) {
    require_coverage(model, f);
    const auto cuts = common_breakpoints(f.profiles());
    // Walk each row with its own cursor instead of a binary search per cell.
    std::vector<std::size_t> cursor(f.space().size(), 0);
    double total = 0.0;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        const TimeInterval cell(cuts[c], c + 1 < cuts.size() ? cuts[c + 1] : kInfinity);
        double expected = 0.0;
        for (std::size_t i = 0; i < f.space().size(); ++i) {
            const auto& pieces = f.profile(i).pieces();
            while (!pieces[cursor[i]].interval.contains(cell.lo())) ++cursor[i];
            expected += model.beliefs(f.space()[i]) * model.util(pieces[cursor[i]].outcome);
        }
        total += mass(model.rate, cell) * expected;
    }
    return total;
}

double act_prefix_value(const DSEUModel& model, const GridAct& h, double t) {
    require_coverage(model, h);
    double total = 0.0;
    for (std::size_t i = 0; i < h.space().size(); ++i) {
        total += model.beliefs(h.space()[i]) *
                 profile_prefix_value(model.rate, model.util, h.profile(i), t);
    }
    return total;
}

DecompositionResult decomposition_check(const DSEUModel& model, const GridAct& h, double t,
                                        const GridAct& f) {
    const double lhs = act_value(model, splice_time(h, t, f));
    const double rhs = act_prefix_value(model, h, t) + std::exp(-model.rate.value() * t) * act_value(model, f);
    return {lhs, rhs};
}

}  // namespace dseu
