#include "dseu/bracketing.hpp"

#include <algorithm>
#include <cmath>

#include "dseu/errors.hpp"

namespace dseu {

double normalized_utility(const UtilityModel& util, const Outcome& x) {
    return (util(x) - util.min()) / (util.max() - util.min());
}

std::size_t bin_index(double z, std::size_t n_bins) {
    const double n = static_cast<double>(n_bins);
    auto k = static_cast<std::size_t>(std::clamp(std::floor(z * n), 0.0, n - 1.0));
    // floor(z N) can land one bin off when z sits on a grid point.
    while (k > 0 && z < static_cast<double>(k) / n) --k;
    while (k + 1 < n_bins && z >= static_cast<double>(k + 1) / n) ++k;
    return k;
}

namespace {

void require_bins(std::size_t n_bins) {
    if (n_bins < 1) throw DomainError("number of bins must be at least 1");
}

}  // namespace

std::vector<TimeSet> utility_bins(const DSEUModel& model, const StepProfile& p, std::size_t n_bins) {
    require_bins(n_bins);
    std::vector<std::vector<TimeInterval>> members(n_bins);
    for (const auto& piece : p.pieces()) {
        members[bin_index(normalized_utility(model.util, piece.outcome), n_bins)].push_back(piece.interval);
    }
    std::vector<TimeSet> bins;
    bins.reserve(n_bins);
    for (auto& m : members) bins.push_back(TimeSet::from_intervals(std::move(m)));
    return bins;
}

TimeSet independent_selection(DiscountRate rate, const std::vector<TimeSet>& bins, double p_target) {
    if (std::isnan(p_target) || p_target < 0.0) throw DomainError("selection fraction must be non-negative");
    if (p_target >= 1.0) throw RangeError("selection fraction must be below 1");
    if (p_target == 0.0) return {};
    const double weights[] = {p_target, 1.0 - p_target};
    std::vector<TimeInterval> picked;
    for (const auto& bin : bins) {
        for (const auto& iv : bin.intervals()) {
            const auto cells = split_interval_indexed(rate, iv, weights);
            if (cells[0]) picked.push_back(*cells[0]);
        }
    }
    return TimeSet::from_intervals(std::move(picked));
}

ProfileBracket bracket_profile(const DSEUModel& model, const StepProfile& p, std::size_t n_bins) {
    require_bins(n_bins);
    const Outcome bottom = model.util.worst();
    const Outcome top = model.util.best();
    const double n = static_cast<double>(n_bins);

    ProfileBracket out{StepProfile::constant(bottom), StepProfile::constant(top), 0, 0, 0, 0, {}, {}, bottom, top};
    out.bins = utility_bins(model, p, n_bins);
    out.selections.reserve(n_bins + 1);
    for (std::size_t k = 0; k < n_bins; ++k) {
        out.selections.push_back(independent_selection(model.rate, out.bins, static_cast<double>(k) / n));
    }
    out.selections.push_back(TimeSet::whole());

    // Lower bracket pays `top` on B_{n-1} n A_n, upper on B_n n A_n.
    std::vector<TimeInterval> lower_top;
    std::vector<TimeInterval> upper_top;
    for (std::size_t k = 0; k < n_bins; ++k) {
        const TimeSet below = intersect(out.selections[k], out.bins[k]);
        const TimeSet above = intersect(out.selections[k + 1], out.bins[k]);
        lower_top.insert(lower_top.end(), below.intervals().begin(), below.intervals().end());
        upper_top.insert(upper_top.end(), above.intervals().begin(), above.intervals().end());
    }
    const StepProfile all_top = StepProfile::constant(top);
    const StepProfile all_bottom = StepProfile::constant(bottom);
    out.lower = splice_times(all_top, TimeSet::from_intervals(std::move(lower_top)), all_bottom);
    out.upper = splice_times(all_top, TimeSet::from_intervals(std::move(upper_top)), all_bottom);

    out.value_lower = profile_value(model, out.lower);
    out.value_target = profile_value(model, p);
    out.value_upper = profile_value(model, out.upper);
    out.gap = (out.value_upper - out.value_lower) / (model.util.max() - model.util.min());
    return out;
}

ActBracket bracket_act(const DSEUModel& model, const GridAct& f, std::size_t n_bins) {
    require_bins(n_bins);
    if (!model.beliefs.covers(f.space())) throw LookupError("beliefs do not cover the act's states");
    const Outcome bottom = model.util.worst();
    const Outcome top = model.util.best();
    const double n = static_cast<double>(n_bins);
    const double range = model.util.max() - model.util.min();

    // x_k pays `top` on [0, q_k) with mass(q_k) = k/N.
    auto indicator = [&](std::size_t k) {
        if (k == 0) return StepProfile::constant(bottom);
        if (k == n_bins) return StepProfile::constant(top);
        return StepProfile::prefix(top, quantile(model.rate, static_cast<double>(k) / n), bottom);
    };

    std::vector<std::set<State>> bins(n_bins);
    std::vector<StepProfile> lower_rows;
    std::vector<StepProfile> upper_rows;
    for (std::size_t i = 0; i < f.space().size(); ++i) {
        const double z = (profile_value(model, f.profile(i)) - model.util.min()) / range;
        const std::size_t k = bin_index(z, n_bins);
        bins[k].insert(f.space()[i]);
        lower_rows.push_back(indicator(k));
        upper_rows.push_back(indicator(k + 1));
    }
    ActBracket out{GridAct(f.space(), std::move(lower_rows)), GridAct(f.space(), std::move(upper_rows)),
                   0, 0, 0, 0, std::move(bins), bottom, top};
    out.value_lower = act_value(model, out.lower);
    out.value_target = act_value(model, f);
    out.value_upper = act_value(model, out.upper);
    out.gap = (out.value_upper - out.value_lower) / range;
    return out;
}

}  // namespace dseu
