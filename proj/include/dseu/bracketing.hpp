#pragma once

#include <set>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"

namespace dseu {

/// Two-outcome sandwich of a deterministic profile. Values are in the model's
/// utility units; `gap` is measured on the [0, 1] normalized scale, so
/// gap <= 1/N.
struct ProfileBracket {
    StepProfile lower;
    StepProfile upper;
    double value_lower;
    double value_target;
    double value_upper;
    double gap;
    /// Utility bins A_1..A_N (possibly empty).
    std::vector<TimeSet> bins;
    /// Selections B_0..B_N with mass(B_n) = n/N and B_n independent of every bin.
    std::vector<TimeSet> selections;
    Outcome bottom;
    Outcome top;
};

/// State-side sandwich of a grid act.
struct ActBracket {
    GridAct lower;
    GridAct upper;
    double value_lower;
    double value_target;
    double value_upper;
    double gap;
    /// State bins E_1..E_N by normalized conditional value.
    std::vector<std::set<State>> bins;
    Outcome bottom;
    Outcome top;
};

/// Utility on the [0, 1] scale fixed by the model's worst and best outcomes.
double normalized_utility(const UtilityModel& util, const Outcome& x);

/// Index n in [0, N) with n/N <= z < (n+1)/N; z == 1 falls in the top bin.
std::size_t bin_index(double z, std::size_t n_bins);

/// A_n = { t : (n-1)/N <= u(p(t)) < n/N } on the normalized scale; the top bin is closed at 1.
std::vector<TimeSet> utility_bins(const DSEUModel& model, const StepProfile& p, std::size_t n_bins);

/// Union over bins A of a left portion of each of A's intervals holding
/// fraction p_target of its mass, so mass(B n A) = p_target mass(A).
/// Throws RangeError for p_target >= 1.
TimeSet independent_selection(DiscountRate rate, const std::vector<TimeSet>& bins, double p_target);

ProfileBracket bracket_profile(const DSEUModel& model, const StepProfile& p, std::size_t n_bins);

ActBracket bracket_act(const DSEUModel& model, const GridAct& f, std::size_t n_bins);

}  // namespace dseu
