#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/equivalents.hpp"
#include "dseu/oracles.hpp"

namespace dseu {

struct LambdaElicitation {
    DiscountRate rate;
    /// Prefix length at which "x then y" and "y then x" are indifferent.
    double half_life;
    std::size_t queries;
};

/// Half-life query: bisect for the t at which x-then-y and y-then-x are
/// indifferent, then lambda = ln 2 / t. Throws ProtocolError when the
/// oracle does not strictly prefer x to y or never switches.
LambdaElicitation elicit_lambda(const PreferenceOracle& oracle, const Outcome& x, const Outcome& y,
                                const BisectionOptions& options = {});

struct EventElicitation {
    double mu_hat;
    TimeEquivalent equivalent;
};

/// mu(E) = 1 - exp(-lambda t_E) where t_E is the time equivalent of the bet x_E y.
EventElicitation elicit_event(const PreferenceOracle& oracle, DiscountRate rate,
                              const std::set<State>& event, const Outcome& x, const Outcome& y,
                              const BisectionOptions& options = {});

struct AdditivityResidual {
    std::set<State> first;
    std::set<State> second;
    /// mu_hat(E u F) - mu_hat(E) - mu_hat(F).
    double residual;
};

struct ElicitationReport {
    DiscountRate lambda_hat;
    std::map<std::set<State>, double> mu_hat;
    std::vector<AdditivityResidual> additivity_residuals;
    std::size_t query_count = 0;
    double max_abs_residual = 0.0;
    double additivity_tolerance = 0.0;
    /// max_abs_residual <= additivity_tolerance.
    bool additive = true;
};

/// Default threshold for the additivity audit of elicited beliefs.
inline constexpr double kDefaultAdditivityTolerance = 1e-5;

/// Elicits every subset when |S| <= 10, otherwise singletons and pairs, and
/// audits additivity on every disjoint pair whose union was elicited.
ElicitationReport elicit_measure(const PreferenceOracle& oracle, DiscountRate rate, const Outcome& x,
                                 const Outcome& y, const BisectionOptions& options = {},
                                 double additivity_tolerance = kDefaultAdditivityTolerance);

/// elicit_lambda followed by elicit_measure; query counts are summed.
ElicitationReport elicit(const PreferenceOracle& oracle, const Outcome& x, const Outcome& y,
                         const BisectionOptions& options = {},
                         double additivity_tolerance = kDefaultAdditivityTolerance);

// ---------------------------------------------------------------------------
// The three-event indifference chain showing that time-calibrated beliefs
// are additive.

struct NamedAct {
    std::string name;
    GridAct act;
    double value;
};

struct IndifferenceCheck {
    std::string first;
    std::string second;
    std::string reason;
    double gap;
};

struct ChainTrace {
    double lambda;
    double mu_e;
    double mu_f;
    double t_half;
    TimeEquivalent t_e;
    TimeEquivalent t_f;
    TimeEquivalent t_ef;
    double t_f_prime;
    double mu_hat_e;
    double mu_hat_f;
    double mu_hat_ef;
    std::vector<NamedAct> acts;
    std::vector<IndifferenceCheck> checks;
    double identity_lhs;
    double identity_rhs;
    double identity_residual;
    double additivity_residual;
    /// Present when E and F are complementary with equal beliefs: the gap of
    /// the two-matrix argument and the elicited mu(E).
    bool complementary_case = false;
    double complementary_mu_hat = 0.0;
    double max_gap() const;
};

inline const char* const kChainStates[] = {"E", "F", "rest"};
inline constexpr const char* kPrize = "$10";
inline constexpr const char* kNothing = "$0";

/// Builds the SEU agent with beliefs (muE, muF, 1 - muE - muF) on {E, F, rest},
/// the seven matrix acts of the chain and verifies every indifference.
ChainTrace chain_demo(DiscountRate rate, double mu_e, double mu_f);

/// Plain-text rendering of the trace with one matrix per act.
std::string render_chain(const ChainTrace& trace);

}  // namespace dseu
