#include "dseu/elicitation.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dseu/errors.hpp"

namespace dseu {

LambdaElicitation elicit_lambda(const PreferenceOracle& oracle, const Outcome& x, const Outcome& y,
                                const BisectionOptions& options) {
    const StateSpace& space = oracle.states();
    if (oracle.compare(GridAct::constant(space, x), GridAct::constant(space, y)) !=
        Preference::StrictlyPrefersFirst) {
        throw ProtocolError("half-life query needs a strict preference for '" + x + "' over '" + y + "'");
    }
    auto probe = [&](double t) {
        return oracle.compare(GridAct::deterministic(space, StepProfile::prefix(x, t, y)),
                              GridAct::deterministic(space, StepProfile::prefix(y, t, x)));
    };
    BisectionOptions search = options;
    search.rate.reset();
    search.max_queries = options.max_queries > 0 ? options.max_queries - 1 : 0;
    const TimeEquivalent half = bisect_switch_time(probe, search);
    if (!(half.t > 0.0) || half.whole_horizon) {
        throw ProtocolError("half-life query produced a degenerate switch point");
    }
    return LambdaElicitation{DiscountRate(std::numbers::ln2 / half.t), half.t, half.queries + 1};
}

EventElicitation elicit_event(const PreferenceOracle& oracle, DiscountRate rate,
                              const std::set<State>& event, const Outcome& x, const Outcome& y,
                              const BisectionOptions& options) {
    const StateSpace& space = oracle.states();
    for (const auto& s : event) space.index_of(s);
    if (event.empty()) return {0.0, TimeEquivalent{}};
    if (event.size() == space.size()) {
        TimeEquivalent whole;
        whole.whole_horizon = true;
        whole.t = kInfinity;
        return {1.0, whole};
    }
    BisectionOptions search = options;
    search.rate = rate;
    const TimeEquivalent te = time_equivalent_bisect(oracle, GridAct::bet(space, event, x, y), x, y, search);
    const double mu_hat = te.whole_horizon ? 1.0 : cdf(rate, te.t);
    return {mu_hat, te};
}

namespace {

std::set<State> subset_of(const StateSpace& space, std::uint32_t mask) {
    std::set<State> out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) out.insert(space[i]);
    }
    return out;
}

}  // namespace

ElicitationReport elicit_measure(const PreferenceOracle& oracle, DiscountRate rate, const Outcome& x,
                                 const Outcome& y, const BisectionOptions& options,
                                 double additivity_tolerance) {
    const StateSpace& space = oracle.states();
    const std::size_t n = space.size();
    ElicitationReport report{rate, {}, {}, 0, 0.0, additivity_tolerance, true};

    auto record = [&](const std::set<State>& event) {
        if (report.mu_hat.count(event)) return;
        const auto result = elicit_event(oracle, rate, event, x, y, options);
        report.mu_hat[event] = result.mu_hat;
        report.query_count += result.equivalent.queries;
    };
    auto add_residual = [&](const std::set<State>& a, const std::set<State>& b) {
        std::set<State> both = a;
        both.insert(b.begin(), b.end());
        const double r = report.mu_hat.at(both) - report.mu_hat.at(a) - report.mu_hat.at(b);
        report.additivity_residuals.push_back({a, b, r});
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
    };

    if (n <= 10) {
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (std::uint32_t m = 1; m <= full; ++m) record(subset_of(space, m));
        // Unordered disjoint pairs of non-empty subsets: require a's lowest
        // bit below b's so each pair is listed once.
        for (std::uint32_t a = 1; a <= full; ++a) {
            const std::uint32_t rest = full & ~a;
            for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
                if ((a & -a) < (b & -b)) add_residual(subset_of(space, a), subset_of(space, b));
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) record({space[i]});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                record({space[i], space[j]});
                add_residual({space[i]}, {space[j]});
            }
        }
    }
    report.additive = report.max_abs_residual <= additivity_tolerance;
    return report;
}

ElicitationReport elicit(const PreferenceOracle& oracle, const Outcome& x, const Outcome& y,
                         const BisectionOptions& options, double additivity_tolerance) {
    const LambdaElicitation lambda = elicit_lambda(oracle, x, y, options);
    ElicitationReport report = elicit_measure(oracle, lambda.rate, x, y, options, additivity_tolerance);
    report.query_count += lambda.queries;
    return report;
}

// ---------------------------------------------------------------------------

double ChainTrace::max_gap() const {
    double worst = 0.0;
    for (const auto& c : checks) worst = std::max(worst, c.gap);
    return worst;
}

namespace {

/// Profile from (start, outcome) steps; steps starting at +inf or not after
/// the previous start are dropped, so degenerate cells vanish.
StepProfile steps(std::vector<std::pair<double, Outcome>> cells) {
    std::vector<std::pair<double, Outcome>> kept;
    for (auto& c : cells) {
        if (c.first == kInfinity) continue;
        if (!kept.empty() && c.first <= kept.back().first) {
            kept.back().second = c.second;
            continue;
        }
        kept.push_back(std::move(c));
    }
    return normalize(StepProfile::from_starts(std::move(kept)));
}

}  // namespace

ChainTrace chain_demo(DiscountRate rate, double mu_e, double mu_f) {
    if (!(mu_e >= 0.0) || !(mu_f >= 0.0) || !(mu_e + mu_f <= 1.0 + kProbabilityTolerance)) {
        throw ValidationError("need muE >= 0, muF >= 0 and muE + muF <= 1");
    }
    const double mu_rest = std::max(0.0, 1.0 - mu_e - mu_f);
    const StateSpace space({kChainStates[0], kChainStates[1], kChainStates[2]});
    const DSEUModel model{rate, UtilityModel({{kPrize, 1.0}, {kNothing, 0.0}}),
                          Beliefs({{"E", mu_e}, {"F", mu_f}, {"rest", mu_rest}})};
    const Outcome hi = kPrize;
    const Outcome lo = kNothing;

    ChainTrace tr{};
    tr.lambda = rate.value();
    tr.mu_e = mu_e;
    tr.mu_f = mu_f;
    tr.t_half = quantile(rate, 0.5);
    tr.t_e = time_equivalent_act(model, GridAct::bet(space, {"E"}, hi, lo), hi, lo);
    tr.t_f = time_equivalent_act(model, GridAct::bet(space, {"F"}, hi, lo), hi, lo);
    tr.t_ef = time_equivalent_act(model, GridAct::bet(space, {"E", "F"}, hi, lo), hi, lo);
    auto calibrate = [&](const TimeEquivalent& te) { return te.whole_horizon ? 1.0 : cdf(rate, te.t); };
    tr.mu_hat_e = calibrate(tr.t_e);
    tr.mu_hat_f = calibrate(tr.t_f);
    tr.mu_hat_ef = calibrate(tr.t_ef);
    // 1 - e^{-lambda t'_F} = e^{-lambda t} (1 - e^{-lambda t_F})
    tr.t_f_prime = quantile(rate, std::exp(-rate.value() * tr.t_half) * tr.mu_hat_f);

    const double t = tr.t_half;
    const double t_ef = t + tr.t_ef.t;
    const double t_f = t + tr.t_f.t;
    const double t_e = t + tr.t_e.t;
    const double tfp = tr.t_f_prime;

    auto act = [&](StepProfile e, StepProfile f, StepProfile rest) {
        return GridAct(space, {std::move(e), std::move(f), std::move(rest)});
    };
    const StepProfile nothing = StepProfile::constant(lo);

    // chain 1
    const GridAct a1 = act(steps({{0, hi}, {t, lo}}), steps({{0, hi}, {t, lo}}), nothing);
    const GridAct a2 = act(steps({{0, lo}, {t, hi}}), steps({{0, lo}, {t, hi}}), nothing);
    const StepProfile delayed_sure = steps({{0, lo}, {t, hi}, {t_ef, lo}});
    const GridAct a3 = act(delayed_sure, delayed_sure, delayed_sure);
    // chain 2
    const GridAct b2 = act(steps({{0, hi}, {t, lo}}), steps({{0, lo}, {t, hi}}), nothing);
    const StepProfile f_sure = steps({{0, lo}, {t, hi}, {t_f, lo}});
    const GridAct b3 = act(steps({{0, hi}, {t, hi}, {t_f, lo}}), f_sure, f_sure);
    // chain 3
    const StepProfile advanced = steps({{0, hi}, {tfp, lo}});
    const GridAct c2 = act(steps({{0, hi}, {tfp, lo}, {t, hi}}), advanced, advanced);
    const StepProfile all_sure = steps({{0, hi}, {tfp, lo}, {t, hi}, {t_e, lo}});
    const GridAct c3 = act(all_sure, all_sure, all_sure);

    for (auto [name, a] : {std::pair<const char*, const GridAct*>{"1a", &a1}, {"1b", &a2},
                           {"1c", &a3}, {"2b", &b2}, {"2c", &b3}, {"3b", &c2},
                           {"3c", &c3}}) {
        tr.acts.push_back({name, *a, act_value(model, *a)});
    }
    auto value_of = [&](const std::string& name) {
        return std::find_if(tr.acts.begin(), tr.acts.end(), [&](const NamedAct& n) { return n.name == name; })
            ->value;
    };
    auto check = [&](const char* f, const char* g, const char* reason) {
        tr.checks.push_back({f, g, reason, std::abs(value_of(f) - value_of(g))});
    };
    check("1a", "1b", "dominance");
    check("1b", "1c", "stationarity");
    check("1a", "2b", "dominance");
    check("2b", "2c", "stationarity");
    check("2c", "3b", "dominance");
    check("3b", "3c", "stationarity");
    check("1c", "3c", "transitivity");

    const double lam = rate.value();
    tr.identity_lhs = std::exp(-lam * t) - std::exp(-lam * t_ef);
    tr.identity_rhs = -std::expm1(-lam * tfp) + std::exp(-lam * t) - std::exp(-lam * t_e);
    tr.identity_residual = tr.identity_lhs - tr.identity_rhs;
    tr.additivity_residual = tr.mu_hat_ef - tr.mu_hat_e - tr.mu_hat_f;

    if (mu_e == mu_f && std::abs(mu_e + mu_f - 1.0) <= kProbabilityTolerance) {
        tr.complementary_case = true;
        const GridAct k1 = act(StepProfile::constant(hi), nothing, nothing);
        const GridAct k2 = act(steps({{0, hi}, {t, lo}}), steps({{0, lo}, {t, hi}}), nothing);
        const GridAct k3 = act(steps({{0, hi}, {t, lo}}), steps({{0, hi}, {t, lo}}), nothing);
        tr.acts.push_back({"complementary.a", k1, act_value(model, k1)});
        tr.acts.push_back({"complementary.b", k2, act_value(model, k2)});
        tr.acts.push_back({"complementary.c", k3, act_value(model, k3)});
        check("complementary.a", "complementary.b", "stationarity");
        check("complementary.b", "complementary.c", "dominance");
        tr.complementary_mu_hat = tr.mu_hat_e;
    }
    return tr;
}

std::string render_chain(const ChainTrace& tr) {
    std::ostringstream out;
    auto fmt = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };
    auto fmt_te = [&](const TimeEquivalent& te) { return te.whole_horizon ? std::string("inf") : fmt(te.t); };
    out << "lambda = " << fmt(tr.lambda) << ", mu(E) = " << fmt(tr.mu_e) << ", mu(F) = " << fmt(tr.mu_f) << "\n";
    out << "t = " << fmt(tr.t_half) << " (e^{-lambda t} = 1/2), t_E = " << fmt_te(tr.t_e)
        << ", t_F = " << fmt_te(tr.t_f) << ", t_EuF = " << fmt_te(tr.t_ef) << ", t'_F = " << fmt(tr.t_f_prime)
        << "\n\n";
    for (const auto& named : tr.acts) {
        out << named.name << "  (value " << fmt(named.value) << ")\n";
        out << "    E      F      rest   | time\n";
        const auto cuts = common_breakpoints(named.act.profiles());
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            const double lo = cuts[i];
            char row[160];
            std::snprintf(row, sizeof row, "    %-6s %-6s %-6s | [%s, %s)\n", named.act.profile(0).at(lo).c_str(),
                          named.act.profile(1).at(lo).c_str(), named.act.profile(2).at(lo).c_str(),
                          fmt(lo).c_str(), i + 1 < cuts.size() ? fmt(cuts[i + 1]).c_str() : "inf");
            out << row;
        }
        out << "\n";
    }
    for (const auto& c : tr.checks) {
        out << c.first << " ~ " << c.second << " (" << c.reason << "): gap " << fmt(c.gap) << "\n";
    }
    out << "\nidentity: " << fmt(tr.identity_lhs) << " = " << fmt(tr.identity_rhs) << ", residual "
        << fmt(tr.identity_residual) << "\n";
    out << "mu(EuF) - mu(E) - mu(F) = " << fmt(tr.additivity_residual) << "\n";
    if (tr.complementary_case) out << "complementary case: mu(E) = " << fmt(tr.complementary_mu_hat) << "\n";
    const bool ok = tr.max_gap() <= 1e-12 && std::abs(tr.identity_residual) <= 1e-12 &&
                    std::abs(tr.additivity_residual) <= 1e-12;
    out << (ok ? "additivity residual <= 1e-12" : "additivity residual EXCEEDS 1e-12") << "\n";
    return out.str();
}

}  // namespace dseu
