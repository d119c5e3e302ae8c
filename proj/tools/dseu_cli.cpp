#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dseu/errors.hpp"
#include "dseu/io.hpp"

using namespace dseu;

namespace {

void emit(const io::Json& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << io::dump(doc);
    } else {
        io::write_file(out, doc);
        std::cout << "wrote " << out << "\n";
    }
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Paths {
    std::string model, act, oracle, out, claimed, gamma;
};

int run_eval(const Paths& p) {
    const DSEUModel model = io::model_from_json(io::read_file(p.model));
    const GridAct f = io::act_from_json(io::read_file(p.act));
    const io::EvalResult r{act_value(model, f), act_value_dual(model, f), aa_value(model, f)};
    std::cout << "V(f), state first : " << num(r.value) << "\n"
              << "V(f), time first  : " << num(r.value_dual) << "\n"
              << "difference        : " << num(r.value - r.value_dual) << "\n";
    emit(io::to_json(r), p.out);
    return 0;
}

int run_equiv(const Paths& p, std::string x, std::string y, bool bisect, double tol) {
    const DSEUModel model = io::model_from_json(io::read_file(p.model));
    const GridAct f = io::act_from_json(io::read_file(p.act));
    if (x.empty()) x = model.util.best();
    if (y.empty()) y = model.util.worst();
    const TimeEquivalent closed = time_equivalent_act(model, f, x, y);
    io::Json doc{{"x", x}, {"y", y}, {"value", act_value(model, f)}, {"closed_form", io::to_json(closed)}};
    std::cout << "time equivalent (" << x << " then " << y << "): "
              << (closed.whole_horizon ? std::string("whole horizon") : num(closed.t)) << "\n";
    if (bisect) {
        const auto oracle = seu_oracle(model, f.space());
        BisectionOptions options;
        options.tol = tol;
        options.rate = model.rate;
        const TimeEquivalent b = time_equivalent_bisect(*oracle, f, x, y, options);
        std::cout << "bisection: " << (b.whole_horizon ? std::string("whole horizon") : num(b.t)) << " after "
                  << b.queries << " queries\n";
        doc["bisection"] = io::to_json(b);
    }
    emit(doc, p.out);
    return 0;
}

int run_elicit(const Paths& p, std::string x, std::string y, double tol, double additivity_tol) {
    const io::OracleSpec spec = io::oracle_spec_from_json(io::read_file(p.oracle));
    const auto oracle = spec.build();
    if (x.empty()) x = spec.model.util.best();
    if (y.empty()) y = spec.model.util.worst();
    BisectionOptions options;
    options.tol = tol;
    const ElicitationReport r = elicit(*oracle, x, y, options, additivity_tol);
    std::cout << "lambda_hat        : " << num(r.lambda_hat.value()) << "\n";
    for (const auto& [event, v] : r.mu_hat) {
        std::string name;
        for (const auto& s : event) name += (name.empty() ? "" : ",") + s;
        std::cout << "mu_hat({" << name << "}) = " << num(v) << "\n";
    }
    std::cout << "max additivity residual: " << num(r.max_abs_residual) << " ("
              << (r.additive ? "PASS" : "FAIL") << ", tolerance " << num(r.additivity_tolerance) << ")\n"
              << "queries: " << r.query_count << "\n";
    emit(io::to_json(r), p.out);
    return 0;
}

int run_audit(const Paths& p, const AuditConfig& config) {
    const io::OracleSpec spec = io::oracle_spec_from_json(io::read_file(p.oracle));
    const auto oracle = spec.build();
    std::optional<DSEUModel> claimed;
    if (!p.claimed.empty()) {
        claimed = io::model_from_json(io::read_file(p.claimed));
    } else if (spec.kind == "seu") {
        claimed = spec.model;
    }
    const auto value = [&](const GridAct& f) { return oracle->value(f); };
    const AuditReport report = audit(*oracle, config, claimed, value);
    for (const auto& a : report.axioms) {
        std::cout << a.axiom << ": " << to_string(a.verdict) << " (" << a.checked << " checked, "
                  << a.violations.size() << " violations)";
        if (!a.note.empty()) std::cout << " " << a.note;
        std::cout << "\n";
    }
    emit(io::to_json(report), p.out);
    return 0;
}

int run_bracket(const Paths& p, std::size_t n, const std::string& mode) {
    const DSEUModel model = io::model_from_json(io::read_file(p.model));
    const GridAct f = io::act_from_json(io::read_file(p.act));
    const bool as_profile = mode == "profile" || (mode == "auto" && f.is_deterministic());
    if (as_profile) {
        if (!f.is_deterministic()) throw ValidationError("profile bracketing needs a deterministic act");
        const ProfileBracket b = bracket_profile(model, f.profile(0), n);
        std::cout << num(b.value_lower) << " <= " << num(b.value_target) << " <= " << num(b.value_upper)
                  << ", normalized gap " << num(b.gap) << " (1/N = " << num(1.0 / static_cast<double>(n)) << ")\n";
        emit(io::to_json(b), p.out);
    } else {
        const ActBracket b = bracket_act(model, f, n);
        std::cout << num(b.value_lower) << " <= " << num(b.value_target) << " <= " << num(b.value_upper)
                  << ", normalized gap " << num(b.gap) << " (1/N = " << num(1.0 / static_cast<double>(n)) << ")\n";
        emit(io::to_json(b), p.out);
    }
    return 0;
}

int run_aa(const Paths& p, std::optional<double> t) {
    const DSEUModel model = io::model_from_json(io::read_file(p.model));
    const GridAct f = io::act_from_json(io::read_file(p.act));
    io::AAResult r{reduce_act(model.rate, f), std::nullopt};
    for (std::size_t i = 0; i < f.space().size(); ++i) {
        std::cout << f.space()[i] << ":";
        for (const auto& [o, q] : r.reduced.at(i).probs()) std::cout << " " << o << "=" << num(q);
        std::cout << "\n";
    }
    if (t) {
        if (p.gamma.empty()) throw ValidationError("--t needs --gamma with a lottery act file");
        const LotteryAct gamma = io::lottery_act_from_json(io::read_file(p.gamma));
        auto [lhs, rhs] = independence_witness(model.rate, *t, gamma, f);
        const double gap = max_entry_gap(lhs, rhs);
        std::cout << "independence witness gap at t = " << num(*t) << ": " << num(gap) << "\n";
        r.witness = io::AAResult::Witness{*t, gamma, std::move(lhs), std::move(rhs), gap};
    }
    emit(io::to_json(r), p.out);
    return 0;
}

int run_chain(const Paths& p, double lambda, double mu_e, double mu_f) {
    const ChainTrace trace = chain_demo(DiscountRate(lambda), mu_e, mu_f);
    if (!p.out.empty()) io::write_file(p.out, io::to_json(trace));
    std::cout << render_chain(trace);
    return 0;
}

int run_ellsberg(const Paths& p, double lambda, double eps) {
    const StateSpace space({"R", "B"});
    const Beliefs half(std::map<State, double>{{"R", 0.5}, {"B", 0.5}});
    const UtilityModel util(std::map<Outcome, double>{{"$0", 0.0}, {"$100", 1.0}});
    const DiscountRate rate(lambda);
    const Capacity nu = Capacity::contamination(space, half, eps);
    const auto ambiguous = choquet_oracle(rate, util, nu);
    const auto additive = choquet_oracle(rate, util, Capacity::additive(space, half));

    // Bet on red against a bet on the first half of the time measure.
    const GridAct bet_red = GridAct::bet(space, {"R"}, "$100", "$0");
    const GridAct time_bet =
        GridAct::deterministic(space, StepProfile::prefix("$100", quantile(rate, 0.5), "$0"));
    const Preference choice = ambiguous->compare(bet_red, time_bet);

    const ElicitationReport amb = elicit(*ambiguous, "$100", "$0");
    const ElicitationReport add = elicit(*additive, "$100", "$0");
    std::cout << "capacity: nu(R) = nu(B) = " << num(nu.of({"R"})) << ", nu(S) = 1\n"
              << "bet on R vs even time bet: " << to_string(choice) << "\n"
              << "ambiguous oracle  mu_hat(R) = " << num(amb.mu_hat.at({"R"})) << ", mu_hat(B) = "
              << num(amb.mu_hat.at({"B"})) << ", residual " << num(amb.max_abs_residual) << " -> "
              << (amb.additive ? "PASS" : "FAIL") << "\n"
              << "additive oracle   mu_hat(R) = " << num(add.mu_hat.at({"R"})) << ", mu_hat(B) = "
              << num(add.mu_hat.at({"B"})) << ", residual " << num(add.max_abs_residual) << " -> "
              << (add.additive ? "PASS" : "FAIL") << "\n";
    io::Json doc{{"epsilon", eps},
                 {"lambda", lambda},
                 {"bet_red_vs_time_bet", to_string(choice)},
                 {"ambiguous", io::to_json(amb)},
                 {"additive", io::to_json(add)}};
    if (!p.out.empty()) io::write_file(p.out, doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discounted subjective expected utility toolkit"};
    app.require_subcommand(1);
    Paths p;
    std::string x, y, mode = "auto";
    double tol = 1e-9, additivity_tol = kDefaultAdditivityTolerance;
    double lambda = 1.0, mu_e = 0.3, mu_f = 0.2, eps = 0.1;
    bool bisect = false;
    std::size_t n_bins = 8;
    std::optional<double> witness_t;
    AuditConfig config;

    auto add_out = [&](CLI::App* c) { c->add_option("--out", p.out, "Write the JSON result to this path"); };

    auto* eval = app.add_subcommand("eval", "Value of an act under a model, in both integration orders");
    eval->add_option("model", p.model)->required()->check(CLI::ExistingFile);
    eval->add_option("act", p.act)->required()->check(CLI::ExistingFile);
    add_out(eval);

    auto* equiv = app.add_subcommand("equiv", "Time equivalent of an act");
    equiv->add_option("model", p.model)->required()->check(CLI::ExistingFile);
    equiv->add_option("act", p.act)->required()->check(CLI::ExistingFile);
    equiv->add_option("--x", x, "Better outcome (default: model best)");
    equiv->add_option("--y", y, "Worse outcome (default: model worst)");
    equiv->add_flag("--bisect", bisect, "Also run the oracle bisection");
    equiv->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);
    add_out(equiv);

    auto* elicit_cmd = app.add_subcommand("elicit", "Recover lambda and beliefs from an oracle");
    elicit_cmd->add_option("oracle", p.oracle)->required()->check(CLI::ExistingFile);
    elicit_cmd->add_option("--x", x);
    elicit_cmd->add_option("--y", y);
    elicit_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    elicit_cmd->add_option("--additivity-tol", additivity_tol)->check(CLI::PositiveNumber);
    add_out(elicit_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "Audit an oracle against the axioms");
    audit_cmd->add_option("oracle", p.oracle)->required()->check(CLI::ExistingFile);
    audit_cmd->add_option("--samples", config.samples)->check(CLI::Range(1, 1000000));
    audit_cmd->add_option("--seed", config.seed);
    audit_cmd->add_option("--horizon-max", config.horizon_max)->check(CLI::Range(1, 100000));
    audit_cmd->add_option("--claimed", p.claimed, "Model for the decomposition check")->check(CLI::ExistingFile);
    add_out(audit_cmd);

    auto* bracket = app.add_subcommand("bracket", "Two-outcome sandwich of an act");
    bracket->add_option("model", p.model)->required()->check(CLI::ExistingFile);
    bracket->add_option("act", p.act)->required()->check(CLI::ExistingFile);
    bracket->add_option("-N,--bins", n_bins)->check(CLI::Range(1, 1 << 20));
    bracket->add_option("--mode", mode)->check(CLI::IsMember({"auto", "profile", "act"}));
    add_out(bracket);

    auto* aa = app.add_subcommand("aa", "Reduce an act to a lottery act");
    aa->add_option("model", p.model)->required()->check(CLI::ExistingFile);
    aa->add_option("act", p.act)->required()->check(CLI::ExistingFile);
    aa->add_option("--t", witness_t, "Run the independence witness at this time")->check(CLI::NonNegativeNumber);
    aa->add_option("--gamma", p.gamma, "Lottery act for the witness")->check(CLI::ExistingFile);
    add_out(aa);

    auto* s2 = app.add_subcommand("demo-section2", "Three-event indifference chain");
    s2->add_option("--lambda", lambda);
    s2->add_option("--muE", mu_e);
    s2->add_option("--muF", mu_f);
    add_out(s2);

    auto* ells = app.add_subcommand("demo-ellsberg", "Ambiguity shows up as non-additive beliefs");
    ells->add_option("--lambda", lambda);
    ells->add_option("--epsilon", eps);
    add_out(ells);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "\n" << app.help();
        return 1;
    }

    try {
        if (*eval) return run_eval(p);
        if (*equiv) return run_equiv(p, x, y, bisect, tol);
        if (*elicit_cmd) return run_elicit(p, x, y, tol, additivity_tol);
        if (*audit_cmd) return run_audit(p, config);
        if (*bracket) return run_bracket(p, n_bins, mode);
        if (*aa) return run_aa(p, witness_t);
        if (*s2) return run_chain(p, lambda, mu_e, mu_f);
        if (*ells) return run_ellsberg(p, lambda, eps);
    } catch (const ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
