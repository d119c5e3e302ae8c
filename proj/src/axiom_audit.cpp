#include "dseu/axiom_audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dseu/errors.hpp"
#include "dseu/random_acts.hpp"

namespace dseu {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

bool AuditReport::all_pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomReport& a) { return a.verdict == Verdict::Pass; });
}

const AxiomReport& AuditReport::operator[](const std::string& axiom) const {
    for (const auto& a : axioms) {
        if (a.axiom == axiom) return a;
    }
    throw LookupError("no audit entry for '" + axiom + "'");
}

bool replays(const PreferenceOracle& oracle, const Violation& v) {
    return std::all_of(v.queries.begin(), v.queries.end(), [&](const Query& q) {
        return oracle.compare(q.first, q.second) == q.response;
    });
}

namespace {

void finish(AxiomReport& r) { r.verdict = r.violations.empty() ? Verdict::Pass : Verdict::Fail; }

ActSampler sampler_for(const PreferenceOracle& oracle, const AuditConfig& config) {
    const auto alphabet = oracle.outcomes();
    return ActSampler{std::vector<Outcome>(alphabet.begin(), alphabet.end()), DiscountRate(config.generation_rate),
                      config.max_pieces};
}

/// Pairwise responses between constant acts, asked once per check.
struct OutcomeOrder {
    std::vector<Outcome> outcomes;
    std::vector<std::vector<Preference>> resp;  // resp[i][j] = compare(const i, const j)

    OutcomeOrder(const PreferenceOracle& oracle) {
        const auto alphabet = oracle.outcomes();
        outcomes.assign(alphabet.begin(), alphabet.end());
        const auto& space = oracle.states();
        resp.assign(outcomes.size(), std::vector<Preference>(outcomes.size(), Preference::Indifferent));
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
                resp[i][j] = oracle.compare(GridAct::constant(space, outcomes[i]), GridAct::constant(space, outcomes[j]));
                resp[j][i] = flip(resp[i][j]);
            }
        }
    }

    std::size_t index(const Outcome& x) const {
        return static_cast<std::size_t>(std::find(outcomes.begin(), outcomes.end(), x) - outcomes.begin());
    }
    Preference cmp(const Outcome& a, const Outcome& b) const { return resp[index(a)][index(b)]; }

    /// Outcome that no other outcome is strictly worse than (first such).
    const Outcome& worst() const { return extreme(Preference::StrictlyPrefersFirst); }
    const Outcome& best() const { return extreme(Preference::StrictlyPrefersSecond); }

    /// Random outcome o' with cmp(o', x) in `allowed`, preferring strict ones half the time.
    std::optional<Outcome> pick(std::mt19937_64& rng, const Outcome& x, Preference strict) const {
        std::vector<Outcome> weak, strong;
        for (const auto& o : outcomes) {
            const Preference p = cmp(o, x);
            if (p == strict) strong.push_back(o);
            if (p != flip(strict)) weak.push_back(o);
        }
        std::bernoulli_distribution coin(0.5);
        const auto& pool = (!strong.empty() && coin(rng)) ? strong : weak;
        if (pool.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
        return pool[d(rng)];
    }

private:
    const Outcome& extreme(Preference beats) const {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < outcomes.size(); ++j) {
                if (resp[i][j] == beats) ok = false;
            }
            if (ok) return outcomes[i];
        }
        return outcomes.front();
    }
};

Query ask(const PreferenceOracle& oracle, const GridAct& f, const GridAct& g) {
    return Query{f, g, oracle.compare(f, g)};
}

/// Replaces the outcome on random pieces with ones that compare as `direction`
/// (StrictlyPrefersFirst = better, StrictlyPrefersSecond = worse) or equal.
/// Returns the perturbed profile and the set where it is strictly changed.
std::pair<StepProfile, TimeSet> perturb(std::mt19937_64& rng, const StepProfile& p, const OutcomeOrder& order,
                                        Preference direction) {
    std::vector<Piece> pieces = p.pieces();
    std::vector<TimeInterval> strict;
    std::bernoulli_distribution touch(0.5);
    for (auto& piece : pieces) {
        if (!touch(rng)) continue;
        const auto replacement = order.pick(rng, piece.outcome, direction);
        if (!replacement) continue;
        if (order.cmp(*replacement, piece.outcome) == direction) strict.push_back(piece.interval);
        piece.outcome = *replacement;
    }
    return {normalize(StepProfile(std::move(pieces))), TimeSet::from_intervals(std::move(strict))};
}

}  // namespace

AxiomReport check_stationarity(const PreferenceOracle& oracle, const AuditConfig& config) {
    AxiomReport report;
    report.axiom = "stationarity";
    if (config.samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(config.seed);
    const ActSampler sampler = sampler_for(oracle, config);
    const auto& space = oracle.states();
    std::bernoulli_distribution zero_delay(0.1);
    for (std::size_t k = 0; k < config.samples; ++k) {
        const GridAct f = sampler.act(rng, space);
        const GridAct g = sampler.act(rng, space);
        const GridAct h = sampler.act(rng, space);
        const double t = zero_delay(rng) ? 0.0 : sampler.time(rng);
        Query now = ask(oracle, f, g);
        Query later = ask(oracle, splice_time(h, t, f), splice_time(h, t, g));
        ++report.checked;
        if (now.response != later.response) {
            report.violations.push_back(
                {"response changes after a common prefix of length " + std::to_string(t), {now, later}, {h}, t});
        }
    }
    finish(report);
    return report;
}

AxiomReport check_dominance(const PreferenceOracle& oracle, const AuditConfig& config) {
    AxiomReport report;
    report.axiom = "dominance";
    if (config.samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    const ActSampler sampler = sampler_for(oracle, config);
    const auto& space = oracle.states();
    const OutcomeOrder order(oracle);
    const GridAct best = GridAct::constant(space, order.best());
    const GridAct worst = GridAct::constant(space, order.worst());

    // A state is non-null when moving it alone between the extreme outcomes is noticed.
    std::vector<std::vector<Query>> null_probe(space.size());
    std::vector<bool> non_null(space.size(), false);
    std::set<State> all(space.labels().begin(), space.labels().end());
    for (std::size_t i = 0; i < space.size(); ++i) {
        std::set<State> others = all;
        others.erase(space[i]);
        Query up = ask(oracle, GridAct::bet(space, {space[i]}, order.best(), order.worst()), worst);
        Query down = ask(oracle, best, GridAct::bet(space, others, order.best(), order.worst()));
        non_null[i] = up.response == Preference::StrictlyPrefersFirst || down.response == Preference::StrictlyPrefersFirst;
        null_probe[i] = {up, down};
    }

    std::bernoulli_distribution improve_row(0.5);
    std::bernoulli_distribution identical(0.05);
    std::size_t attempts = 0;
    while (report.checked < config.samples && attempts < 20 * config.samples) {
        ++attempts;
        const GridAct g = sampler.act(rng, space);
        std::vector<StepProfile> rows = g.profiles();
        if (!identical(rng)) {
            for (auto& row : rows) {
                if (improve_row(rng)) row = perturb(rng, row, order, Preference::StrictlyPrefersFirst).first;
            }
        }
        const GridAct f(space, std::move(rows));

        std::vector<Query> log;
        bool premise = true;
        std::optional<std::size_t> strict_state;
        for (std::size_t i = 0; i < space.size(); ++i) {
            Query row = ask(oracle, GridAct::deterministic(space, f.profile(i)), GridAct::deterministic(space, g.profile(i)));
            if (row.response == Preference::StrictlyPrefersSecond) premise = false;
            if (row.response == Preference::StrictlyPrefersFirst && non_null[i] && !strict_state) strict_state = i;
            log.push_back(std::move(row));
        }
        if (!premise) continue;
        ++report.checked;
        Query verdict = ask(oracle, f, g);
        const bool weak_fail = verdict.response == Preference::StrictlyPrefersSecond;
        const bool strict_fail = strict_state && verdict.response != Preference::StrictlyPrefersFirst;
        if (weak_fail || strict_fail) {
            if (strict_state) {
                for (auto& q : null_probe[*strict_state]) log.push_back(q);
            }
            log.push_back(std::move(verdict));
            report.violations.push_back({weak_fail ? "row-wise dominating act is strictly worse"
                                                   : "strict improvement on non-null state '" +
                                                         space[*strict_state] + "' not strictly preferred",
                                         std::move(log), {}, 0.0});
        }
    }
    finish(report);
    return report;
}

AxiomReport check_t_monotonicity(const PreferenceOracle& oracle, const AuditConfig& config) {
    AxiomReport report;
    report.axiom = "t_monotonicity";
    if (config.samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(config.seed ^ 0xbf58476d1ce4e5b9ULL);
    const ActSampler sampler = sampler_for(oracle, config);
    const auto& space = oracle.states();
    const OutcomeOrder order(oracle);
    for (std::size_t k = 0; k < config.samples; ++k) {
        const StepProfile x = sampler.profile(rng);
        const auto [y, strict_set] = perturb(rng, x, order, Preference::StrictlyPrefersSecond);
        Query q = ask(oracle, GridAct::deterministic(space, x), GridAct::deterministic(space, y));
        ++report.checked;
        const bool weak_fail = q.response == Preference::StrictlyPrefersSecond;
        // Every non-empty interval has positive exponential mass.
        const bool strict_fail = !strict_set.empty() && q.response != Preference::StrictlyPrefersFirst;
        if (weak_fail || strict_fail) {
            report.violations.push_back({weak_fail ? "pointwise better stream is strictly worse"
                                                   : "strict improvement on a positive-length set not strictly preferred",
                                         {q}, {}, 0.0});
        }
    }
    finish(report);
    return report;
}

AxiomReport check_t_separability(const PreferenceOracle& oracle, const AuditConfig& config) {
    AxiomReport report;
    report.axiom = "t_separability";
    if (config.samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(config.seed ^ 0x94d049bb133111ebULL);
    const ActSampler sampler = sampler_for(oracle, config);
    const auto& space = oracle.states();
    const OutcomeOrder order(oracle);

    std::vector<std::pair<Outcome, Outcome>> strict_pairs;
    for (const auto& a : order.outcomes) {
        for (const auto& b : order.outcomes) {
            if (order.cmp(a, b) == Preference::StrictlyPrefersFirst) strict_pairs.emplace_back(a, b);
        }
    }
    if (strict_pairs.empty()) {
        report.verdict = Verdict::Inconclusive;
        report.note = "oracle ranks no outcome strictly above another";
        return report;
    }
    std::uniform_int_distribution<std::size_t> pick_pair(0, strict_pairs.size() - 1);
    std::uniform_int_distribution<int> side(0, 2);

    for (std::size_t k = 0; k < config.samples; ++k) {
        // Disjoint E, F: cells of a random partition assigned to E, F or neither.
        TimeSet e, f;
        while (e.empty() || f.empty()) {
            const StepProfile cells = sampler.profile(rng);
            std::vector<TimeInterval> in_e, in_f;
            for (const auto& piece : cells.pieces()) {
                const int where = side(rng);
                if (where == 0) in_e.push_back(piece.interval);
                if (where == 1) in_f.push_back(piece.interval);
            }
            e = TimeSet::from_intervals(std::move(in_e));
            f = TimeSet::from_intervals(std::move(in_f));
        }
        const auto [xs, x] = strict_pairs[pick_pair(rng)];
        const auto [ys, y] = strict_pairs[pick_pair(rng)];
        const StepProfile bg_x = sampler.profile(rng);
        const StepProfile bg_y = sampler.profile(rng);

        auto swap_pair = [&](const Outcome& on_e, const Outcome& on_f, const StepProfile& bg) {
            return GridAct::deterministic(
                space, splice_times(StepProfile::constant(on_e), e,
                                    splice_times(StepProfile::constant(on_f), f, bg)));
        };
        Query first = ask(oracle, swap_pair(xs, x, bg_x), swap_pair(x, xs, bg_x));
        Query second = ask(oracle, swap_pair(ys, y, bg_y), swap_pair(y, ys, bg_y));
        ++report.checked;
        const bool a = first.response != Preference::StrictlyPrefersSecond;
        const bool b = second.response != Preference::StrictlyPrefersSecond;
        if (a != b) {
            report.violations.push_back(
                {"comparison of E against F depends on the outcome pair or background", {first, second}, {}, 0.0});
        }
    }
    finish(report);
    return report;
}

AxiomReport check_t_measurability(const PreferenceOracle&) {
    AxiomReport report;
    report.axiom = "t_measurability";
    report.note = "vacuous: every subset of a finite outcome alphabet is measurable";
    return report;
}

AxiomReport check_monotone_continuity(const PreferenceOracle& oracle, const GridAct& f, const GridAct& g,
                                      const Outcome& x, std::size_t horizon_max) {
    AxiomReport report;
    report.axiom = "monotone_continuity";
    if (oracle.compare(f, g) != Preference::StrictlyPrefersFirst) {
        throw ValidationError("monotone continuity proxy needs a strict preference for f over g");
    }
    const GridAct constant_x = GridAct::constant(f.space(), x);
    for (std::size_t n = 1; n <= horizon_max; ++n) {
        const Event tail = Event::times_only(f.space(), TimeInterval(static_cast<double>(n), kInfinity));
        ++report.checked;
        const bool lifted = oracle.compare(splice_event(constant_x, tail, f), g) == Preference::StrictlyPrefersFirst;
        const bool lowered = oracle.compare(f, splice_event(constant_x, tail, g)) == Preference::StrictlyPrefersFirst;
        if (lifted && lowered) {
            report.tail_index = n;
            report.note = "strict preference survives changes on S x [" + std::to_string(n) + ", inf)";
            return report;
        }
    }
    report.verdict = Verdict::Inconclusive;
    report.note = "no tail index up to horizon_max keeps the strict preference";
    return report;
}

AxiomReport check_decomposition(const std::function<double(const GridAct&)>& value, const DSEUModel& claimed,
                                const StateSpace& space, const AuditConfig& config) {
    AxiomReport report;
    report.axiom = "decomposition";
    if (config.samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(config.seed ^ 0xd6e8feb86659fd93ULL);
    std::vector<Outcome> alphabet;
    for (const auto& [o, u] : claimed.util.values()) alphabet.push_back(o);
    const ActSampler sampler{alphabet, DiscountRate(config.generation_rate), config.max_pieces};
    std::bernoulli_distribution zero_delay(0.1);
    double worst = 0.0;
    std::optional<Violation> worst_witness;
    for (std::size_t k = 0; k < config.samples; ++k) {
        const GridAct h = sampler.act(rng, space);
        const GridAct f = sampler.act(rng, space);
        const double t = zero_delay(rng) ? 0.0 : sampler.time(rng);
        const double lhs = value(splice_time(h, t, f));
        const double rhs = act_prefix_value(claimed, h, t) + std::exp(-claimed.rate.value() * t) * value(f);
        const double r = lhs - rhs;
        ++report.checked;
        if (std::abs(r) > worst) {
            worst = std::abs(r);
            worst_witness = Violation{"decomposition residual at t = " + std::to_string(t), {}, {h, f}, r};
        }
    }
    report.worst_residual = worst;
    if (worst > kDecompositionTolerance && worst_witness) report.violations.push_back(*worst_witness);
    finish(report);
    return report;
}

AuditReport audit(const PreferenceOracle& oracle, const AuditConfig& config, const std::optional<DSEUModel>& claimed,
                  const std::function<double(const GridAct&)>& value) {
    AuditReport out;
    out.axioms.push_back(check_t_separability(oracle, config));
    out.axioms.push_back(check_t_monotonicity(oracle, config));
    out.axioms.push_back(check_t_measurability(oracle));

    // Monotone continuity on the first strictly ranked random pair.
    {
        std::mt19937_64 rng(config.seed ^ 0x2545f4914f6cdd1dULL);
        const ActSampler sampler = sampler_for(oracle, config);
        const OutcomeOrder order(oracle);
        std::optional<std::pair<GridAct, GridAct>> pair;
        for (std::size_t k = 0; k < config.samples && !pair; ++k) {
            GridAct f = sampler.act(rng, oracle.states());
            GridAct g = sampler.act(rng, oracle.states());
            const Preference p = oracle.compare(f, g);
            if (p == Preference::StrictlyPrefersFirst) pair.emplace(f, g);
            if (p == Preference::StrictlyPrefersSecond) pair.emplace(g, f);
        }
        if (pair) {
            out.axioms.push_back(check_monotone_continuity(oracle, pair->first, pair->second, order.worst(),
                                                           config.horizon_max));
        } else {
            AxiomReport none;
            none.axiom = "monotone_continuity";
            none.verdict = Verdict::Inconclusive;
            none.note = "no strictly ranked pair found among the samples";
            out.axioms.push_back(std::move(none));
        }
    }
    out.axioms.push_back(check_stationarity(oracle, config));
    out.axioms.push_back(check_dominance(oracle, config));
    if (claimed && value) out.axioms.push_back(check_decomposition(value, *claimed, oracle.states(), config));
    return out;
}

}  // namespace dseu
