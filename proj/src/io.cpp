#include "dseu/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dseu/errors.hpp"

namespace dseu::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + ": missing field '" + key + "'");
    return *it;
}

std::string text(const Json& j, const std::string& what) {
    if (!j.is_string()) throw ValidationError(what + ": expected a string");
    return j.get<std::string>();
}

std::size_t count(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw ValidationError(what + ": expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

bool flag(const Json& j, const std::string& what) {
    if (!j.is_boolean()) throw ValidationError(what + ": expected true or false");
    return j.get<bool>();
}

const Json& array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + ": expected an array");
    return j;
}

const Json& object(const Json& j, const std::string& what) {
    if (!j.is_object()) throw ValidationError(what + ": expected an object");
    return j;
}

Json states_json(const std::set<State>& s) {
    Json out = Json::array();
    for (const auto& x : s) out.push_back(x);
    return out;
}

std::set<State> states_from_json(const Json& j, const std::string& what) {
    std::set<State> out;
    for (const auto& x : array(j, what)) out.insert(text(x, what));
    return out;
}

StateSpace space_from_json(const Json& j, const std::string& what) {
    std::vector<State> labels;
    for (const auto& x : array(j, what)) labels.push_back(text(x, what));
    return StateSpace(std::move(labels));
}

Json space_json(const StateSpace& space) {
    Json out = Json::array();
    for (const auto& s : space.labels()) out.push_back(s);
    return out;
}

Preference preference_from_string(const std::string& s) {
    for (Preference p : {Preference::StrictlyPrefersFirst, Preference::Indifferent, Preference::StrictlyPrefersSecond}) {
        if (to_string(p) == s) return p;
    }
    throw ValidationError("unknown preference response '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inconclusive}) {
        if (to_string(v) == s) return v;
    }
    throw ValidationError("unknown verdict '" + s + "'");
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void write_number(std::string& out, double x) {
    if (x == kInfinity) {
        out += "\"inf\"";
        return;
    }
    if (!std::isfinite(x)) throw ValidationError("cannot serialize a non-finite number other than +inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void write(std::string& out, const Json& j, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Json(it.key()).dump();
                out += ": ";
                write(out, it.value(), depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write(out, j[i], depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write(out, j[i], depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float:
            write_number(out, j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

}  // namespace

Json parse(const std::string& content, const std::string& source) {
    try {
        return Json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        // Byte offset -> line and column.
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, content.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (content[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw ValidationError("malformed JSON in " + source + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what);
    }
}

Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

std::string dump(const Json& j) {
    std::string out;
    write(out, j, 0);
    out += '\n';
    return out;
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << dump(j);
}

double number(const Json& j, const std::string& what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
    throw ValidationError(what + ": expected a number or \"inf\"");
}

Json number_json(double x) {
    if (x == kInfinity) return "inf";
    return x;
}

// ---------------------------------------------------------------- time sets

Json to_json(const TimeSet& set) {
    Json out = Json::array();
    for (const auto& iv : set.intervals()) out.push_back(Json::array({number_json(iv.lo()), number_json(iv.hi())}));
    return out;
}

TimeSet time_set_from_json(const Json& j) {
    std::vector<TimeInterval> ivs;
    for (const auto& e : array(j, "time set")) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("time set: each entry must be [lo, hi]");
        ivs.emplace_back(number(e[0], "interval start"), number(e[1], "interval end"));
    }
    return TimeSet::from_intervals(std::move(ivs));
}

// ---------------------------------------------------------------- acts

Json to_json(const StepProfile& p) {
    Json out = Json::array();
    for (const auto& piece : p.pieces()) {
        out.push_back(Json::array({number_json(piece.interval.lo()), number_json(piece.interval.hi()), piece.outcome}));
    }
    return out;
}

StepProfile profile_from_json(const Json& j) {
    std::vector<Piece> pieces;
    for (const auto& e : array(j, "profile")) {
        if (!e.is_array() || e.size() != 3) throw ValidationError("profile: each piece must be [lo, hi, outcome]");
        pieces.push_back(Piece{TimeInterval(number(e[0], "piece start"), number(e[1], "piece end")),
                               text(e[2], "piece outcome")});
    }
    return StepProfile(std::move(pieces));
}

Json to_json(const GridAct& f) {
    Json profiles = Json::object();
    for (std::size_t i = 0; i < f.space().size(); ++i) profiles[f.space()[i]] = to_json(f.profile(i));
    return Json{{"states", space_json(f.space())}, {"profiles", std::move(profiles)}};
}

GridAct act_from_json(const Json& j) {
    StateSpace space = space_from_json(field(j, "states", "act"), "act states");
    const Json& profiles = object(field(j, "profiles", "act"), "act profiles");
    for (auto it = profiles.begin(); it != profiles.end(); ++it) {
        if (!space.contains(it.key())) throw LookupError("act: profile for unknown state '" + it.key() + "'");
    }
    std::vector<StepProfile> rows;
    for (const auto& s : space.labels()) {
        auto it = profiles.find(s);
        if (it == profiles.end()) throw ValidationError("act: no profile for state '" + s + "'");
        rows.push_back(profile_from_json(*it));
    }
    return GridAct(std::move(space), std::move(rows));
}

// ---------------------------------------------------------------- models

Json to_json(const DSEUModel& model, const StateSpace& space) {
    Json util = Json::object();
    for (const auto& [o, u] : model.util.values()) util[o] = u;
    Json mu = Json::object();
    for (const auto& s : space.labels()) mu[s] = model.beliefs(s);
    return Json{{"lambda", model.rate.value()}, {"utility", std::move(util)}, {"mu", std::move(mu)}};
}

namespace {

UtilityModel utility_from_json(const Json& j) {
    std::map<Outcome, double> values;
    const Json& u = object(j, "utility");
    for (auto it = u.begin(); it != u.end(); ++it) values[it.key()] = number(it.value(), "utility of " + it.key());
    return UtilityModel(std::move(values));
}

Beliefs beliefs_from_json(const Json& j) {
    std::map<State, double> probs;
    const Json& mu = object(j, "mu");
    for (auto it = mu.begin(); it != mu.end(); ++it) probs[it.key()] = number(it.value(), "mu of " + it.key());
    return Beliefs(std::move(probs));
}

StateSpace keys_space(const Json& j, const std::string& what) {
    std::vector<State> labels;
    for (auto it = object(j, what).begin(); it != j.end(); ++it) labels.push_back(it.key());
    return StateSpace(std::move(labels));
}

}  // namespace

DSEUModel model_from_json(const Json& j) {
    return DSEUModel{DiscountRate(number(field(j, "lambda", "model"), "lambda")),
                     utility_from_json(field(j, "utility", "model")), beliefs_from_json(field(j, "mu", "model"))};
}

StateSpace model_states(const Json& j) { return keys_space(field(j, "mu", "model"), "mu"); }

// ---------------------------------------------------------------- oracles

OraclePtr OracleSpec::build() const {
    if (kind == "seu") return seu_oracle(model, space, band);
    return choquet_oracle(model.rate, model.util, *capacity, band);
}

OracleSpec oracle_spec_from_json(const Json& j) {
    const std::string kind = text(field(j, "kind", "oracle"), "oracle kind");
    const DiscountRate rate(number(field(j, "lambda", "oracle"), "lambda"));
    UtilityModel util = utility_from_json(field(j, "utility", "oracle"));
    double band = 0.0;
    if (j.contains("band")) band = number(j["band"], "band");
    if (!(band >= 0.0) || !std::isfinite(band)) throw DomainError("band must be finite and non-negative");

    if (kind == "seu") {
        const Json& mu = field(j, "mu", "oracle");
        StateSpace space = keys_space(mu, "mu");
        return OracleSpec{kind, DSEUModel{rate, std::move(util), beliefs_from_json(mu)}, std::move(space),
                          std::nullopt, band};
    }
    if (kind != "choquet") throw ValidationError("oracle kind must be \"seu\" or \"choquet\", got '" + kind + "'");

    const Json& cap = object(field(j, "capacity", "oracle"), "capacity");
    if (cap.contains("epsilon")) {
        const Json& mu = field(cap, "mu", "capacity");
        StateSpace space = keys_space(mu, "capacity mu");
        Beliefs beliefs = beliefs_from_json(mu);
        const double eps = number(cap["epsilon"], "epsilon");
        Capacity nu = Capacity::contamination(space, beliefs, eps);
        return OracleSpec{kind, DSEUModel{rate, std::move(util), std::move(beliefs)}, std::move(space),
                          std::move(nu), band};
    }
    StateSpace space = space_from_json(field(cap, "states", "capacity"), "capacity states");
    if (space.size() > Capacity::kMaxStates) throw ValidationError("capacity supports at most 20 states");
    const std::size_t n = std::size_t{1} << space.size();
    std::vector<double> values(n, std::nan(""));
    values[0] = 0.0;
    const Json& given = object(field(cap, "values", "capacity"), "capacity values");
    for (auto it = given.begin(); it != given.end(); ++it) {
        Capacity::Mask m = 0;
        if (!it.key().empty()) {
            for (const auto& s : split(it.key())) m |= Capacity::Mask{1} << space.index_of(s);
        }
        values[m] = number(it.value(), "capacity of {" + it.key() + "}");
    }
    for (std::size_t m = 0; m < n; ++m) {
        if (std::isnan(values[m])) throw ValidationError("capacity: missing value for a subset");
    }
    Capacity nu(space, std::move(values));
    return OracleSpec{kind, DSEUModel{rate, std::move(util), Beliefs::uniform(space)}, std::move(space),
                      std::move(nu), band};
}

Json to_json(const OracleSpec& spec) {
    Json util = Json::object();
    for (const auto& [o, u] : spec.model.util.values()) util[o] = u;
    Json out{{"kind", spec.kind}, {"lambda", spec.model.rate.value()}, {"utility", std::move(util)}};
    if (spec.kind == "seu") {
        out["mu"] = to_json(spec.model, spec.space)["mu"];
    } else {
        Json values = Json::object();
        const auto& nu = *spec.capacity;
        for (Capacity::Mask m = 1; m <= nu.full(); ++m) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < spec.space.size(); ++i) {
                if (m & (Capacity::Mask{1} << i)) names.push_back(spec.space[i]);
            }
            values[join(names)] = nu(m);
        }
        out["capacity"] = Json{{"states", space_json(spec.space)}, {"values", std::move(values)}};
    }
    out["band"] = spec.band;
    return out;
}

// ---------------------------------------------------------------- lotteries

Json to_json(const Lottery& l) {
    Json out = Json::object();
    for (const auto& [o, p] : l.probs()) out[o] = p;
    return out;
}

Lottery lottery_from_json(const Json& j) {
    std::map<Outcome, double> probs;
    const Json& o = object(j, "lottery");
    for (auto it = o.begin(); it != o.end(); ++it) probs[it.key()] = number(it.value(), "probability of " + it.key());
    return Lottery(std::move(probs));
}

Json to_json(const LotteryAct& a) {
    Json lot = Json::object();
    for (std::size_t i = 0; i < a.space().size(); ++i) lot[a.space()[i]] = to_json(a.at(i));
    return Json{{"states", space_json(a.space())}, {"lotteries", std::move(lot)}};
}

LotteryAct lottery_act_from_json(const Json& j) {
    StateSpace space = space_from_json(field(j, "states", "lottery act"), "lottery act states");
    const Json& lot = object(field(j, "lotteries", "lottery act"), "lotteries");
    std::vector<Lottery> rows;
    for (const auto& s : space.labels()) {
        auto it = lot.find(s);
        if (it == lot.end()) throw ValidationError("lottery act: no lottery for state '" + s + "'");
        rows.push_back(lottery_from_json(*it));
    }
    return LotteryAct(std::move(space), std::move(rows));
}

// ---------------------------------------------------------------- equivalents

Json to_json(const TimeEquivalent& te) {
    return Json{{"t", number_json(te.t)},
                {"whole_horizon", te.whole_horizon},
                {"bracket_width", te.bracket_width},
                {"queries", te.queries}};
}

TimeEquivalent time_equivalent_from_json(const Json& j) {
    TimeEquivalent te;
    te.t = number(field(j, "t", "time equivalent"), "t");
    te.whole_horizon = flag(field(j, "whole_horizon", "time equivalent"), "whole_horizon");
    te.bracket_width = number(field(j, "bracket_width", "time equivalent"), "bracket_width");
    te.queries = count(field(j, "queries", "time equivalent"), "queries");
    return te;
}

// ---------------------------------------------------------------- elicitation

Json to_json(const ElicitationReport& r) {
    Json mu = Json::array();
    for (const auto& [event, v] : r.mu_hat) mu.push_back(Json{{"event", states_json(event)}, {"mu_hat", v}});
    Json res = Json::array();
    for (const auto& a : r.additivity_residuals) {
        res.push_back(Json{{"first", states_json(a.first)}, {"second", states_json(a.second)}, {"residual", a.residual}});
    }
    return Json{{"lambda_hat", r.lambda_hat.value()},
                {"query_count", r.query_count},
                {"mu_hat", std::move(mu)},
                {"additivity_residuals", std::move(res)},
                {"max_abs_residual", r.max_abs_residual},
                {"additivity_tolerance", r.additivity_tolerance},
                {"additive", r.additive}};
}

ElicitationReport elicitation_report_from_json(const Json& j) {
    ElicitationReport r{DiscountRate(number(field(j, "lambda_hat", "report"), "lambda_hat")), {}, {}};
    r.query_count = count(field(j, "query_count", "report"), "query_count");
    for (const auto& e : array(field(j, "mu_hat", "report"), "mu_hat")) {
        r.mu_hat[states_from_json(field(e, "event", "mu_hat entry"), "event")] =
            number(field(e, "mu_hat", "mu_hat entry"), "mu_hat");
    }
    for (const auto& e : array(field(j, "additivity_residuals", "report"), "additivity_residuals")) {
        r.additivity_residuals.push_back({states_from_json(field(e, "first", "residual"), "first"),
                                          states_from_json(field(e, "second", "residual"), "second"),
                                          number(field(e, "residual", "residual"), "residual")});
    }
    r.max_abs_residual = number(field(j, "max_abs_residual", "report"), "max_abs_residual");
    r.additivity_tolerance = number(field(j, "additivity_tolerance", "report"), "additivity_tolerance");
    r.additive = flag(field(j, "additive", "report"), "additive");
    return r;
}

// ---------------------------------------------------------------- audit

Json to_json(const AuditReport& r) {
    Json axioms = Json::array();
    for (const auto& a : r.axioms) {
        Json violations = Json::array();
        for (const auto& v : a.violations) {
            Json queries = Json::array();
            for (const auto& q : v.queries) {
                queries.push_back(
                    Json{{"first", to_json(q.first)}, {"second", to_json(q.second)}, {"response", to_string(q.response)}});
            }
            Json witnesses = Json::array();
            for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
            violations.push_back(Json{{"description", v.description},
                                      {"residual", v.residual},
                                      {"queries", std::move(queries)},
                                      {"witnesses", std::move(witnesses)}});
        }
        Json entry{{"axiom", a.axiom}, {"verdict", to_string(a.verdict)}, {"checked", a.checked}, {"note", a.note}};
        if (a.tail_index) entry["tail_index"] = *a.tail_index;
        if (a.worst_residual) entry["worst_residual"] = *a.worst_residual;
        entry["violations"] = std::move(violations);
        axioms.push_back(std::move(entry));
    }
    return Json{{"all_pass", r.all_pass()}, {"axioms", std::move(axioms)}};
}

AuditReport audit_report_from_json(const Json& j) {
    AuditReport r;
    for (const auto& e : array(field(j, "axioms", "audit report"), "axioms")) {
        AxiomReport a;
        a.axiom = text(field(e, "axiom", "axiom entry"), "axiom");
        a.verdict = verdict_from_string(text(field(e, "verdict", "axiom entry"), "verdict"));
        a.checked = count(field(e, "checked", "axiom entry"), "checked");
        a.note = text(field(e, "note", "axiom entry"), "note");
        if (e.contains("tail_index")) a.tail_index = count(e["tail_index"], "tail_index");
        if (e.contains("worst_residual")) a.worst_residual = number(e["worst_residual"], "worst_residual");
        for (const auto& v : array(field(e, "violations", "axiom entry"), "violations")) {
            Violation out;
            out.description = text(field(v, "description", "violation"), "description");
            out.residual = number(field(v, "residual", "violation"), "residual");
            for (const auto& q : array(field(v, "queries", "violation"), "queries")) {
                out.queries.push_back(Query{act_from_json(field(q, "first", "query")),
                                            act_from_json(field(q, "second", "query")),
                                            preference_from_string(text(field(q, "response", "query"), "response"))});
            }
            for (const auto& w : array(field(v, "witnesses", "violation"), "witnesses")) {
                out.witnesses.push_back(act_from_json(w));
            }
            a.violations.push_back(std::move(out));
        }
        r.axioms.push_back(std::move(a));
    }
    return r;
}

// ---------------------------------------------------------------- brackets

Json to_json(const ProfileBracket& b) {
    Json bins = Json::array();
    for (const auto& a : b.bins) bins.push_back(to_json(a));
    Json selections = Json::array();
    for (const auto& s : b.selections) selections.push_back(to_json(s));
    return Json{{"kind", "profile"},
                {"n", b.bins.size()},
                {"bottom", b.bottom},
                {"top", b.top},
                {"value_lower", b.value_lower},
                {"value_target", b.value_target},
                {"value_upper", b.value_upper},
                {"gap", b.gap},
                {"lower", to_json(b.lower)},
                {"upper", to_json(b.upper)},
                {"bins", std::move(bins)},
                {"selections", std::move(selections)}};
}

ProfileBracket profile_bracket_from_json(const Json& j) {
    ProfileBracket b{profile_from_json(field(j, "lower", "bracket")),
                     profile_from_json(field(j, "upper", "bracket")),
                     number(field(j, "value_lower", "bracket"), "value_lower"),
                     number(field(j, "value_target", "bracket"), "value_target"),
                     number(field(j, "value_upper", "bracket"), "value_upper"),
                     number(field(j, "gap", "bracket"), "gap"),
                     {},
                     {},
                     text(field(j, "bottom", "bracket"), "bottom"),
                     text(field(j, "top", "bracket"), "top")};
    for (const auto& a : array(field(j, "bins", "bracket"), "bins")) b.bins.push_back(time_set_from_json(a));
    for (const auto& s : array(field(j, "selections", "bracket"), "selections")) {
        b.selections.push_back(time_set_from_json(s));
    }
    return b;
}

Json to_json(const ActBracket& b) {
    Json bins = Json::array();
    for (const auto& e : b.bins) bins.push_back(states_json(e));
    return Json{{"kind", "act"},
                {"n", b.bins.size()},
                {"bottom", b.bottom},
                {"top", b.top},
                {"value_lower", b.value_lower},
                {"value_target", b.value_target},
                {"value_upper", b.value_upper},
                {"gap", b.gap},
                {"lower", to_json(b.lower)},
                {"upper", to_json(b.upper)},
                {"bins", std::move(bins)}};
}

ActBracket act_bracket_from_json(const Json& j) {
    ActBracket b{act_from_json(field(j, "lower", "bracket")),
                 act_from_json(field(j, "upper", "bracket")),
                 number(field(j, "value_lower", "bracket"), "value_lower"),
                 number(field(j, "value_target", "bracket"), "value_target"),
                 number(field(j, "value_upper", "bracket"), "value_upper"),
                 number(field(j, "gap", "bracket"), "gap"),
                 {},
                 text(field(j, "bottom", "bracket"), "bottom"),
                 text(field(j, "top", "bracket"), "top")};
    for (const auto& e : array(field(j, "bins", "bracket"), "bins")) b.bins.push_back(states_from_json(e, "bin"));
    return b;
}

// ---------------------------------------------------------------- indifference chain trace

Json to_json(const ChainTrace& t) {
    Json acts = Json::array();
    for (const auto& a : t.acts) acts.push_back(Json{{"name", a.name}, {"value", a.value}, {"act", to_json(a.act)}});
    Json checks = Json::array();
    for (const auto& c : t.checks) {
        checks.push_back(Json{{"first", c.first}, {"second", c.second}, {"reason", c.reason}, {"gap", c.gap}});
    }
    Json out{{"lambda", t.lambda},
             {"mu_e", t.mu_e},
             {"mu_f", t.mu_f},
             {"t_half", t.t_half},
             {"t_e", to_json(t.t_e)},
             {"t_f", to_json(t.t_f)},
             {"t_ef", to_json(t.t_ef)},
             {"t_f_prime", number_json(t.t_f_prime)},
             {"mu_hat_e", t.mu_hat_e},
             {"mu_hat_f", t.mu_hat_f},
             {"mu_hat_ef", t.mu_hat_ef},
             {"acts", std::move(acts)},
             {"checks", std::move(checks)},
             {"identity_lhs", t.identity_lhs},
             {"identity_rhs", t.identity_rhs},
             {"identity_residual", t.identity_residual},
             {"additivity_residual", t.additivity_residual},
             {"complementary_case", t.complementary_case}};
    if (t.complementary_case) out["complementary_mu_hat"] = t.complementary_mu_hat;
    out["max_gap"] = t.max_gap();
    return out;
}

ChainTrace chain_trace_from_json(const Json& j) {
    auto num = [&](const char* key) { return number(field(j, key, "trace"), key); };
    ChainTrace t;
    t.lambda = num("lambda");
    t.mu_e = num("mu_e");
    t.mu_f = num("mu_f");
    t.t_half = num("t_half");
    t.t_e = time_equivalent_from_json(field(j, "t_e", "trace"));
    t.t_f = time_equivalent_from_json(field(j, "t_f", "trace"));
    t.t_ef = time_equivalent_from_json(field(j, "t_ef", "trace"));
    t.t_f_prime = num("t_f_prime");
    t.mu_hat_e = num("mu_hat_e");
    t.mu_hat_f = num("mu_hat_f");
    t.mu_hat_ef = num("mu_hat_ef");
    for (const auto& a : array(field(j, "acts", "trace"), "acts")) {
        t.acts.push_back(NamedAct{text(field(a, "name", "act entry"), "name"), act_from_json(field(a, "act", "act entry")),
                                  number(field(a, "value", "act entry"), "value")});
    }
    for (const auto& c : array(field(j, "checks", "trace"), "checks")) {
        t.checks.push_back(IndifferenceCheck{text(field(c, "first", "check"), "first"),
                                             text(field(c, "second", "check"), "second"),
                                             text(field(c, "reason", "check"), "reason"),
                                             number(field(c, "gap", "check"), "gap")});
    }
    t.identity_lhs = num("identity_lhs");
    t.identity_rhs = num("identity_rhs");
    t.identity_residual = num("identity_residual");
    t.additivity_residual = num("additivity_residual");
    t.complementary_case = flag(field(j, "complementary_case", "trace"), "complementary_case");
    if (t.complementary_case) t.complementary_mu_hat = num("complementary_mu_hat");
    return t;
}

// ---------------------------------------------------------------- command results

Json to_json(const EvalResult& r) {
    return Json{{"value", r.value},
                {"value_dual", r.value_dual},
                {"fubini_gap", r.value - r.value_dual},
                {"aa_value", r.aa_value}};
}

EvalResult eval_result_from_json(const Json& j) {
    return EvalResult{number(field(j, "value", "eval result"), "value"),
                      number(field(j, "value_dual", "eval result"), "value_dual"),
                      number(field(j, "aa_value", "eval result"), "aa_value")};
}

Json to_json(const AAResult& r) {
    Json out{{"reduced", to_json(r.reduced)}};
    if (r.witness) {
        out["witness"] = Json{{"t", r.witness->t},
                              {"gamma", to_json(r.witness->gamma)},
                              {"lhs", to_json(r.witness->lhs)},
                              {"rhs", to_json(r.witness->rhs)},
                              {"gap", r.witness->gap}};
    }
    return out;
}

AAResult aa_result_from_json(const Json& j) {
    AAResult r{lottery_act_from_json(field(j, "reduced", "aa result")), std::nullopt};
    if (j.contains("witness")) {
        const Json& w = j["witness"];
        r.witness = AAResult::Witness{number(field(w, "t", "witness"), "t"),
                                      lottery_act_from_json(field(w, "gamma", "witness")),
                                      lottery_act_from_json(field(w, "lhs", "witness")),
                                      lottery_act_from_json(field(w, "rhs", "witness")),
                                      number(field(w, "gap", "witness"), "gap")};
    }
    return r;
}

}  // namespace dseu::io
