#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "dseu/aa_reduction.hpp"
#include "dseu/axiom_audit.hpp"
#include "dseu/bracketing.hpp"
#include "dseu/elicitation.hpp"
#include "dseu/equivalents.hpp"
#include "dseu/oracles.hpp"

namespace dseu::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ValidationError naming `source`, line and column.
Json parse(const std::string& text, const std::string& source);
Json read_file(const std::filesystem::path& path);

/// Two-space indented output, numbers with 17 significant digits, +inf as "inf".
std::string dump(const Json& j);
void write_file(const std::filesystem::path& path, const Json& j);

/// A number, or the string "inf".
double number(const Json& j, const std::string& what);
Json number_json(double x);

Json to_json(const TimeSet& set);
TimeSet time_set_from_json(const Json& j);

Json to_json(const StepProfile& p);
StepProfile profile_from_json(const Json& j);

Json to_json(const GridAct& f);
GridAct act_from_json(const Json& j);

Json to_json(const DSEUModel& model, const StateSpace& space);
DSEUModel model_from_json(const Json& j);
/// States listed in the model's "mu" object, in document order.
StateSpace model_states(const Json& j);

/// Description of a synthetic oracle.
struct OracleSpec {
    std::string kind;  // "seu" or "choquet"
    DSEUModel model;   // for "choquet", beliefs are the additive part (or uniform)
    StateSpace space;
    std::optional<Capacity> capacity;
    double band = 0.0;

    OraclePtr build() const;
};

OracleSpec oracle_spec_from_json(const Json& j);
Json to_json(const OracleSpec& spec);

Json to_json(const Lottery& l);
Lottery lottery_from_json(const Json& j);
Json to_json(const LotteryAct& a);
LotteryAct lottery_act_from_json(const Json& j);

Json to_json(const TimeEquivalent& te);
TimeEquivalent time_equivalent_from_json(const Json& j);

Json to_json(const ElicitationReport& r);
ElicitationReport elicitation_report_from_json(const Json& j);

Json to_json(const AuditReport& r);
AuditReport audit_report_from_json(const Json& j);

Json to_json(const ProfileBracket& b);
ProfileBracket profile_bracket_from_json(const Json& j);
Json to_json(const ActBracket& b);
ActBracket act_bracket_from_json(const Json& j);

Json to_json(const ChainTrace& t);
ChainTrace chain_trace_from_json(const Json& j);

/// Output of `eval`.
struct EvalResult {
    double value;
    double value_dual;
    double aa_value;
};
Json to_json(const EvalResult& r);
EvalResult eval_result_from_json(const Json& j);

/// Output of `aa`.
struct AAResult {
    LotteryAct reduced;
    struct Witness {
        double t;
        LotteryAct gamma;
        LotteryAct lhs;
        LotteryAct rhs;
        double gap;
    };
    std::optional<Witness> witness;
};
Json to_json(const AAResult& r);
AAResult aa_result_from_json(const Json& j);

}  // namespace dseu::io
