#include <gtest/gtest.h>

#include "dseu/errors.hpp"
#include "dseu/io.hpp"
#include "support.hpp"

using namespace dseu;
using namespace dseu::testing;

namespace {

template <class T, class Read>
void expect_round_trip(const T& value, Read read) {
    const std::string once = io::dump(io::to_json(value));
    const std::string twice = io::dump(io::to_json(read(io::parse(once, "memory"))));
    EXPECT_EQ(once, twice);
}

}  // namespace

TEST(Io, SeventeenDigitsAndInfinity) {
    io::Json j{{"x", 0.1}, {"y", io::number_json(kInfinity)}};
    EXPECT_EQ(io::dump(j), "{\n  \"x\": 0.10000000000000001,\n  \"y\": \"inf\"\n}\n");
    EXPECT_EQ(io::number(io::Json("inf"), "y"), kInfinity);
    EXPECT_THROW(io::number(io::Json("-inf"), "y"), ValidationError);
}

TEST(Io, MalformedJsonReportsLine) {
    try {
        io::parse("{\n  \"a\": 1,\n  \"b\": ]\n}", "bad.json");
        FAIL();
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("bad.json"), std::string::npos);
        EXPECT_NE(what.find("line 3"), std::string::npos);
    }
}

TEST(Io, ActsAndModelsRoundTrip) {
    std::mt19937_64 rng(91);
    const auto outs = alphabet(4);
    for (int k = 0; k < 50; ++k) {
        const StateSpace space = states(1 + k % 5);
        const DSEUModel model = random_model(rng, space, outs);
        const GridAct f = ActSampler{outs, model.rate}.act(rng, space);
        EXPECT_EQ(io::act_from_json(io::parse(io::dump(io::to_json(f)), "m")), f);
        const DSEUModel back = io::model_from_json(io::parse(io::dump(io::to_json(model, space)), "m"));
        EXPECT_EQ(back.rate, model.rate);
        EXPECT_EQ(back.util.values(), model.util.values());
        EXPECT_EQ(back.beliefs.probs(), model.beliefs.probs());
    }
}

TEST(Io, SchemaErrors) {
    EXPECT_THROW(io::act_from_json(io::parse(R"({"states": ["E"], "profiles": {}})", "m")), ValidationError);
    EXPECT_THROW(io::act_from_json(io::parse(R"({"states": ["E"], "profiles": {"E": [[0, 1, "a"]]}})", "m")),
                 ValidationError);
    EXPECT_THROW(io::oracle_spec_from_json(io::parse(R"({"kind": "other", "lambda": 1, "utility": {}})", "m")),
                 ValidationError);
    EXPECT_THROW(io::model_from_json(io::parse(R"({"lambda": 1})", "m")), ValidationError);
}

TEST(Io, OracleSpecs) {
    const auto seu = io::oracle_spec_from_json(io::parse(
        R"({"kind": "seu", "lambda": 1, "utility": {"a": 0, "b": 1}, "mu": {"F": 0.4, "E": 0.6}})", "m"));
    EXPECT_EQ(seu.space.labels(), (std::vector<State>{"F", "E"}));
    const auto cap = io::oracle_spec_from_json(io::parse(
        R"({"kind": "choquet", "lambda": 1, "utility": {"a": 0, "b": 1},
            "capacity": {"states": ["R", "B"], "values": {"R": 0.3, "B": 0.4, "R,B": 1}}})",
        "m"));
    EXPECT_NEAR(cap.capacity->of({"B"}), 0.4, 0);
    const std::string once = io::dump(io::to_json(cap));
    EXPECT_EQ(io::dump(io::to_json(io::oracle_spec_from_json(io::parse(once, "m")))), once);
    EXPECT_THROW(io::oracle_spec_from_json(io::parse(
                     R"({"kind": "choquet", "lambda": 1, "utility": {"a": 0, "b": 1},
                         "capacity": {"states": ["R", "B"], "values": {"R": 0.3, "R,B": 1}}})",
                     "m")),
                 ValidationError);
}

TEST(Io, ReportsRoundTrip) {
    std::mt19937_64 rng(92);
    const auto outs = alphabet(3);
    const StateSpace space = states(3);
    const DSEUModel model = random_model(rng, space, outs);
    const auto oracle = seu_oracle(model, space);

    expect_round_trip(elicit(*oracle, model.util.best(), model.util.worst()), io::elicitation_report_from_json);
    expect_round_trip(chain_demo(DiscountRate(0.8), 0.5, 0.5), io::chain_trace_from_json);
    expect_round_trip(chain_demo(DiscountRate(0.8), 0.2, 0.3), io::chain_trace_from_json);

    const GridAct f = ActSampler{outs, model.rate}.act(rng, space);
    expect_round_trip(bracket_profile(model, f.profile(0), 8), io::profile_bracket_from_json);
    expect_round_trip(bracket_act(model, f, 8), io::act_bracket_from_json);
    expect_round_trip(reduce_act(model.rate, f), io::lottery_act_from_json);
    expect_round_trip(time_equivalent_act(model, f, model.util.best(), model.util.worst()),
                      io::time_equivalent_from_json);
    expect_round_trip(io::EvalResult{1.0 / 3.0, 0.25, 0.125}, io::eval_result_from_json);

    // An audit with violations, so queries and acts are serialized too.
    const auto deviant = rank_dependent_time_oracle(model, space, 2.0);
    AuditConfig config;
    config.samples = 100;
    const AuditReport report = audit(*deviant, config);
    expect_round_trip(report, io::audit_report_from_json);
    const AuditReport back = io::audit_report_from_json(io::parse(io::dump(io::to_json(report)), "m"));
    for (const auto& a : back.axioms) {
        for (const auto& v : a.violations) EXPECT_TRUE(replays(*deviant, v));
    }
}

TEST(Io, CommittedExamplesParse) {
    const std::filesystem::path dir = DSEU_EXAMPLES;
    auto read = [&](const char* name) { return io::read_file(dir / name); };
    EXPECT_NO_THROW(io::model_from_json(read("model.json")));
    EXPECT_NO_THROW(io::act_from_json(read("act.json")));
    EXPECT_NO_THROW(io::act_from_json(read("profile_act.json")));
    EXPECT_NO_THROW(io::oracle_spec_from_json(read("oracle_seu.json")));
    EXPECT_NO_THROW(io::oracle_spec_from_json(read("oracle_choquet.json")));
    EXPECT_NO_THROW(io::oracle_spec_from_json(read("oracle_capacity.json")));
    EXPECT_NO_THROW(io::lottery_act_from_json(read("gamma.json")));
    EXPECT_NO_THROW(io::eval_result_from_json(read("eval_result.json")));
    EXPECT_NO_THROW(io::time_equivalent_from_json(read("equiv_result.json")["closed_form"]));
    EXPECT_NO_THROW(io::elicitation_report_from_json(read("elicitation_report.json")));
    EXPECT_NO_THROW(io::audit_report_from_json(read("audit_report.json")));
    EXPECT_NO_THROW(io::profile_bracket_from_json(read("bracket_profile.json")));
    EXPECT_NO_THROW(io::act_bracket_from_json(read("bracket_act.json")));
    EXPECT_NO_THROW(io::aa_result_from_json(read("aa_result.json")));
    EXPECT_NO_THROW(io::chain_trace_from_json(read("chain_trace.json")));
}
