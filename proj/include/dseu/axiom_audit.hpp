#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dseu/acts.hpp"
#include "dseu/evaluate.hpp"
#include "dseu/oracles.hpp"

namespace dseu {

/// One logged comparison.
struct Query {
    GridAct first;
    GridAct second;
    Preference response;
};

/// A counterexample: the queries whose responses are jointly inconsistent
/// with the axiom. For value-functional checks `queries` is empty and the
/// witness acts plus residual are recorded instead.
struct Violation {
    std::string description;
    std::vector<Query> queries;
    std::vector<GridAct> witnesses;
    double residual = 0.0;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

struct AxiomReport {
    std::string axiom;
    std::size_t checked = 0;
    std::vector<Violation> violations;
    Verdict verdict = Verdict::Pass;
    std::string note;
    /// Monotone continuity: first tail index n with a surviving strict preference.
    std::optional<std::size_t> tail_index;
    /// Decomposition: worst residual seen.
    std::optional<double> worst_residual;
};

struct AuditReport {
    std::vector<AxiomReport> axioms;
    bool all_pass() const;
    const AxiomReport& operator[](const std::string& axiom) const;
};

/// Re-asks every logged query and checks the responses are unchanged.
bool replays(const PreferenceOracle& oracle, const Violation& v);

struct AuditConfig {
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    std::size_t horizon_max = 64;
    /// Rate used to place random breakpoints (not a claim about the oracle).
    double generation_rate = 1.0;
    std::size_t max_pieces = 6;
};

/// Response to (f, g) must equal the response to (h_t f, h_t g).
AxiomReport check_stationarity(const PreferenceOracle& oracle, const AuditConfig& config);

/// If every row of f is weakly preferred to the matching row of g (rows are
/// compared as deterministic acts by the same oracle), then f must be weakly
/// preferred; strictly on a non-null state forces strict preference.
AxiomReport check_dominance(const PreferenceOracle& oracle, const AuditConfig& config);

/// Pointwise-dominating deterministic pairs; strict on a set of positive
/// length forces strict preference.
AxiomReport check_t_monotonicity(const PreferenceOracle& oracle, const AuditConfig& config);

/// The direction of preference between putting the better outcome on E or on
/// F (disjoint) must not depend on the outcome pair or the background stream.
AxiomReport check_t_separability(const PreferenceOracle& oracle, const AuditConfig& config);

/// Vacuous for a finite outcome alphabet.
AxiomReport check_t_measurability(const PreferenceOracle& oracle);

/// Finite proxy over E_n = S x [n, inf): PASS when some n <= horizon_max keeps
/// both x_{E_n} f > g and f > x_{E_n} g; INCONCLUSIVE otherwise.
/// Throws ValidationError unless the oracle strictly prefers f to g.
AxiomReport check_monotone_continuity(const PreferenceOracle& oracle, const GridAct& f, const GridAct& g,
                                      const Outcome& x, std::size_t horizon_max);

/// value(h_t f) - [prefix value of h under the claimed model + e^{-lambda t} value(f)];
/// FAIL when any residual exceeds 1e-10, listing the worst witness.
AxiomReport check_decomposition(const std::function<double(const GridAct&)>& value, const DSEUModel& claimed,
                                const StateSpace& space, const AuditConfig& config);

inline constexpr double kDecompositionTolerance = 1e-10;

/// Runs every check. Monotone continuity uses the first strictly ranked
/// random pair and the oracle's worst outcome; the decomposition check runs
/// only when a claimed model and value functional are supplied.
AuditReport audit(const PreferenceOracle& oracle, const AuditConfig& config,
                  const std::optional<DSEUModel>& claimed = std::nullopt,
                  const std::function<double(const GridAct&)>& value = {});

}  // namespace dseu
