#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dseu/exp_measure.hpp"

namespace dseu {

using Outcome = std::string;
using State = std::string;

/// Ordered, non-empty list of distinct state labels.
class StateSpace {
public:
    explicit StateSpace(std::vector<State> states);

    const std::vector<State>& labels() const { return states_; }
    std::size_t size() const { return states_.size(); }
    const State& operator[](std::size_t i) const { return states_[i]; }

    bool contains(const State& s) const;
    /// Throws LookupError for unknown labels.
    std::size_t index_of(const State& s) const;

    friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
    std::vector<State> states_;
};

struct Piece {
    TimeInterval interval;
    Outcome outcome;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// A deterministic step act: outcomes over consecutive intervals tiling [0, +inf).
class StepProfile {
public:
    /// Validates the tiling; equal neighbours are kept as given (see normalize).
    explicit StepProfile(std::vector<Piece> pieces);

    static StepProfile constant(const Outcome& x);
    /// (start, outcome) pairs; starts must begin at 0 and increase strictly.
    static StepProfile from_starts(std::vector<std::pair<double, Outcome>> starts);
    /// x on [0, t), y on [t, +inf). t == 0 gives constant y.
    static StepProfile prefix(const Outcome& x, double t, const Outcome& y);

    const std::vector<Piece>& pieces() const { return pieces_; }
    const Outcome& at(double t) const;
    std::set<Outcome> outcomes() const;
    /// The set of times carrying outcome x.
    TimeSet level_set(const Outcome& x) const;
    bool canonical() const;

    friend bool operator==(const StepProfile&, const StepProfile&) = default;

private:
    std::vector<Piece> pieces_;
};

/// Merges adjacent pieces carrying the same outcome.
StepProfile normalize(const StepProfile& p);

/// An act in F0: one step profile per state.
class GridAct {
public:
    GridAct(StateSpace space, std::vector<StepProfile> profiles);

    static GridAct deterministic(const StateSpace& space, const StepProfile& profile);
    static GridAct constant(const StateSpace& space, const Outcome& x);
    /// One outcome per state (in state order), held forever.
    static GridAct stochastic(const StateSpace& space, const std::vector<Outcome>& by_state);
    /// x on the listed states, y elsewhere, at every time.
    static GridAct bet(const StateSpace& space, const std::set<State>& event, const Outcome& x,
                       const Outcome& y);

    const StateSpace& space() const { return space_; }
    const std::vector<StepProfile>& profiles() const { return profiles_; }
    const StepProfile& profile(std::size_t i) const { return profiles_[i]; }
    const Outcome& at(const State& s, double t) const;

    bool is_deterministic() const;
    bool is_stochastic() const;
    std::set<Outcome> outcomes() const;

    friend bool operator==(const GridAct&, const GridAct&) = default;

private:
    StateSpace space_;
    std::vector<StepProfile> profiles_;
};

/// Rectangle event E_S x E_T.
struct Event {
    std::set<State> states;
    TimeSet times;

    static Event rectangle(std::set<State> states, TimeSet times);
    static Event states_only(std::set<State> states);
    static Event times_only(const StateSpace& space, TimeSet times);
    static Event everything(const StateSpace& space);
};

/// h before t, f shifted to start at t.
GridAct splice_time(const GridAct& h, double t, const GridAct& f);
StepProfile splice_time(const StepProfile& h, double t, const StepProfile& f);

/// f on E, g off E.
GridAct splice_event(const GridAct& f, const Event& e, const GridAct& g);
/// p on the time set, q elsewhere.
StepProfile splice_times(const StepProfile& p, const TimeSet& times, const StepProfile& q);

const StepProfile& restrict(const GridAct& f, const State& s);

/// Sorted union of every piece start across the given profiles (always contains 0).
std::vector<double> common_breakpoints(const std::vector<StepProfile>& profiles);

}  // namespace dseu
