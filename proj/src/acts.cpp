#include "dseu/acts.hpp"

#include <algorithm>
#include <cmath>

#include "dseu/errors.hpp"

namespace dseu {

StateSpace::StateSpace(std::vector<State> states) : states_(std::move(states)) {
    if (states_.empty()) throw ValidationError("state space must not be empty");
    std::set<State> seen(states_.begin(), states_.end());
    if (seen.size() != states_.size()) throw ValidationError("state labels must be unique");
}

bool StateSpace::contains(const State& s) const {
    return std::find(states_.begin(), states_.end(), s) != states_.end();
}

std::size_t StateSpace::index_of(const State& s) const {
    auto it = std::find(states_.begin(), states_.end(), s);
    if (it == states_.end()) throw LookupError("unknown state '" + s + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

StepProfile::StepProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ValidationError("step profile needs at least one piece");
    if (pieces_.front().interval.lo() != 0.0) {
        throw ValidationError("step profile must start at time 0");
    }
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i - 1].interval.hi() != pieces_[i].interval.lo()) {
            throw ValidationError("step profile pieces leave a gap or overlap at piece " +
                                  std::to_string(i));
        }
    }
    if (pieces_.back().interval.bounded()) {
        throw ValidationError("step profile must extend to +inf");
    }
}

StepProfile StepProfile::constant(const Outcome& x) {
    return StepProfile({Piece{TimeInterval(0.0, kInfinity), x}});
}

StepProfile StepProfile::from_starts(std::vector<std::pair<double, Outcome>> starts) {
    std::vector<Piece> pieces;
    pieces.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const double hi = i + 1 < starts.size() ? starts[i + 1].first : kInfinity;
        pieces.push_back(Piece{TimeInterval(starts[i].first, hi), std::move(starts[i].second)});
    }
    return StepProfile(std::move(pieces));
}

StepProfile StepProfile::prefix(const Outcome& x, double t, const Outcome& y) {
    if (!(t >= 0.0)) throw DomainError("prefix length must be non-negative");
    if (t == 0.0) return constant(y);
    if (t == kInfinity) return constant(x);
    return normalize(from_starts({{0.0, x}, {t, y}}));
}

const Outcome& StepProfile::at(double t) const {
    if (!(t >= 0.0)) throw DomainError("acts are defined on [0, +inf)");
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                               [](double v, const Piece& p) { return v < p.interval.lo(); });
    return std::prev(it)->outcome;
}

std::set<Outcome> StepProfile::outcomes() const {
    std::set<Outcome> out;
    for (const auto& p : pieces_) out.insert(p.outcome);
    return out;
}

TimeSet StepProfile::level_set(const Outcome& x) const {
    std::vector<TimeInterval> ivs;
    for (const auto& p : pieces_) {
        if (p.outcome == x) ivs.push_back(p.interval);
    }
    return TimeSet::from_intervals(std::move(ivs));
}

bool StepProfile::canonical() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i - 1].outcome == pieces_[i].outcome) return false;
    }
    return true;
}

StepProfile normalize(const StepProfile& p) {
    std::vector<Piece> merged;
    for (const auto& piece : p.pieces()) {
        if (!merged.empty() && merged.back().outcome == piece.outcome) {
            merged.back().interval = TimeInterval(merged.back().interval.lo(), piece.interval.hi());
        } else {
            merged.push_back(piece);
        }
    }
    return StepProfile(std::move(merged));
}

GridAct::GridAct(StateSpace space, std::vector<StepProfile> profiles)
    : space_(std::move(space)), profiles_(std::move(profiles)) {
    if (profiles_.size() != space_.size()) {
        throw ValidationError("grid act needs exactly one profile per state");
    }
}

GridAct GridAct::deterministic(const StateSpace& space, const StepProfile& profile) {
    return GridAct(space, std::vector<StepProfile>(space.size(), profile));
}

GridAct GridAct::constant(const StateSpace& space, const Outcome& x) {
    return deterministic(space, StepProfile::constant(x));
}

GridAct GridAct::stochastic(const StateSpace& space, const std::vector<Outcome>& by_state) {
    if (by_state.size() != space.size()) {
        throw ValidationError("stochastic act needs one outcome per state");
    }
    std::vector<StepProfile> rows;
    rows.reserve(by_state.size());
    for (const auto& x : by_state) rows.push_back(StepProfile::constant(x));
    return GridAct(space, std::move(rows));
}

GridAct GridAct::bet(const StateSpace& space, const std::set<State>& event, const Outcome& x,
                     const Outcome& y) {
    for (const auto& s : event) space.index_of(s);
    std::vector<Outcome> row;
    for (const auto& s : space.labels()) row.push_back(event.count(s) ? x : y);
    return stochastic(space, row);
}

const Outcome& GridAct::at(const State& s, double t) const {
    return profiles_[space_.index_of(s)].at(t);
}

bool GridAct::is_deterministic() const {
    return std::all_of(profiles_.begin(), profiles_.end(),
                       [&](const StepProfile& p) { return normalize(p) == normalize(profiles_[0]); });
}

bool GridAct::is_stochastic() const {
    return std::all_of(profiles_.begin(), profiles_.end(),
                       [](const StepProfile& p) { return normalize(p).pieces().size() == 1; });
}

std::set<Outcome> GridAct::outcomes() const {
    std::set<Outcome> out;
    for (const auto& p : profiles_) {
        auto row = p.outcomes();
        out.insert(row.begin(), row.end());
    }
    return out;
}

Event Event::rectangle(std::set<State> states, TimeSet times) {
    return Event{std::move(states), std::move(times)};
}

Event Event::states_only(std::set<State> states) {
    return Event{std::move(states), TimeSet::whole()};
}

Event Event::times_only(const StateSpace& space, TimeSet times) {
    return Event{std::set<State>(space.labels().begin(), space.labels().end()), std::move(times)};
}

Event Event::everything(const StateSpace& space) { return times_only(space, TimeSet::whole()); }

StepProfile splice_time(const StepProfile& h, double t, const StepProfile& f) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("splice time must be finite and non-negative");
    if (t == 0.0) return normalize(f);
    std::vector<Piece> pieces;
    for (const auto& p : h.pieces()) {
        if (p.interval.lo() >= t) break;
        pieces.push_back(Piece{TimeInterval(p.interval.lo(), std::min(p.interval.hi(), t)), p.outcome});
    }
    for (const auto& p : f.pieces()) {
        const double lo = p.interval.lo() + t;
        const double hi = p.interval.hi() + t;
        // A piece of f can vanish when t swamps its width in floating point.
        if (hi > lo) pieces.push_back(Piece{TimeInterval(lo, hi), p.outcome});
    }
    return normalize(StepProfile(std::move(pieces)));
}

GridAct splice_time(const GridAct& h, double t, const GridAct& f) {
    if (!(h.space() == f.space())) throw ValidationError("splice_time: acts live on different state spaces");
    std::vector<StepProfile> rows;
    rows.reserve(h.space().size());
    for (std::size_t i = 0; i < h.space().size(); ++i) {
        rows.push_back(splice_time(h.profile(i), t, f.profile(i)));
    }
    return GridAct(h.space(), std::move(rows));
}

std::vector<double> common_breakpoints(const std::vector<StepProfile>& profiles) {
    std::vector<double> cuts{0.0};
    for (const auto& p : profiles) {
        for (const auto& piece : p.pieces()) cuts.push_back(piece.interval.lo());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

StepProfile splice_times(const StepProfile& p, const TimeSet& times, const StepProfile& q) {
    std::vector<double> cuts = common_breakpoints({p, q});
    for (const auto& iv : times.intervals()) {
        cuts.push_back(iv.lo());
        if (iv.bounded()) cuts.push_back(iv.hi());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> pieces;
    pieces.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = i + 1 < cuts.size() ? cuts[i + 1] : kInfinity;
        // Cells never straddle a boundary of `times`, so the left end decides membership.
        const Outcome& x = times.contains(lo) ? p.at(lo) : q.at(lo);
        pieces.push_back(Piece{TimeInterval(lo, hi), x});
    }
    return normalize(StepProfile(std::move(pieces)));
}

GridAct splice_event(const GridAct& f, const Event& e, const GridAct& g) {
    if (!(f.space() == g.space())) throw ValidationError("splice_event: acts live on different state spaces");
    for (const auto& s : e.states) f.space().index_of(s);
    std::vector<StepProfile> rows;
    rows.reserve(f.space().size());
    for (std::size_t i = 0; i < f.space().size(); ++i) {
        if (e.states.count(f.space()[i])) {
            rows.push_back(splice_times(f.profile(i), e.times, g.profile(i)));
        } else {
            rows.push_back(normalize(g.profile(i)));
        }
    }
    return GridAct(f.space(), std::move(rows));
}

const StepProfile& restrict(const GridAct& f, const State& s) {
    return f.profile(f.space().index_of(s));
}

}  // namespace dseu
