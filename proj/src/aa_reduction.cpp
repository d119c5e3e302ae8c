#include "dseu/aa_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dseu/errors.hpp"

namespace dseu {

Lottery::Lottery(std::map<Outcome, double> probs) : probs_(std::move(probs)) {
    double total = 0.0;
    for (const auto& [x, p] : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("lottery probability of '" + x + "' is negative");
        total += p;
    }
    if (std::abs(total - 1.0) > kLotteryTolerance) throw ValidationError("lottery probabilities must sum to 1");
}

Lottery Lottery::degenerate(const Outcome& x) { return Lottery({{x, 1.0}}); }

double Lottery::operator()(const Outcome& x) const {
    auto it = probs_.find(x);
    return it == probs_.end() ? 0.0 : it->second;
}

LotteryAct::LotteryAct(StateSpace space, std::vector<Lottery> lotteries)
    : space_(std::move(space)), lotteries_(std::move(lotteries)) {
    if (lotteries_.size() != space_.size()) throw ValidationError("lottery act needs one lottery per state");
}

Lottery reduce_profile(DiscountRate rate, const StepProfile& p) {
    std::map<Outcome, double> probs;
    for (const auto& piece : p.pieces()) probs[piece.outcome] += mass(rate, piece.interval);
    return Lottery(std::move(probs));
}

LotteryAct reduce_act(DiscountRate rate, const GridAct& f) {
    std::vector<Lottery> rows;
    rows.reserve(f.space().size());
    for (const auto& p : f.profiles()) rows.push_back(reduce_profile(rate, p));
    return LotteryAct(f.space(), std::move(rows));
}

Lottery reduce_window(DiscountRate rate, const StepProfile& p, const TimeInterval& window) {
    const double total = mass(rate, window);
    if (!(total > 0.0)) throw DomainError("window has no mass");
    std::map<Outcome, double> probs;
    for (const auto& piece : p.pieces()) {
        const double lo = std::max(piece.interval.lo(), window.lo());
        const double hi = std::min(piece.interval.hi(), window.hi());
        if (lo < hi) probs[piece.outcome] += mass(rate, TimeInterval(lo, hi)) / total;
    }
    return Lottery(std::move(probs));
}

LotteryAct mix(const LotteryAct& a, const LotteryAct& b, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight must lie in [0, 1]");
    if (!(a.space() == b.space())) throw ValidationError("mix: lottery acts live on different state spaces");
    std::vector<Lottery> rows;
    rows.reserve(a.space().size());
    for (std::size_t i = 0; i < a.space().size(); ++i) {
        std::map<Outcome, double> probs;
        for (const auto& [x, p] : a.at(i).probs()) probs[x] += w * p;
        for (const auto& [x, p] : b.at(i).probs()) probs[x] += (1.0 - w) * p;
        rows.emplace_back(std::move(probs));
    }
    return LotteryAct(a.space(), std::move(rows));
}

std::vector<Piece> realize_lottery(DiscountRate rate, const TimeInterval& interval, const Lottery& n) {
    std::vector<double> weights;
    std::vector<Outcome> labels;
    for (const auto& [x, p] : n.probs()) {
        labels.push_back(x);
        weights.push_back(p);
    }
    // Lottery sums are only checked to 1e-12; renormalize before splitting.
    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;
    const auto cells = split_interval_indexed(rate, interval, weights);
    std::vector<Piece> pieces;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k]) pieces.push_back(Piece{*cells[k], labels[k]});
    }
    return pieces;
}

GridAct realize_lottery_act(DiscountRate rate, double t, const LotteryAct& g) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("realization window [0, t) needs finite t > 0");
    std::set<Outcome> support;
    for (const auto& lot : g.lotteries()) {
        for (const auto& [x, p] : lot.probs()) support.insert(x);
    }
    const Outcome filler = *support.begin();
    std::vector<StepProfile> rows;
    rows.reserve(g.space().size());
    for (const auto& lot : g.lotteries()) {
        auto pieces = realize_lottery(rate, TimeInterval(0.0, t), lot);
        pieces.push_back(Piece{TimeInterval(t, kInfinity), filler});
        rows.push_back(normalize(StepProfile(std::move(pieces))));
    }
    return GridAct(g.space(), std::move(rows));
}

std::pair<LotteryAct, LotteryAct> independence_witness(DiscountRate rate, double t, const LotteryAct& g,
                                                       const GridAct& f) {
    if (!(g.space() == f.space())) throw ValidationError("independence witness: state spaces differ");
    // A zero-length prefix leaves f untouched.
    LotteryAct lhs = t == 0.0 ? reduce_act(rate, f) : reduce_act(rate, splice_time(realize_lottery_act(rate, t, g), t, f));
    LotteryAct rhs = mix(reduce_act(rate, f), g, std::exp(-rate.value() * t));
    return {std::move(lhs), std::move(rhs)};
}

double max_entry_gap(const LotteryAct& a, const LotteryAct& b) {
    if (!(a.space() == b.space())) throw ValidationError("lottery acts live on different state spaces");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.space().size(); ++i) {
        std::set<Outcome> keys;
        for (const auto& [x, p] : a.at(i).probs()) keys.insert(x);
        for (const auto& [x, p] : b.at(i).probs()) keys.insert(x);
        for (const auto& x : keys) worst = std::max(worst, std::abs(a.at(i)(x) - b.at(i)(x)));
    }
    return worst;
}

double aa_value(const DSEUModel& model, const GridAct& f) {
    if (!model.beliefs.covers(f.space())) throw LookupError("beliefs do not cover the act's states");
    const LotteryAct reduced = reduce_act(model.rate, f);
    double total = 0.0;
    for (std::size_t i = 0; i < f.space().size(); ++i) {
        double expected = 0.0;
        for (const auto& [x, p] : reduced.at(i).probs()) expected += p * model.util(x);
        total += model.beliefs(f.space()[i]) * expected;
    }
    return total;
}

}  // namespace dseu
