#include "dseu/exp_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dseu/errors.hpp"

namespace dseu {

DiscountRate::DiscountRate(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("discount rate must be positive and finite, got " + std::to_string(lambda));
    }
}

TimeInterval::TimeInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || lo < 0.0) {
        throw DomainError("interval start must be finite and non-negative");
    }
    if (std::isnan(hi) || !(hi > lo)) {
        throw DomainError("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          ") is empty or malformed");
    }
}

TimeSet::TimeSet(TimeInterval interval) : intervals_{interval} {}

TimeSet TimeSet::from_intervals(std::vector<TimeInterval> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const TimeInterval& a, const TimeInterval& b) { return a.lo() < b.lo(); });
    TimeSet out;
    for (const auto& iv : intervals) {
        if (!out.intervals_.empty() && iv.lo() <= out.intervals_.back().hi()) {
            auto& last = out.intervals_.back();
            last = TimeInterval(last.lo(), std::max(last.hi(), iv.hi()));
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

TimeSet TimeSet::whole() { return TimeSet(TimeInterval(0.0, kInfinity)); }

bool TimeSet::contains(double t) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](double v, const TimeInterval& iv) { return v < iv.lo(); });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(t);
}

double cdf(DiscountRate rate, double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("cdf requires a finite non-negative time");
    }
    return -std::expm1(-rate.value() * t);
}

double mass(DiscountRate rate, const TimeInterval& interval) {
    const double head = std::exp(-rate.value() * interval.lo());
    if (!interval.bounded()) return head;
    return head * -std::expm1(-rate.value() * (interval.hi() - interval.lo()));
}

double mass(DiscountRate rate, const TimeSet& set) {
    double total = 0.0;
    for (const auto& iv : set.intervals()) total += mass(rate, iv);
    return total;
}

double quantile(DiscountRate rate, double p) {
    if (std::isnan(p) || p < 0.0) throw DomainError("quantile requires p >= 0");
    if (p >= 1.0) throw RangeError("quantile requires p < 1: the exponential cdf never reaches 1");
    return -std::log1p(-p) / rate.value();
}

TimeSet shift_set(const TimeSet& set, double t) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("shift must be finite and non-negative");
    std::vector<TimeInterval> moved;
    moved.reserve(set.intervals().size());
    for (const auto& iv : set.intervals()) moved.emplace_back(iv.lo() + t, iv.hi() + t);
    return TimeSet::from_intervals(std::move(moved));
}

TimeSet unite(const TimeSet& a, const TimeSet& b) {
    std::vector<TimeInterval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return TimeSet::from_intervals(std::move(all));
}

TimeSet intersect(const TimeSet& a, const TimeSet& b) {
    std::vector<TimeInterval> out;
    const auto& xs = a.intervals();
    const auto& ys = b.intervals();
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        const double lo = std::max(xs[i].lo(), ys[j].lo());
        const double hi = std::min(xs[i].hi(), ys[j].hi());
        if (lo < hi) out.emplace_back(lo, hi);
        if (xs[i].hi() < ys[j].hi()) ++i; else ++j;
    }
    return TimeSet::from_intervals(std::move(out));
}

TimeSet complement(const TimeSet& set) {
    std::vector<TimeInterval> out;
    double cursor = 0.0;
    for (const auto& iv : set.intervals()) {
        if (iv.lo() > cursor) out.emplace_back(cursor, iv.lo());
        cursor = iv.hi();
    }
    if (cursor != kInfinity) out.emplace_back(cursor, kInfinity);
    return TimeSet::from_intervals(std::move(out));
}

TimeSet subtract(const TimeSet& a, const TimeSet& b) { return intersect(a, complement(b)); }

std::vector<std::optional<TimeInterval>> split_interval_indexed(
    DiscountRate rate, const TimeInterval& interval, std::span<const double> weights) {
    if (weights.empty()) throw ValidationError("split_interval needs at least one weight");
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("split weights must be non-negative");
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > kWeightTolerance) {
        throw ValidationError("split weights must sum to 1, got " + std::to_string(sum));
    }

    // Boundaries use memorylessness: the mass of [lo, b) inside [lo, hi) is
    // e^{-lambda lo} (1 - e^{-lambda (b - lo)}), so b depends only on the
    // cumulative fraction of F(hi - lo).
    const double span_cdf = interval.bounded()
                                ? -std::expm1(-rate.value() * (interval.hi() - interval.lo()))
                                : 1.0;
    std::vector<std::optional<TimeInterval>> pieces;
    pieces.reserve(weights.size());
    double cumulative = 0.0;
    double left = interval.lo();
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] > 0.0) last_positive = k;
    }
    for (std::size_t k = 0; k < weights.size(); ++k) {
        cumulative += weights[k];
        double right;
        if (k >= last_positive) {
            right = interval.hi();
        } else {
            const double frac = cumulative * span_cdf;
            right = frac >= 1.0 ? interval.hi()
                                : interval.lo() - std::log1p(-frac) / rate.value();
            right = std::min(right, interval.hi());
        }
        if (weights[k] > 0.0 && right > left) {
            pieces.emplace_back(TimeInterval(left, right));
            left = right;
        } else {
            pieces.emplace_back(std::nullopt);
        }
    }
    return pieces;
}

std::vector<TimeInterval> split_interval(DiscountRate rate, const TimeInterval& interval,
                                         std::span<const double> weights) {
    std::vector<TimeInterval> out;
    for (auto& piece : split_interval_indexed(rate, interval, weights)) {
        if (piece) out.push_back(*piece);
    }
    return out;
}

}  // namespace dseu
