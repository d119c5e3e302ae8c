#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace dseu {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Rate of the exponential discount measure, in 1/time. Always positive and finite.
class DiscountRate {
public:
    explicit DiscountRate(double lambda);

    double value() const { return lambda_; }

    friend bool operator==(const DiscountRate&, const DiscountRate&) = default;

private:
    double lambda_;
};

/// Half-open time interval [lo, hi) with 0 <= lo < hi; hi may be +infinity.
class TimeInterval {
public:
    TimeInterval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool bounded() const { return hi_ != kInfinity; }
    bool contains(double t) const { return t >= lo_ && t < hi_; }

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

private:
    double lo_;
    double hi_;
};

/// Finite union of half-open intervals, kept sorted with no two intervals
/// touching or overlapping. The default-constructed set is empty.
class TimeSet {
public:
    TimeSet() = default;
    TimeSet(TimeInterval interval);  // NOLINT(google-explicit-constructor)

    /// Builds the union of arbitrary (possibly overlapping, unsorted) intervals.
    static TimeSet from_intervals(std::vector<TimeInterval> intervals);

    /// [0, +inf).
    static TimeSet whole();

    const std::vector<TimeInterval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    bool contains(double t) const;

    friend bool operator==(const TimeSet&, const TimeSet&) = default;

private:
    std::vector<TimeInterval> intervals_;
};

/// 1 - exp(-lambda t). Throws DomainError for negative or non-finite t.
double cdf(DiscountRate rate, double t);

double mass(DiscountRate rate, const TimeInterval& interval);
double mass(DiscountRate rate, const TimeSet& set);

/// Inverse of cdf on [0, 1). Throws RangeError for p >= 1, DomainError for p < 0.
double quantile(DiscountRate rate, double p);

/// Translates every interval by +t (t >= 0).
TimeSet shift_set(const TimeSet& set, double t);

TimeSet unite(const TimeSet& a, const TimeSet& b);
TimeSet intersect(const TimeSet& a, const TimeSet& b);
TimeSet subtract(const TimeSet& a, const TimeSet& b);
/// Complement within [0, +inf).
TimeSet complement(const TimeSet& set);

/// Tolerance on the sum of split weights.
inline constexpr double kWeightTolerance = 1e-12;

/// Cuts `interval` into consecutive sub-intervals whose masses are
/// weights[i] * mass(interval). Zero-weight (or numerically empty) pieces are
/// dropped, so the result can be shorter than `weights`. The pieces tile the
/// interval exactly; the last one ends at interval.hi().
std::vector<TimeInterval> split_interval(DiscountRate rate, const TimeInterval& interval,
                                         std::span<const double> weights);

/// Same as split_interval but keeps one (possibly absent) entry per weight,
/// so callers can tell which weight a piece belongs to.
std::vector<std::optional<TimeInterval>> split_interval_indexed(
    DiscountRate rate, const TimeInterval& interval, std::span<const double> weights);

}  // namespace dseu
