#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dseu/errors.hpp"
#include "dseu/exp_measure.hpp"
#include "support.hpp"

using namespace dseu;

namespace {

// Trapezoid rule on lambda e^{-lambda t} over [lo, hi].
double density_integral(double lambda, double lo, double hi, int n = 20000) {
    const double h = (hi - lo) / n;
    double sum = 0.5 * (lambda * std::exp(-lambda * lo) + lambda * std::exp(-lambda * hi));
    for (int k = 1; k < n; ++k) sum += lambda * std::exp(-lambda * (lo + k * h));
    return sum * h;
}

}  // namespace

TEST(DiscountRate, RejectsNonPositive) {
    EXPECT_THROW((void)DiscountRate(0.0), DomainError);
    EXPECT_THROW((void)DiscountRate(-1.0), DomainError);
    EXPECT_THROW((void)DiscountRate(kInfinity), DomainError);
    EXPECT_THROW((void)DiscountRate(std::nan("")), DomainError);
}

TEST(TimeInterval, Validation) {
    EXPECT_THROW((void)TimeInterval(1.0, 1.0), DomainError);
    EXPECT_THROW((void)TimeInterval(-0.5, 1.0), DomainError);
    EXPECT_NO_THROW((void)TimeInterval(0.0, kInfinity));
    EXPECT_TRUE(TimeInterval(0, 1).contains(0.0));
    EXPECT_FALSE(TimeInterval(0, 1).contains(1.0));
}

TEST(ExpMeasure, MassMatchesQuadrature) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int k = 0; k < 50; ++k) {
        const double lambda = 0.1 + u(rng);
        double lo = u(rng), hi = u(rng);
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo < 1e-3) continue;
        EXPECT_NEAR(mass(DiscountRate(lambda), TimeInterval(lo, hi)), density_integral(lambda, lo, hi), 1e-7);
    }
}

TEST(ExpMeasure, KnownValues) {
    const DiscountRate r(std::log(2.0));
    EXPECT_NEAR(cdf(r, 1.0), 0.5, 1e-15);
    EXPECT_NEAR(mass(r, TimeInterval(1.0, kInfinity)), 0.5, 1e-15);
    EXPECT_EQ(mass(r, TimeInterval(0.0, kInfinity)), 1.0);
    EXPECT_NEAR(quantile(r, 0.75), 2.0, 1e-14);
    EXPECT_EQ(quantile(r, 0.0), 0.0);
}

TEST(ExpMeasure, QuantileErrors) {
    const DiscountRate r(1.0);
    EXPECT_THROW(quantile(r, 1.0), RangeError);
    EXPECT_THROW(quantile(r, 1.5), RangeError);
    EXPECT_THROW(quantile(r, -0.1), DomainError);
    EXPECT_THROW(cdf(r, -1.0), DomainError);
}

TEST(ExpMeasure, ShiftIdentity) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> shift(0.0, 5.0);
    for (int k = 0; k < 300; ++k) {
        const ActSampler s{{"a"}, DiscountRate(0.2 + shift(rng))};
        const TimeSet a = s.time_set(rng);
        const double t = shift(rng);
        EXPECT_NEAR(mass(s.rate, shift_set(a, t)), std::exp(-s.rate.value() * t) * mass(s.rate, a), 1e-12);
    }
}

TEST(TimeSet, OperationsAgreeWithMembership) {
    std::mt19937_64 rng(5);
    const ActSampler s{{"a"}, DiscountRate(0.7)};
    for (int k = 0; k < 200; ++k) {
        const TimeSet a = s.time_set(rng), b = s.time_set(rng);
        const TimeSet u = unite(a, b), i = intersect(a, b), d = subtract(a, b), c = complement(a);
        for (double t = 0.0; t < 12.0; t += 0.0137) {
            EXPECT_EQ(u.contains(t), a.contains(t) || b.contains(t));
            EXPECT_EQ(i.contains(t), a.contains(t) && b.contains(t));
            EXPECT_EQ(d.contains(t), a.contains(t) && !b.contains(t));
            EXPECT_EQ(c.contains(t), !a.contains(t));
        }
        EXPECT_NEAR(mass(s.rate, u) + mass(s.rate, i), mass(s.rate, a) + mass(s.rate, b), 1e-12);
        EXPECT_NEAR(mass(s.rate, a) + mass(s.rate, c), 1.0, 1e-12);
    }
}

TEST(TimeSet, Canonical) {
    const TimeSet s = TimeSet::from_intervals({TimeInterval(2, 3), TimeInterval(0, 1), TimeInterval(1, 2.5)});
    ASSERT_EQ(s.intervals().size(), 1u);
    EXPECT_EQ(s.intervals()[0], TimeInterval(0, 3));
    EXPECT_TRUE(complement(TimeSet::whole()).empty());
}

TEST(SplitInterval, MassesFollowWeights) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const DiscountRate r(0.1 + 3 * u(rng));
        const double lo = 2 * u(rng);
        const TimeInterval iv(lo, k % 3 == 0 ? kInfinity : lo + 0.01 + 3 * u(rng));
        std::vector<double> w(1 + k % 5);
        double total = 0.0;
        for (auto& x : w) total += (x = (u(rng) < 0.2 ? 0.0 : u(rng)));
        if (total == 0.0) w[0] = total = 1.0;
        for (auto& x : w) x /= total;
        double rest = 1.0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) rest -= w[i];
        w.back() = std::max(rest, 0.0);
        const auto pieces = split_interval_indexed(r, iv, w);
        ASSERT_EQ(pieces.size(), w.size());
        double left = iv.lo();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!pieces[i]) {
                EXPECT_LT(w[i] * mass(r, iv), 1e-12);
                continue;
            }
            EXPECT_EQ(pieces[i]->lo(), left);
            left = pieces[i]->hi();
            EXPECT_NEAR(mass(r, *pieces[i]), w[i] * mass(r, iv), 1e-12);
        }
        EXPECT_EQ(left, iv.hi());
    }
}

TEST(SplitInterval, RejectsBadWeights) {
    const DiscountRate r(1.0);
    const std::vector<double> bad{0.5, 0.6};
    const std::vector<double> negative{1.5, -0.5};
    EXPECT_THROW(split_interval(r, TimeInterval(0, 1), bad), ValidationError);
    EXPECT_THROW(split_interval(r, TimeInterval(0, 1), negative), ValidationError);
}
