#pragma once

#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

#include "cmcsync/histogram.hpp"
#include "cmcsync/rng.hpp"

namespace cmcsync::dist {

/// One-hop queuing-delay law: an atom at zero (the no-queuing probability)
/// plus a positive part. All time values are nanoseconds, masses double
/// precision. CCDF uses the strict-greater convention P(X > t); interval
/// queries are half-open [lo, hi).
class DelayLaw {
public:
    struct Exponential {
        double rate = 1.0; // per nanosecond, positive part only
    };
    struct Empirical {
        std::vector<double> samples; // sorted ascending, all > 0
    };
    struct Discrete {
        std::vector<double> support; // sorted ascending, all > 0
        std::vector<double> masses;  // conditional on the positive part
    };

    /// Degenerate law: all mass at zero.
    static DelayLaw degenerate_zero();

    /// Atom of zero_mass at 0, remaining mass Exponential(rate) on (0, inf).
    static DelayLaw exponential(double zero_mass, double rate_per_ns);

    /// Same, parameterized by the conditional (positive-part) mean.
    static DelayLaw exponential_positive_mean(double zero_mass, double mean_ns);

    /// Empirical law from raw samples; zero-valued samples become the atom.
    static DelayLaw empirical(std::vector<double> samples_ns);

    /// Finite-support law; mass at support value 0 folds into the atom.
    static DelayLaw discrete(std::vector<double> support_ns,
                             std::vector<double> masses);

    double zero_mass() const { return zero_mass_; }
    bool is_exponential() const;
    /// Rate of the exponential positive part; 0 for other laws.
    double exponential_rate() const;

    double mean() const;
    double variance() const;
    double second_moment() const;

    /// P(X > t). Throws for negative t.
    double ccdf(double t) const;
    /// P(X <= t).
    double cdf(double t) const;
    /// P(X < t).
    double cdf_strict(double t) const;
    /// P(X = t).
    double point_mass(double t) const;

    /// Smallest t with P(X <= t) >= p.
    double quantile(double p) const;
    /// Largest support value (+inf for exponential laws).
    double max_support() const;

    /// All point masses (value, mass) including the zero atom, ascending.
    /// Only defined for finite-support laws; throws for exponential ones.
    std::vector<std::pair<double, double>> atoms() const;

    /// Probabilities of the half-open level intervals of width delta_star:
    /// entry r in [0, levels) is P(r*d <= X < (r+1)*d); the last entry is
    /// P(X >= levels*d). Entries sum to 1.
    std::vector<double> bin_probabilities(double delta_star, int levels) const;

    struct PartialMoments {
        double mass = 0, m1 = 0, m2 = 0;
    };
    /// Mass and first two moments of (X - shift) restricted to lo <= X < hi.
    /// hi may be +inf. Exact for exponential and finite-support laws.
    PartialMoments window_moments(double lo, double hi, double shift) const;

    /// Bin the whole law on a fixed grid; mass beyond max_bins overflows.
    HistogramLaw to_histogram(double bin_width, std::size_t max_bins) const;

    /// Histogram of (X - shift) restricted to lo <= X < hi on the grid.
    /// For continuous laws the mass of each grid cell is evaluated
    /// analytically; finite-support laws shift point-by-point.
    HistogramLaw window_histogram(double lo, double hi, double shift,
                                  double bin_width, std::size_t max_bins) const;

    /// One draw; deterministic per stream state.
    double sample(RngStream& rng) const;

    static constexpr double kInf = std::numeric_limits<double>::infinity();

private:
    DelayLaw() = default;
    double zero_mass_ = 1.0;
    std::variant<std::monostate, Exponential, Empirical, Discrete> positive_;
};

/// One-sample Kolmogorov-Smirnov statistic: sup over sample points of the
/// distance between the empirical CDF and the reference CDF (both one-sided
/// gaps at each distinct point). Throws on fewer than 2 samples.
double ks_statistic(std::vector<double> samples, const DelayLaw& reference);

/// Grid KS between binned samples and a histogram law, evaluated at bin
/// boundaries. Used to compare propagation output against direct simulation.
double ks_statistic_binned(const std::vector<double>& samples,
                           const HistogramLaw& reference);

/// Read one-column nanosecond samples from plain text or CSV (optional
/// header `queuing_delay_ns`). Throws on unreadable input.
std::vector<double> read_delay_samples(const std::string& path);

} // namespace cmcsync::dist
