#pragma once

#include <cstdint>
#include <vector>

#include "cmcsync/delay_law.hpp"
#include "cmcsync/histogram.hpp"

namespace cmcsync::propagate {

/// Ordered per-hop delay laws for one message direction plus the marking
/// parameters acting on the path.
struct PathModel {
    std::vector<dist::DelayLaw> hops;
    double delta_star = 0;    // ns
    std::int64_t levels = 1;  // R, thresholds per hop
    std::int64_t capacity = 1; // N, maximum counter value
};

struct Options {
    double bin_width = 0;          // 0: delta_star / 64
    std::size_t max_bins = 1u << 20;
    double tail_epsilon = 1e-10;   // per-hop tail mass allowed past the grid
};

/// Joint state after the last hop: one residual-error sub-distribution per
/// counter value, masses summing to 1, plus the marginals derived from it.
struct PathResult {
    std::vector<dist::HistogramLaw> by_counter;
    dist::HistogramLaw error_law;      // marginal over counter values
    std::vector<double> counter_dist;  // size capacity + 1
    double delta_star_used = 0;        // after snapping to the grid
    // Exact marginal moments carried alongside the binned law (the binned
    // law's own moment estimates are midpoint approximations).
    double mean = 0;
    double variance = 0;
};

/// Forward propagation of (residual error, counter) over the path: at each
/// hop a counter at n admits M = min(R, N - n) increments; the hop law is
/// split into the M+1 level parts, each shifted by its compensation r*d
/// (the top part, X >= M*d, shifts by M*d), and accumulated by convolution.
/// Counter value N is absorbing. Throws on an empty path or d <= 0.
PathResult propagate_path(const PathModel& path, const Options& opts = {});

/// Mass and raw moments of one sub-distribution.
struct Moments {
    double mass = 0, m1 = 0, m2 = 0;
    double mean() const { return mass > 0 ? m1 / mass : 0; }
    double variance() const {
        if (mass <= 0) return 0;
        const double mu = m1 / mass;
        return m2 / mass - mu * mu;
    }
};

struct MomentResult {
    std::vector<Moments> by_counter;
    Moments total;                     // mass 1
    std::vector<double> counter_dist;
    double mean() const { return total.m1; }
    double variance() const { return total.m2 - total.m1 * total.m1; }
};

/// Same recursion carrying only (mass, E, E^2) per counter state. Exact for
/// exponential and finite-support hop laws; used where only the corrected
/// mean and variance are needed (threshold search, sweeps).
MomentResult propagate_moments(const PathModel& path);

/// Uncorrected end-to-end moments (independent per-hop sums).
Moments raw_path_moments(const std::vector<dist::DelayLaw>& hops);

/// Expected squared offset error from the two direction laws:
/// (Var(fwd) + Var(rev) + (mean(fwd) - mean(rev))^2) / 4.
double mse(const dist::HistogramLaw& fwd, const dist::HistogramLaw& rev);
double mse(const Moments& fwd, const Moments& rev);
double mse_raw(const std::vector<dist::DelayLaw>& fwd,
               const std::vector<dist::DelayLaw>& rev);

/// 1 - sqrt(mse_comp / mse_raw). Throws when mse_raw is zero.
double expected_improvement(double mse_comp, double mse_raw);

/// Per-link decomposition of the end-to-end expected squared error. Hop i
/// of the forward path is paired with hop s+1-i of the reverse path (the
/// same physical link); the coherence term collects the cross products of
/// the paired mean differences.
struct MseDecomposition {
    std::vector<double> per_pair;   // per-link squared-error contributions
    double coherence = 0;           // (1/2) sum_{i<k} Delta_i Delta_k
    double total() const;
};
MseDecomposition multihop_mse_decomposition(
    const std::vector<dist::HistogramLaw>& fwd_hops,
    const std::vector<dist::HistogramLaw>& rev_hops);

} // namespace cmcsync::propagate
