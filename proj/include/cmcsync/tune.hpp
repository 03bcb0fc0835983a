#pragma once

#include <cstdint>
#include <vector>

#include "cmcsync/delay_law.hpp"
#include "cmcsync/propagate.hpp"

namespace cmcsync::tune {

/// M/M/1 abstraction of one egress queue: exponential packet sizes of mean
/// mean_packet_bytes served at line_rate, exponential interarrivals of mean
/// mean_interarrival_us.
struct MM1Model {
    double mean_packet_bytes = 0;
    double mean_interarrival_us = 0;
    double line_rate = 1e9;       // bits per second
    double utilization = 0;       // rho
    double mean_wait_ns = 0;      // lambda*
    double rate_per_ns = 0;       // beta = service_rate - arrival_rate

    /// Waiting-time law: P(W = 0) = 1 - rho, exponential(beta) above zero.
    /// The pure-exponential variant drops the atom (sensitivity studies).
    dist::DelayLaw waiting_law(bool pure_exponential = false) const;
};

/// Build the model from a flow description. Throws when the queue is
/// unstable (rho >= 1).
MM1Model mm1_from_flow(double mean_packet_bytes, double mean_interarrival_us,
                       double line_rate_bps);

/// Log-spaced threshold grid over (lo, hi], in nanoseconds.
struct SearchGrid {
    double lo = 0;
    double hi = 0;
    int steps = 512;
};

struct Optimum {
    double delta_star = 0;   // argmin, smallest on ties
    double best_mse = 0;     // ns^2
    double raw_mse = 0;      // ns^2, uncorrected baseline
    double improvement = 0;  // 1 - sqrt(best/raw)
    bool at_lower_edge = false;
    bool at_upper_edge = false;
    // Diagnostic: the sufficient variance condition holds on every hop law
    // at the reported optimum. The condition is sufficient, not necessary,
    // so a false here is a warning rather than an error.
    bool c1_consistent = true;
};

/// Grid search of the corrected expected squared offset error over the
/// threshold, both directions propagated with the given R and N.
Optimum optimize_threshold(const std::vector<dist::DelayLaw>& fwd_hops,
                           const std::vector<dist::DelayLaw>& rev_hops,
                           std::int64_t levels, std::int64_t capacity,
                           const SearchGrid& grid);

struct SweepRow {
    std::int64_t levels = 0;
    double delta_star = 0;
    double mse = 0;
    double improvement = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;    // one per requested R, ascending
    double raw_mse = 0;
    bool best_mse_monotone = true; // non-increasing in R (post-check)
};

/// Per-R threshold optimization. Monotonicity of the best achievable error
/// is checked after the fact; a violation (grid-resolution artifact) only
/// clears the flag.
SweepResult sweep_r(const std::vector<dist::DelayLaw>& fwd_hops,
                    const std::vector<dist::DelayLaw>& rev_hops,
                    std::int64_t capacity,
                    const std::vector<std::int64_t>& r_values,
                    const SearchGrid& grid);

std::vector<double> grid_points(const SearchGrid& grid);

} // namespace cmcsync::tune
