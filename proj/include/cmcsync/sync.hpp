#pragma once

#include <cstdint>
#include <optional>

namespace cmcsync::sync {

/// One four-timestamp exchange. t1/t4 are client-clock times, t2/t3 server
/// clock, all signed nanoseconds. Counters are the marking counts observed
/// in the request and response; delta_star is the per-mark compensation.
struct SyncRound {
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    std::int64_t t3 = 0;
    std::int64_t t4 = 0;
    std::int64_t n_fwd = 0;
    std::int64_t n_rev = 0;
    double delta_star = 0;                    // ns
    std::optional<double> true_offset;        // theta, when known
};

struct OffsetEstimate {
    double theta_hat = 0;                     // ns
    std::optional<double> epsilon;            // theta - theta_hat, when known
    bool compensated = false;
    // Correction larger than the observed one-way span; the estimate is
    // still reported, this only flags the inconsistency.
    bool negative_implied_queuing = false;
};

/// theta_hat = ((t2 - t1) + (t3 - t4)) / 2.
OffsetEstimate estimate_offset(const SyncRound& round);

/// Marking compensation as performed when the server rewrites its receive
/// timestamp: equivalent to estimating on (t1, t2 - n_fwd d, t3, t4 - n_rev d).
OffsetEstimate compensate_server_mode(const SyncRound& round);

/// Client-side compensation from a split forward/reverse header. Numerically
/// identical to compensate_server_mode for equal counters; only the locus
/// of the computation differs.
OffsetEstimate compensate_fr_mode(const SyncRound& round);

struct HopCorrection {
    double error = 0;                 // residual delay estimation error, ns
    std::int64_t increments_used = 0;
};

/// Residual error at one hop after marking: with r = min(floor(q/d), R,
/// budget), the residual is q - r*d. Zero delay yields (0, 0).
HopCorrection per_hop_corrected_error(double delta_q, std::int64_t levels,
                                      double delta_star,
                                      std::int64_t increments_available);

} // namespace cmcsync::sync
