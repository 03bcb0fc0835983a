#pragma once

#include <cstdint>
#include <vector>

#include "cmcsync/cmc.hpp"

namespace cmcsync::sim {

/// Cross-traffic source feeding one egress queue: exponential interarrivals
/// and exponential packet sizes, optionally duty-cycled (on_s seconds of
/// arrivals, off_s seconds of silence, repeating).
struct FlowSpec {
    double mean_packet_bytes = 0; // 0: no cross traffic on this queue
    double mean_interarrival_us = 0;
    double on_s = 0;              // 0: always on
    double off_s = 0;

    bool active() const { return mean_packet_bytes > 0; }
    double duty_cycle() const {
        return off_s <= 0 ? 1.0 : on_s / (on_s + off_s);
    }
};

/// Per-switch cross traffic, one flow per direction.
struct HopTraffic {
    FlowSpec fwd;
    FlowSpec rev;
};

struct ScenarioSpec {
    std::vector<HopTraffic> hops;
    double line_rate = 1e9;       // bits per second
    bool framing = false;         // Ethernet overhead + fragmentation at MTU
    bool marking_enabled = true;
    cmc::MarkingConfig marking;
    std::int64_t sync_interval_ns = 250'000'000; // 4 Hz
    std::int64_t duration_ns = 10'000'000'000;
    std::int64_t base_delay_ns = 5'000;          // symmetric one-way base
    std::int64_t server_turnaround_ns = 0;
    std::int64_t sync_packet_bytes = 90;
    std::int64_t buffer_bits = 1'000'000'000;
    std::int64_t true_offset_ns = 0;
    std::uint64_t seed = 1;
    int replications = 1;
    int wait_sample_stride = 1;   // record every k-th wait sample

    void validate() const;
};

/// One completed exchange with ground truth. Timestamps are picoseconds on
/// the exchanging clocks (t1/t4 client, t2/t3 server); waits are the true
/// per-switch queuing delays seen by the request and response.
struct RoundRecord {
    std::int64_t round = 0;
    std::int64_t t1_ps = 0, t2_ps = 0, t3_ps = 0, t4_ps = 0;
    std::int64_t n_fwd = 0, n_rev = 0;
    double eps_raw_ns = 0;
    double eps_comp_ns = 0;
    double fwd_delay_raw_ns = 0;  // t2 - t1
    double rev_delay_raw_ns = 0;  // t4 - t3
    double fwd_delay_comp_ns = 0; // after subtracting n_fwd * delta
    double rev_delay_comp_ns = 0;
    std::vector<double> fwd_waits_ns; // indexed by switch
    std::vector<double> rev_waits_ns; // indexed by switch

    double offset_estimate_raw_ns() const {
        return (fwd_delay_raw_ns - rev_delay_raw_ns) / 2.0;
    }
    double offset_estimate_comp_ns() const {
        return (fwd_delay_comp_ns - rev_delay_comp_ns) / 2.0;
    }
};

struct QueueStats {
    int hop = 0;                  // switch index, 0-based
    cmc::Direction direction = cmc::Direction::Forward;
    double rho_obs = 0;           // measured utilization
    double mean_wait_ns = 0;
    std::int64_t served = 0;
    std::int64_t drops = 0;
    double mean_in_system = 0;    // sampled at cross arrivals (PASTA)
    double arrival_rate_per_ns = 0;
    double mean_service_ns = 0;
};

struct RunResult {
    std::vector<RoundRecord> rounds;
    std::vector<QueueStats> queue_stats;        // fwd queues then rev queues
    std::vector<std::vector<double>> fwd_waits; // per switch, sampled (ns)
    std::vector<std::vector<double>> rev_waits;
    std::int64_t lost_sync_packets = 0;
    double delta_star_ns = 0;                   // effective compensation step
};

/// One deterministic replication driven by spec.seed.
RunResult run_scenario(const ScenarioSpec& spec);

/// All replications (seeds derived from spec.seed), pooled in replication
/// order. max_threads 0 consults CMC_THREADS, then hardware concurrency.
RunResult run_replications(const ScenarioSpec& spec, int max_threads = 0);

enum class FilterKind { MedianRtt, MinRtt, MovingAverage };

/// Sliding-window RTT filter over the round sequence. MinRtt emits the
/// offset estimate of the window's smallest-RTT round, MedianRtt of the
/// window's median-RTT round (lower median for even windows), MovingAverage
/// the mean offset estimate. Delay inputs are the corrected estimates when
/// compensated is set.
std::vector<double> apply_filter(FilterKind kind, int window,
                                 const std::vector<RoundRecord>& rounds,
                                 bool compensated);

/// Root mean square of a series. Throws on empty input.
double measure_rms(const std::vector<double>& series);

double variance_of(const std::vector<double>& series);

} // namespace cmcsync::sim
