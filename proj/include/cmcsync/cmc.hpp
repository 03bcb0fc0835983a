#pragma once

#include <cstdint>
#include <optional>

namespace cmcsync::cmc {

/// How the marking counter is laid out in the header bit budget.
enum class Encoding { BitShift, IntegerCounter };

enum class Direction { Forward, Reverse };

/// Marking-counter value carried in a packet header, bounded by the
/// capacity; monotone non-decreasing along a path.
struct CounterState {
    std::int64_t value = 0;
};

/// Switch-side marking parameters. threshold_bytes is the queue-occupancy
/// step K; levels is the number of per-hop thresholds R (multiples of K);
/// capacity is the maximum counter value N for one direction.
struct MarkingConfig {
    std::int64_t threshold_bytes = 0;          // K
    std::int64_t levels = 1;                   // R
    std::int64_t capacity = 1;                 // N (per direction)
    double line_rate = 1e9;                    // bits per second
    Encoding encoding = Encoding::BitShift;
    bool fr_split = false;                     // split budget between directions
    int header_bits = 1;                       // b
    std::optional<int> cell_quantized;         // exponent n: K = 80 * 2^n
    bool capacity_override = false;            // integer counter: N = 2^b - 1

    void validate() const; // throws on violated constraints
};

/// Per-direction counter capacities implied by a header budget.
struct CapacityPair {
    std::int64_t forward = 0;
    std::int64_t reverse = 0;
};

/// Capacity from header bits: a bit-shift counter reaches b, an integer
/// counter 2^(b-1) (2^b - 1 with the override); splitting the budget
/// between directions halves each side and requires an even b.
CapacityPair encoding_capacity(int header_bits, Encoding encoding,
                               bool fr_split, bool capacity_override = false);

/// Congestion level for a queue of queue_bits: min(floor(bits / 8K), R).
/// Occupancy exactly at a threshold multiple counts as having crossed it.
std::int64_t congestion_level(std::int64_t queue_bits,
                              const MarkingConfig& config);

/// Same level mapping expressed on an 80-byte-cell depth: depth >> n,
/// clamped to R. Matches congestion_level when K = 80 * 2^n.
std::int64_t cell_level(std::int64_t enq_qdepth_cells, int cell_exponent,
                        std::int64_t levels);

/// Counter update at one hop: y = x + min(r, N - x). Throws if the incoming
/// value exceeds the capacity (corrupt header).
CounterState counter_update(CounterState x, std::int64_t level,
                            std::int64_t capacity);

/// Per-mark delay compensation: the serialization time of K bytes at the
/// line rate, in nanoseconds.
double threshold_delay_ns(std::int64_t threshold_bytes, double line_rate_bps);

/// Variant that charges one MTU of in-flight data on top of the threshold.
double threshold_delay_mtu_ns(std::int64_t threshold_bytes,
                              std::int64_t mtu_bytes, double line_rate_bps);

/// Threshold bytes for a Tofino-style cell-quantized configuration.
std::int64_t cell_quantized_threshold_bytes(int cell_exponent);

/// Both direction counters carried by one sync exchange. Without the
/// forward/reverse split the two fields are simply the request and
/// response counters; with the split they share one header record.
struct HeaderCounters {
    CounterState fwd;
    CounterState rev;
};

/// Apply one hop's marking to the header: compute the congestion level for
/// the observed occupancy and advance only the counter of the packet's
/// direction, using that direction's capacity.
HeaderCounters mark_packet(HeaderCounters header, std::int64_t queue_bits,
                           const MarkingConfig& config, Direction direction);

/// Effective capacity for one direction under the config's split rule.
std::int64_t direction_capacity(const MarkingConfig& config,
                                Direction direction);

} // namespace cmcsync::cmc
