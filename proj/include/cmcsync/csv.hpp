#pragma once

#include <string>
#include <vector>

#include "cmcsync/criteria.hpp"
#include "cmcsync/histogram.hpp"
#include "cmcsync/sim.hpp"
#include "cmcsync/tune.hpp"

namespace cmcsync::csv {

/// Locale-independent numeric formatting: '.' decimal separator, '\n' line
/// endings, shortest round-trippable representation.
std::string format_number(double v);

/// rounds.csv: round,t1,t2,t3,t4,n_fwd,n_rev,eps_raw,eps_comp plus one
/// ground-truth wait column per switch and direction, all nanoseconds.
void write_rounds(const std::string& path,
                  const std::vector<sim::RoundRecord>& rounds,
                  std::size_t hop_count);

/// queue_stats.csv: hop,direction,rho_obs,mean_wait_ns,drops.
void write_queue_stats(const std::string& path,
                       const std::vector<sim::QueueStats>& stats);

/// One integer nanosecond sample per line under a queuing_delay_ns header.
void write_waits(const std::string& path, const std::vector<double>& waits_ns);

/// error_law.csv: bin_start_ns,mass.
void write_error_law(const std::string& path, const dist::HistogramLaw& law);

/// counter_dist.csv: n,prob.
void write_counter_dist(const std::string& path,
                        const std::vector<double>& dist);

/// sweep.csv: R,delta_star_ns,mse_ns2,improvement.
void write_sweep(const std::string& path,
                 const std::vector<tune::SweepRow>& rows);

struct ConditionRow {
    std::string scenario;
    std::int64_t levels = 0;
    double delta_star_ns = 0;
    criteria::ConditionReport report;
};

/// conditions_report.csv: one row per (scenario, R, delta*).
void write_conditions(const std::string& path,
                      const std::vector<ConditionRow>& rows);

} // namespace cmcsync::csv
