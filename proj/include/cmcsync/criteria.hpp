#pragma once

#include <cstdint>

#include "cmcsync/delay_law.hpp"

namespace cmcsync::criteria {

/// Sufficient condition for per-hop variance reduction at threshold d with
/// R levels: d >= 2*mean / (1 + (2R-1) * P(X > R d)). The right-hand side
/// itself depends on d, so the check is pointwise.
struct C1Result {
    bool holds = false;
    double rhs = 0; // ns
};
C1Result check_c1(const dist::DelayLaw& law, double delta_star,
                  std::int64_t levels);

/// Stochastic dominance between the two direction laws: the larger-mean law
/// must have the strictly larger CCDF at every level boundary r*d, r in
/// 1..R. Equal means are the symmetric regime; the check is then vacuous.
bool check_c2(const dist::DelayLaw& req, const dist::DelayLaw& resp,
              double delta_star, std::int64_t levels);

/// Upper bound on the threshold for bias reduction:
/// d < 2 (mean_req - mean_resp) / sum_r (ccdf_req(r d) - ccdf_resp(r d)).
struct C3Result {
    bool holds = false;
    double upper_bound = 0; // ns, +inf when the tails coincide
};
C3Result check_c3(const dist::DelayLaw& req, const dist::DelayLaw& resp,
                  double delta_star, std::int64_t levels);

enum class IrMode {
    C1Sufficient,   // fraction of the range where C1 holds
    ActualVariance, // fraction where the marked variance strictly improves
};

/// Smallest threshold in (0, range] satisfying the mode's criterion, where
/// range is the largest support value (the 0.9999 quantile for unbounded
/// laws). Found by bisection, falling back to a grid scan when the sign
/// pattern is not a single crossing.
double improvement_region_lower_bound(const dist::DelayLaw& law,
                                      std::int64_t levels,
                                      IrMode mode = IrMode::C1Sufficient);

/// Fraction of [0, range] covered by the improvement region.
double improvement_region_fraction(const dist::DelayLaw& law,
                                   std::int64_t levels,
                                   IrMode mode = IrMode::C1Sufficient);

/// Mean and variance of X - d * min(floor(X/d), R), the per-hop law after
/// marking with an unconstrained counter budget.
double mean_after_marking(const dist::DelayLaw& law, double delta_star,
                          std::int64_t levels);
double variance_after_marking(const dist::DelayLaw& law, double delta_star,
                              std::int64_t levels);

struct ConditionReport {
    bool c1_holds = false;
    bool c2_holds = false;
    bool c3_holds = false;
    double ir_lower_bound = 0;  // ns
    double c3_upper_bound = 0;  // ns
    double ir_fraction = 0;     // C1-sufficient mode
    double ir_fraction_actual = 0;
    bool symmetric_means = false; // forward/reverse means equal (bias-free)
};

ConditionReport evaluate_conditions(const dist::DelayLaw& req,
                                    const dist::DelayLaw& resp,
                                    double delta_star, std::int64_t levels);

} // namespace cmcsync::criteria
