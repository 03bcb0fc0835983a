#pragma once

#include <cstddef>
#include <vector>

namespace cmcsync::dist {

/// Fixed-grid measure on [0, inf): bin i holds the mass of [i*w, (i+1)*w),
/// origin always 0. Mass beyond the last bin is carried in overflow_mass so
/// truncation never silently loses probability. Moments treat each bin as
/// concentrated at its midpoint and the overflow at the overflow boundary.
///
/// Total mass is 1 for a probability law but sub-distributions (mass < 1)
/// are legal; propagation keeps one per counter state.
struct HistogramLaw {
    double bin_width = 1.0;
    std::vector<double> masses;
    double overflow_mass = 0.0;

    double total_mass() const;
    double mean() const;
    double variance() const;
    double second_moment() const;

    /// P(X < k*bin_width), exact at bin boundaries.
    double cdf_at_boundary(std::size_t k) const;

    /// Index of the last bin with non-negligible mass (0 if empty).
    std::size_t last_nonzero_bin() const;

    void normalize();
    bool is_normalized(double tol = 1e-9) const;
};

/// Point mass at zero on the given grid.
HistogramLaw histogram_delta_zero(double bin_width);

/// Convolution of two histograms on the same grid. Result has
/// a.size + b.size - 1 bins unless max_bins caps it, in which case the
/// excess mass moves to overflow. Throws on mismatched bin widths.
HistogramLaw convolve(const HistogramLaw& a, const HistogramLaw& b,
                      std::size_t max_bins = 0);

/// In-place accumulate: dst += conv(a, b) * 1, truncated to dst grid length.
/// dst.masses must already be sized; excess lands in dst.overflow_mass.
void accumulate_convolution(std::vector<double>& dst, double& dst_overflow,
                            const std::vector<double>& a, double a_overflow,
                            const HistogramLaw& b);

} // namespace cmcsync::dist
