#pragma once

#include <cstddef>
#include <vector>

#include "symstats/interval.hpp"

namespace symstats {

struct HistogramBin {
    Interval interval;
    double weight = 0.0; // probability mass, dimensionless

    friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

/// Histogram-valued symbolic cell: a contiguous partition of a bounded
/// support into weighted bins, uniform within each bin.
///
/// Bin conventions:
///   - bins are sorted and contiguous: bin[h].upper == bin[h+1].lower exactly;
///   - bins are half-open [a,b) except the last, which is closed [a,b];
///     this only matters for cdf() at shared boundaries, where the value is
///     the cumulative mass up to that point under either convention;
///   - weights are nonnegative and are renormalized at construction so that
///     they sum to 1.0 bit-exactly (construction rejects raw weights whose
///     sum differs from 1 by more than 1e-9);
///   - zero-weight bins are legal and are skipped by quantile's bin search;
///   - a bin with positive weight must have positive width.
class Histogram {
public:
    /// Validates the invariants above and renormalizes the weights.
    /// Throws Error with code empty_bins, non_contiguous, weight_sum,
    /// negative_weight or zero_width_massive_bin.
    explicit Histogram(std::vector<HistogramBin> bins);

    const std::vector<HistogramBin>& bins() const noexcept { return bins_; }
    std::size_t size() const noexcept { return bins_.size(); }

    double support_lower() const noexcept { return bins_.front().interval.lower(); }
    double support_upper() const noexcept { return bins_.back().interval.upper(); }

    /// Cumulative mass strictly before bin h (cumulative_before(size()) == 1).
    double cumulative_before(std::size_t h) const noexcept { return cum_[h]; }

    /// Piecewise-linear distribution function. Clamped to 0 below the
    /// support and 1 above it; right-continuous and nondecreasing.
    double cdf(double y) const noexcept;

    /// Inverse of cdf for t in [0,1]. t == 0 and t == 1 map to the support
    /// bounds; interior t maps into the leftmost positive-mass bin whose
    /// cumulative range contains t. Throws Error(out_of_range) outside [0,1].
    double quantile(double t) const;

    /// Splits every bin [a,b] at its midpoint into two bins of half the
    /// weight. Leaves cdf, quantile and moments unchanged.
    Histogram bisect() const;

    friend bool operator==(const Histogram& lhs, const Histogram& rhs) {
        return lhs.bins_ == rhs.bins_;
    }

private:
    std::vector<HistogramBin> bins_;
    std::vector<double> cum_; // size() + 1 entries, cum_.back() == 1.0
};

/// Mixture-over-bins moments: mean = sum_h w_h (a_h+b_h)/2 and the variance
/// accumulated per bin in centered form, (mid_h - mean)^2 + width_h^2/12,
/// which is algebraically the raw-moment expression but never negative.
UnitMoments histogram_moments(const Histogram& h) noexcept;

/// Raw second moment E[Y^2] = (1/3) sum_h w_h (a^2 + ab + b^2).
double second_raw_moment(const Histogram& h) noexcept;

/// Embeds a non-degenerate interval as a single-bin histogram with the same
/// uniform density. Throws Error(degenerate_interval) when lower == upper,
/// since uniform density on a point is undefined.
Histogram interval_as_histogram(const Interval& x);

} // namespace symstats
