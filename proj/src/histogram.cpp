#include "symstats/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "symstats/summation.hpp"

namespace symstats {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

double compensated_weight_sum(const std::vector<HistogramBin>& bins) {
    CompensatedSum s;
    for (const auto& b : bins) s.add(b.weight);
    return s.value();
}

// Renormalizes weights so that their compensated sum is 1.0 bit-exactly.
// One division by the raw sum gets within a few ulp; the residual is then
// folded into the smallest positive weight (whose ulp is small enough to
// absorb it) until the sum lands on 1.0. Idempotent: weights already
// summing to exactly 1.0 are left untouched, which is what makes
// serialize/parse round trips exact.
void renormalize(std::vector<HistogramBin>& bins, double raw_sum) {
    if (raw_sum != 1.0) {
        for (auto& b : bins) b.weight /= raw_sum;
    }
    for (int pass = 0; pass < 8; ++pass) {
        const double sum = compensated_weight_sum(bins);
        if (sum == 1.0) return;
        auto smallest = bins.end();
        for (auto it = bins.begin(); it != bins.end(); ++it) {
            if (it->weight > 0.0 &&
                (smallest == bins.end() || it->weight < smallest->weight)) {
                smallest = it;
            }
        }
        if (smallest == bins.end()) return; // all-zero weights; caught later
        smallest->weight += 1.0 - sum;
    }
}

} // namespace

Histogram::Histogram(std::vector<HistogramBin> bins) : bins_(std::move(bins)) {
    if (bins_.empty()) {
        throw Error(errc::empty_bins, "histogram has no bins");
    }
    if (!std::is_sorted(bins_.begin(), bins_.end(),
                        [](const HistogramBin& a, const HistogramBin& b) {
                            return a.interval.lower() < b.interval.lower();
                        })) {
        throw Error(errc::non_contiguous, "bins are not sorted by lower bound");
    }
    for (std::size_t h = 0; h + 1 < bins_.size(); ++h) {
        if (bins_[h].interval.upper() != bins_[h + 1].interval.lower()) {
            throw Error(errc::non_contiguous,
                        "gap or overlap between bins " + std::to_string(h) +
                            " and " + std::to_string(h + 1) + " (" +
                            std::to_string(bins_[h].interval.upper()) + " vs " +
                            std::to_string(bins_[h + 1].interval.lower()) + ")");
        }
    }
    for (std::size_t h = 0; h < bins_.size(); ++h) {
        const auto& b = bins_[h];
        if (!(b.weight >= 0.0)) { // also rejects NaN
            throw Error(errc::negative_weight,
                        "bin " + std::to_string(h) + " has negative weight " +
                            std::to_string(b.weight));
        }
        if (b.weight > 0.0 && b.interval.degenerate()) {
            throw Error(errc::zero_width_massive_bin,
                        "bin " + std::to_string(h) +
                            " has zero width but positive weight");
        }
    }
    const double raw_sum = compensated_weight_sum(bins_);
    if (std::abs(raw_sum - 1.0) > kWeightSumTolerance) {
        throw Error(errc::weight_sum,
                    "bin weights sum to " + std::to_string(raw_sum) +
                        ", more than 1e-9 away from 1");
    }
    renormalize(bins_, raw_sum);

    cum_.resize(bins_.size() + 1);
    CompensatedSum running;
    cum_[0] = 0.0;
    for (std::size_t h = 0; h < bins_.size(); ++h) {
        running.add(bins_[h].weight);
        cum_[h + 1] = running.value();
    }
    cum_.back() = 1.0;
}

double Histogram::cdf(double y) const noexcept {
    if (y <= support_lower()) return 0.0;
    if (y >= support_upper()) return 1.0;
    // Last bin whose lower bound is <= y. Zero-width bins share their lower
    // bound with the following bin; picking the rightmost match skips them.
    std::size_t lo = 0, hi = bins_.size();
    while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (bins_[mid].interval.lower() <= y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const auto& bin = bins_[lo];
    const double width = bin.interval.width();
    if (width == 0.0) return cum_[lo];
    return cum_[lo] + bin.weight * (y - bin.interval.lower()) / width;
}

double Histogram::quantile(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(errc::out_of_range,
                    "quantile level " + std::to_string(t) + " outside [0, 1]");
    }
    if (t == 0.0) return support_lower();
    if (t == 1.0) return support_upper();
    std::size_t last_positive = bins_.size();
    for (std::size_t h = 0; h < bins_.size(); ++h) {
        if (bins_[h].weight <= 0.0) continue;
        last_positive = h;
        if (cum_[h] + bins_[h].weight >= t) {
            return bins_[h].interval.lower() +
                   (t - cum_[h]) / bins_[h].weight * bins_[h].interval.width();
        }
    }
    // Only reachable through rounding dust above the last cumulative sum.
    return bins_[last_positive].interval.upper();
}

Histogram Histogram::bisect() const {
    std::vector<HistogramBin> halves;
    halves.reserve(bins_.size() * 2);
    for (const auto& b : bins_) {
        const double mid = b.interval.midpoint();
        const double half_weight = b.weight / 2.0;
        halves.push_back({Interval(b.interval.lower(), mid), half_weight});
        halves.push_back({Interval(mid, b.interval.upper()), half_weight});
    }
    return Histogram(std::move(halves));
}

UnitMoments histogram_moments(const Histogram& h) noexcept {
    CompensatedSum mean;
    for (const auto& b : h.bins()) {
        mean.add(b.weight * b.interval.midpoint());
    }
    const double mu = mean.value();
    CompensatedSum var;
    for (const auto& b : h.bins()) {
        const double centered = b.interval.midpoint() - mu;
        const double width = b.interval.width();
        var.add(b.weight * (centered * centered + width * width / 12.0));
    }
    return {mu, var.value()};
}

double second_raw_moment(const Histogram& h) noexcept {
    CompensatedSum s;
    for (const auto& b : h.bins()) {
        const double a = b.interval.lower();
        const double c = b.interval.upper();
        s.add(b.weight * (a * a + a * c + c * c) / 3.0);
    }
    return s.value();
}

Histogram interval_as_histogram(const Interval& x) {
    if (x.degenerate()) {
        throw Error(errc::degenerate_interval,
                    "degenerate interval cannot carry a uniform density");
    }
    return Histogram({HistogramBin{x, 1.0}});
}

} // namespace symstats
