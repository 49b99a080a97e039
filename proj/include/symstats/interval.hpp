#pragma once

#include <cmath>
#include <string>

#include "symstats/errors.hpp"

namespace symstats {

/// First two moments of one symbolic cell, read as a distribution:
/// an interval [a,b] is uniform on [a,b], a histogram is uniform within
/// each bin.
struct UnitMoments {
    double mean = 0.0;
    double variance = 0.0;

    friend bool operator==(const UnitMoments&, const UnitMoments&) = default;
};

/// Closed bounded real interval [lower, upper]. Degenerate intervals
/// (lower == upper) are allowed and behave as point values.
class Interval {
public:
    Interval(double lower, double upper) : lower_(lower), upper_(upper) {
        if (!std::isfinite(lower) || !std::isfinite(upper)) {
            throw Error(errc::invalid_interval,
                        "interval bounds must be finite");
        }
        if (lower > upper) {
            throw Error(errc::invalid_interval,
                        "interval lower bound " + std::to_string(lower) +
                            " exceeds upper bound " + std::to_string(upper));
        }
    }

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double width() const noexcept { return upper_ - lower_; }
    double midpoint() const noexcept { return (lower_ + upper_) / 2.0; }
    bool degenerate() const noexcept { return lower_ == upper_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lower_;
    double upper_;
};

/// Mean (a+b)/2 and variance (b-a)^2/12 of the uniform distribution on the
/// interval.
inline UnitMoments interval_moments(const Interval& x) noexcept {
    const double w = x.width();
    return {x.midpoint(), w * w / 12.0};
}

/// Raw second moment E[Y^2] = (a^2 + ab + b^2)/3 of the uniform on [a,b].
inline double second_raw_moment(const Interval& x) noexcept {
    const double a = x.lower();
    const double b = x.upper();
    return (a * a + a * b + b * b) / 3.0;
}

} // namespace symstats
