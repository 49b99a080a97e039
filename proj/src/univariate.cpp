#include "symstats/univariate.hpp"

#include "symstats/summation.hpp"

namespace symstats {

double symbolic_mean(const SymbolicVariable& v) {
    CompensatedSum s;
    for (const auto& c : v.cells()) s.add(cell_moments(c).mean);
    return s.value() / static_cast<double>(v.size());
}

UnivariateReport variance_decomposition(const SymbolicVariable& v) {
    const auto moments = v.unit_moments();
    const auto n = static_cast<double>(moments.size());

    CompensatedSum mean_sum;
    for (const auto& m : moments) mean_sum.add(m.mean);
    const double mean = mean_sum.value() / n;

    CompensatedSum ssw_sum;
    CompensatedSum ssb_sum;
    for (const auto& m : moments) {
        ssw_sum.add(m.variance);
        const double centered = m.mean - mean;
        ssb_sum.add(centered * centered);
    }

    UnivariateReport r;
    r.n = moments.size();
    r.mean = mean;
    r.ssw = ssw_sum.value();
    r.ssb = ssb_sum.value();
    r.sst = r.ssw + r.ssb;
    r.variance = r.sst / n;
    return r;
}

double symbolic_variance(const SymbolicVariable& v) {
    return variance_decomposition(v).variance;
}

double symbolic_variance_raw_moment_form(const SymbolicVariable& v) {
    const auto n = static_cast<double>(v.size());
    CompensatedSum raw;
    CompensatedSum mean_sum;
    for (const auto& c : v.cells()) {
        const auto m = cell_moments(c);
        raw.add(m.mean * m.mean + m.variance);
        mean_sum.add(m.mean);
    }
    const double mean = mean_sum.value() / n;
    return raw.value() / n - mean * mean;
}

double symbolic_variance_endpoint_form(const SymbolicVariable& v) {
    if (v.kind() != CellKind::interval) {
        throw Error(errc::kind_mismatch,
                    "endpoint-form variance is defined for interval variables");
    }
    const auto n = static_cast<double>(v.size());
    CompensatedSum quadratic;
    CompensatedSum endpoint;
    for (const auto& c : v.cells()) {
        const auto& iv = std::get<Interval>(c);
        const double a = iv.lower();
        const double b = iv.upper();
        quadratic.add(b * b + b * a + a * a);
        endpoint.add(a + b);
    }
    const double s = endpoint.value();
    return quadratic.value() / (3.0 * n) - s * s / (4.0 * n * n);
}

} // namespace symstats
