#include "symstats/diagnostics.hpp"

#include <string>
#include <utility>

namespace symstats {

namespace {

SymbolicVariable bisect_all(const SymbolicVariable& v) {
    std::vector<Cell> cells;
    cells.reserve(v.size());
    for (const auto& c : v.cells()) {
        cells.emplace_back(std::get<Histogram>(c).bisect());
    }
    return SymbolicVariable(v.name(), std::move(cells));
}

} // namespace

SelfCovarianceReport self_covariance_check(const SymbolicVariable& v, Estimator e) {
    const UnivariateReport d = variance_decomposition(v);

    SelfCovarianceReport r;
    r.estimator = e;
    r.n = d.n;
    r.variance1 = d.variance;
    r.variance2 = d.variance;
    r.n_times_variance = d.sst; // variance is defined as sst / n

    if (e == Estimator::billard) {
        r.cst = covariance(v, v, Estimator::billard).cst;
        r.discrepancy = r.cst - r.n_times_variance;
    } else {
        // csw is identically zero, so cst is the between sum, which is the
        // decomposition's ssb computed by the same code path; the
        // discrepancy is then -ssw without any subtractive cancellation.
        r.cst = d.ssb;
        r.discrepancy = -d.ssw;
    }
    return r;
}

RefinementTrace refinement_experiment(const SymbolicVariable& v1,
                                      const SymbolicVariable& v2,
                                      int max_splits,
                                      RefineSide side) {
    if (max_splits < 0 || max_splits > 20) {
        throw Error(errc::too_many_splits,
                    "split count " + std::to_string(max_splits) +
                        " outside [0, 20]; bin counts grow as 2^k");
    }

    SymbolicVariable a = v1;
    SymbolicVariable b = v2;
    RefinementTrace trace;
    trace.steps.reserve(static_cast<std::size_t>(max_splits) + 1);
    for (int k = 0;; ++k) {
        RefinementStep step;
        step.splits = k;
        step.cov = cov_billard_histogram(a, b).covariance;
        step.cov_means = cov_of_means(a, b);
        const UnivariateReport u1 = variance_decomposition(a);
        const UnivariateReport u2 = variance_decomposition(b);
        step.mean1 = u1.mean;
        step.mean2 = u2.mean;
        step.variance1 = u1.variance;
        step.variance2 = u2.variance;
        trace.steps.push_back(step);

        if (k == max_splits) break;
        if (side != RefineSide::second) a = bisect_all(a);
        if (side != RefineSide::first) b = bisect_all(b);
    }
    return trace;
}

} // namespace symstats
