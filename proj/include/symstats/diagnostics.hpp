#pragma once

#include "symstats/bivariate.hpp"
#include "symstats/univariate.hpp"

namespace symstats {

/// Result of pairing a variable with itself under one covariance estimator:
/// a consistent estimator would give cst == n * variance, so discrepancy
/// exposes the estimator's bias. For bg it is -ssw exactly; for billard on
/// intervals it is 0; for billard on multi-bin histograms it is nonzero in
/// general.
struct SelfCovarianceReport {
    Estimator estimator = Estimator::bg;
    std::size_t n = 0;
    double variance1 = 0.0;
    double variance2 = 0.0;
    double cst = 0.0;
    double n_times_variance = 0.0; // sst of the decomposition
    double discrepancy = 0.0;      // cst - n_times_variance
};

SelfCovarianceReport self_covariance_check(const SymbolicVariable& v, Estimator e);

/// Which variables get their bins split at each refinement step.
enum class RefineSide { both, first, second };

struct RefinementStep {
    int splits = 0;     // cumulative bisections applied so far
    double cov = 0.0;   // billard histogram covariance at this step
    double cov_means = 0.0;
    double mean1 = 0.0;
    double mean2 = 0.0;
    double variance1 = 0.0;
    double variance2 = 0.0;
};

struct RefinementTrace {
    std::vector<RefinementStep> steps; // steps[k] is after k bisections
};

/// Repeatedly bisects every bin of the selected variables and records the
/// billard histogram covariance together with the means covariance and the
/// univariate statistics at each step. Bisection preserves every cell's
/// density, so means, variances and cov_means stay constant while the
/// billard covariance drifts toward cov_means. Bin counts grow as 2^k, so
/// max_splits is capped at 20 (Error(too_many_splits) beyond).
RefinementTrace refinement_experiment(const SymbolicVariable& v1,
                                      const SymbolicVariable& v2,
                                      int max_splits,
                                      RefineSide side = RefineSide::both);

} // namespace symstats
