#pragma once

#include "symstats/dataset.hpp"

namespace symstats {

/// Sample statistics of a symbolic variable read as an equal-weight mixture
/// of its n unit distributions. The variance is the population form
/// (divide by n) and decomposes as sst = ssw + ssb with
/// ssw = sum of unit variances and ssb = sum of squared centered unit means.
struct UnivariateReport {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0; // == sst / n
    double ssw = 0.0;
    double ssb = 0.0;
    double sst = 0.0;
};

/// Mixture mean: (1/n) sum of unit means.
double symbolic_mean(const SymbolicVariable& v);

/// Mixture variance, computed through the within/between decomposition
/// (centered, so it is translation-stable and nonnegative by construction).
double symbolic_variance(const SymbolicVariable& v);

UnivariateReport variance_decomposition(const SymbolicVariable& v);

/// Alternate algebraic routes for the same variance, kept for cross-checks.

/// Raw-moment (mixture) form: (1/n) sum (mu_i^2 + sigma_i^2) - mean^2.
double symbolic_variance_raw_moment_form(const SymbolicVariable& v);

/// Two-term endpoint form for interval variables:
/// (1/3n) sum (b^2 + ab + a^2) - (1/4n^2) [sum (a+b)]^2.
/// Throws Error(kind_mismatch) for histogram variables.
double symbolic_variance_endpoint_form(const SymbolicVariable& v);

} // namespace symstats
