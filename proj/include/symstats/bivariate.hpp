#pragma once

#include <optional>

#include "symstats/dataset.hpp"

namespace symstats {

/// The covariance estimators implemented for symbolic variables. They differ
/// only in the within-unit coupling they assume between the two cell
/// distributions of the same unit:
///   - bg      : independent coupling, so every within-unit covariance is 0
///               (Bertrand-Goupil);
///   - billard : comonotone coupling, per-unit covariance sigma_1 * sigma_2
///               for intervals, and the bin-pair weighted extension of the
///               same form for histograms (Billard 2008);
///   - means   : no coupling model at all, just the covariance of the n
///               per-unit means.
enum class Estimator { bg, billard, means };

const char* estimator_name(Estimator e) noexcept;

struct CovReport {
    std::size_t n = 0;
    Estimator estimator = Estimator::bg;
    double csw = 0.0;        // within-units cross sum
    double csb = 0.0;        // between-units cross sum
    double cst = 0.0;        // total, csw + csb
    double covariance = 0.0; // cst / n
    /// covariance / (S1 * S2); absent when either variance is zero. The raw
    /// ratio is reported unclamped: under the billard histogram estimator it
    /// can exceed 1 in magnitude, which report writers flag.
    std::optional<double> correlation;
};

/// Between-units cross sum: sum_i (mu_i1 - mean1)(mu_i2 - mean2).
/// Requires equal length and equal cell kind.
double csb(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Independent within-unit coupling: csw == 0 exactly, cst == csb.
CovReport cov_bg(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Comonotone within-unit coupling for interval variables:
/// csw = sum_i (b_i1 - a_i1)(b_i2 - a_i2)/12. The equivalent centered
/// closed form (see interval_cst_centered_form) is computed alongside and
/// the two routes are required to agree to 1e-9 relative.
CovReport cov_billard_interval(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Bin-pair weighted form for histogram variables:
/// cst = (1/6) sum_i sum_r sum_s [ 2(b_r-m1)(b_s-m2) + (b_r-m1)(a_s-m2)
///       + (a_r-m1)(b_s-m2) + 2(a_r-m1)(a_s-m2) ] w_r w_s
/// with m1, m2 the symbolic means. csw is reported residually as cst - csb;
/// no per-unit within form exists for histograms.
CovReport cov_billard_histogram(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Covariance of the n per-unit means: (1/n) sum mu_i1 mu_i2 - mean1 mean2.
/// Shares its summation path with cov_bg, so the two are bit-identical.
double cov_of_means(const SymbolicVariable& v1, const SymbolicVariable& v2);

CovReport cov_means_report(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Dispatch on estimator; billard picks the interval or histogram form from
/// the variables' cell kind.
CovReport covariance(const SymbolicVariable& v1, const SymbolicVariable& v2, Estimator e);

/// Centered single-sum route for the comonotone interval cst:
/// (1/6) sum_i [ 2(b1-m1)(b2-m2) + (b1-m1)(a2-m2) + (a1-m1)(b2-m2)
///               + 2(a1-m1)(a2-m2) ].
double interval_cst_centered_form(const SymbolicVariable& v1, const SymbolicVariable& v2);

namespace detail {

/// The histogram cst evaluated bin pair by bin pair, faithful to the nested
/// sum. Cost is sum_i h_i1 * h_i2 products.
double billard_histogram_cst_direct(const SymbolicVariable& v1, const SymbolicVariable& v2);

/// Per-unit factored evaluation of the same sum, O(h_i1 + h_i2) per unit:
/// with A_k = sum_r w_r (a_r - m_k) and B_k = sum_r w_r (b_r - m_k),
/// each unit contributes (2 B1 B2 + B1 A2 + A1 B2 + 2 A1 A2)/6.
double billard_histogram_cst_factored(const SymbolicVariable& v1, const SymbolicVariable& v2);

} // namespace detail

} // namespace symstats
