#include "symstats/bivariate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "symstats/summation.hpp"
#include "symstats/univariate.hpp"

namespace symstats {

namespace {

void require_same_n(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    if (v1.size() != v2.size()) {
        throw Error(errc::length_mismatch,
                    "variables '" + v1.name() + "' (" + std::to_string(v1.size()) +
                        " units) and '" + v2.name() + "' (" +
                        std::to_string(v2.size()) + " units) differ in length");
    }
}

void require_same_kind(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    if (v1.kind() != v2.kind()) {
        throw Error(errc::kind_mismatch,
                    "variables '" + v1.name() + "' and '" + v2.name() +
                        "' have different cell kinds");
    }
}

void require_kind(const SymbolicVariable& v, CellKind k, const char* op) {
    if (v.kind() != k) {
        throw Error(errc::kind_mismatch,
                    std::string(op) + " requires " +
                        (k == CellKind::interval ? "interval" : "histogram") +
                        " cells, but variable '" + v.name() + "' holds the other kind");
    }
}

double mean_of(const std::vector<UnitMoments>& m) {
    CompensatedSum s;
    for (const auto& x : m) s.add(x.mean);
    return s.value() / static_cast<double>(m.size());
}

// sum_i (mu_i1 - mean1)(mu_i2 - mean2). Shared by csb, cov_bg and
// cov_of_means so that all three agree bit for bit.
double centered_cross_sum(const std::vector<UnitMoments>& m1,
                          const std::vector<UnitMoments>& m2) {
    const double mean1 = mean_of(m1);
    const double mean2 = mean_of(m2);
    CompensatedSum s;
    for (std::size_t i = 0; i < m1.size(); ++i) {
        s.add((m1[i].mean - mean1) * (m2[i].mean - mean2));
    }
    return s.value();
}

std::optional<double> correlation_of(const SymbolicVariable& v1,
                                     const SymbolicVariable& v2,
                                     double covariance) {
    const double var1 = symbolic_variance(v1);
    const double var2 = symbolic_variance(v2);
    if (var1 <= 0.0 || var2 <= 0.0) return std::nullopt;
    return covariance / (std::sqrt(var1) * std::sqrt(var2));
}

CovReport make_report(const SymbolicVariable& v1, const SymbolicVariable& v2,
                      Estimator e, double csw, double csb_value) {
    CovReport r;
    r.n = v1.size();
    r.estimator = e;
    r.csw = csw;
    r.csb = csb_value;
    r.cst = csw + csb_value;
    r.covariance = r.cst / static_cast<double>(r.n);
    r.correlation = correlation_of(v1, v2, r.covariance);
    return r;
}

bool close_relative(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y)) + 1e-12;
}

} // namespace

const char* estimator_name(Estimator e) noexcept {
    switch (e) {
    case Estimator::bg: return "bg";
    case Estimator::billard: return "billard";
    case Estimator::means: return "means";
    }
    return "?";
}

double csb(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    require_same_kind(v1, v2);
    return centered_cross_sum(v1.unit_moments(), v2.unit_moments());
}

CovReport cov_bg(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    require_same_kind(v1, v2);
    const double between = centered_cross_sum(v1.unit_moments(), v2.unit_moments());
    return make_report(v1, v2, Estimator::bg, 0.0, between);
}

double cov_of_means(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    return centered_cross_sum(v1.unit_moments(), v2.unit_moments()) /
           static_cast<double>(v1.size());
}

CovReport cov_means_report(const SymbolicVariable& v1, const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    const double between = centered_cross_sum(v1.unit_moments(), v2.unit_moments());
    return make_report(v1, v2, Estimator::means, 0.0, between);
}

double interval_cst_centered_form(const SymbolicVariable& v1,
                                  const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    require_kind(v1, CellKind::interval, "centered interval cst");
    require_kind(v2, CellKind::interval, "centered interval cst");
    const double mean1 = symbolic_mean(v1);
    const double mean2 = symbolic_mean(v2);
    CompensatedSum s;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const auto& x = std::get<Interval>(v1.cell(i));
        const auto& y = std::get<Interval>(v2.cell(i));
        const double da1 = x.lower() - mean1;
        const double db1 = x.upper() - mean1;
        const double da2 = y.lower() - mean2;
        const double db2 = y.upper() - mean2;
        s.add(2.0 * db1 * db2 + db1 * da2 + da1 * db2 + 2.0 * da1 * da2);
    }
    return s.value() / 6.0;
}

CovReport cov_billard_interval(const SymbolicVariable& v1,
                               const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    require_kind(v1, CellKind::interval, "cov_billard_interval");
    require_kind(v2, CellKind::interval, "cov_billard_interval");

    CompensatedSum within;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const auto& x = std::get<Interval>(v1.cell(i));
        const auto& y = std::get<Interval>(v2.cell(i));
        within.add(x.width() * y.width() / 12.0);
    }
    const double between = centered_cross_sum(v1.unit_moments(), v2.unit_moments());
    CovReport r = make_report(v1, v2, Estimator::billard, within.value(), between);

    const double centered = interval_cst_centered_form(v1, v2);
    if (!close_relative(r.cst, centered, 1e-9)) {
        throw std::logic_error(
            "interval cst routes disagree: " + std::to_string(r.cst) + " vs " +
            std::to_string(centered));
    }
    return r;
}

namespace detail {

double billard_histogram_cst_direct(const SymbolicVariable& v1,
                                    const SymbolicVariable& v2) {
    const double mean1 = symbolic_mean(v1);
    const double mean2 = symbolic_mean(v2);
    CompensatedSum total;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const auto& h1 = std::get<Histogram>(v1.cell(i));
        const auto& h2 = std::get<Histogram>(v2.cell(i));
        for (const auto& b1 : h1.bins()) {
            const double da1 = b1.interval.lower() - mean1;
            const double db1 = b1.interval.upper() - mean1;
            for (const auto& b2 : h2.bins()) {
                const double da2 = b2.interval.lower() - mean2;
                const double db2 = b2.interval.upper() - mean2;
                total.add((2.0 * db1 * db2 + db1 * da2 + da1 * db2 +
                           2.0 * da1 * da2) *
                          b1.weight * b2.weight);
            }
        }
    }
    return total.value() / 6.0;
}

double billard_histogram_cst_factored(const SymbolicVariable& v1,
                                      const SymbolicVariable& v2) {
    const double mean1 = symbolic_mean(v1);
    const double mean2 = symbolic_mean(v2);
    CompensatedSum total;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const auto& h1 = std::get<Histogram>(v1.cell(i));
        const auto& h2 = std::get<Histogram>(v2.cell(i));
        CompensatedSum a1, b1, a2, b2;
        for (const auto& bin : h1.bins()) {
            a1.add(bin.weight * (bin.interval.lower() - mean1));
            b1.add(bin.weight * (bin.interval.upper() - mean1));
        }
        for (const auto& bin : h2.bins()) {
            a2.add(bin.weight * (bin.interval.lower() - mean2));
            b2.add(bin.weight * (bin.interval.upper() - mean2));
        }
        const double wa1 = a1.value(), wb1 = b1.value();
        const double wa2 = a2.value(), wb2 = b2.value();
        total.add(2.0 * wb1 * wb2 + wb1 * wa2 + wa1 * wb2 + 2.0 * wa1 * wa2);
    }
    return total.value() / 6.0;
}

} // namespace detail

CovReport cov_billard_histogram(const SymbolicVariable& v1,
                                const SymbolicVariable& v2) {
    require_same_n(v1, v2);
    require_kind(v1, CellKind::histogram, "cov_billard_histogram");
    require_kind(v2, CellKind::histogram, "cov_billard_histogram");

    // The factored route is the same sum reassociated per unit; switch to it
    // only when the bin-pair count makes the direct route impractical.
    std::size_t products = 0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        products += std::get<Histogram>(v1.cell(i)).size() *
                    std::get<Histogram>(v2.cell(i)).size();
    }
    const double cst = products <= 4'000'000
                           ? detail::billard_histogram_cst_direct(v1, v2)
                           : detail::billard_histogram_cst_factored(v1, v2);

    const double between = centered_cross_sum(v1.unit_moments(), v2.unit_moments());
    CovReport r;
    r.n = v1.size();
    r.estimator = Estimator::billard;
    r.cst = cst;
    r.csb = between;
    r.csw = cst - between; // no per-unit within form exists for histograms
    r.covariance = cst / static_cast<double>(r.n);
    r.correlation = correlation_of(v1, v2, r.covariance);
    return r;
}

CovReport covariance(const SymbolicVariable& v1, const SymbolicVariable& v2,
                     Estimator e) {
    switch (e) {
    case Estimator::bg:
        return cov_bg(v1, v2);
    case Estimator::means:
        return cov_means_report(v1, v2);
    case Estimator::billard:
        require_same_n(v1, v2);
        require_same_kind(v1, v2);
        return v1.kind() == CellKind::interval ? cov_billard_interval(v1, v2)
                                               : cov_billard_histogram(v1, v2);
    }
    throw std::logic_error("unreachable estimator");
}

} // namespace symstats
