#include "parkfn/tv_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parkfn/limit_laws.hpp"

namespace parkfn {

double limit_unif_N1_pmf(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    double log_fact = 0.0;
    for (std::int64_t i = 2; i < m; ++i) log_fact += std::log(static_cast<double>(i));
    return std::exp(-1.0 - log_fact);
}

double limit_q_N1_pmf(double q, std::int64_t m, double tol) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return law_Zsum(q, 1, tol).pmf.at(m);
}

double limit_q_Nn_one(double q) {
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    return (q - 1.0) / q;
}

namespace {

void check_spec(const BoundSpec& spec) {
    if (spec.event_set.empty()) throw std::invalid_argument("event set must be nonempty");
    for (int m : spec.event_set)
        if (m < 1 || m > 4) throw std::invalid_argument("event set must lie in {1,2,3,4}");
}

}  // namespace

double lower_bound(double q, const BoundSpec& spec) {
    check_spec(spec);
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    const TruncatedPMF zsum = law_Zsum(q, 1, spec.tol);
    double tilted = 0.0, uniform = 0.0;
    for (int m : spec.event_set) {
        tilted += zsum.pmf.at(m);
        uniform += limit_unif_N1_pmf(m);
    }
    double bound = std::fabs(tilted - uniform);
    if (spec.include_top_count)
        bound = std::max(bound, std::fabs(limit_q_Nn_one(q) - std::exp(-1.0)));
    return bound;
}

BoundOptimum minimize_bound(const BoundSpec& spec, double q_lo, double q_hi, double grid_step) {
    check_spec(spec);
    if (!(1.0 < q_lo && q_lo < q_hi)) throw std::invalid_argument("need 1 < q_lo < q_hi");
    if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");

    double best_q = q_lo;
    double best_v = lower_bound(q_lo, spec);
    for (double q = q_lo + grid_step; q < q_hi + grid_step / 2; q += grid_step) {
        const double qq = std::min(q, q_hi);
        const double v = lower_bound(qq, spec);
        if (v < best_v) {
            best_v = v;
            best_q = qq;
        }
    }

    // golden-section on the winning cell; robust against the kinks of a
    // max of absolute values
    double a = std::max(q_lo, best_q - grid_step);
    double b = std::min(q_hi, best_q + grid_step);
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = lower_bound(x1, spec);
    double f2 = lower_bound(x2, spec);
    while (b - a > 1e-6) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = lower_bound(x1, spec);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = lower_bound(x2, spec);
        }
    }
    const double q_star = 0.5 * (a + b);
    const double v_star = lower_bound(q_star, spec);
    if (v_star <= best_v) return {q_star, v_star};
    return {best_q, best_v};
}

std::vector<SubsetScanRow> scan_event_subsets(double q_lo, double q_hi, bool include_top_count,
                                              double grid_step) {
    std::vector<SubsetScanRow> rows;
    for (int mask = 1; mask < 16; ++mask) {
        BoundSpec spec;
        spec.event_set.clear();
        for (int m = 1; m <= 4; ++m)
            if (mask & (1 << (m - 1))) spec.event_set.push_back(m);
        spec.include_top_count = include_top_count;
        rows.push_back({spec.event_set, minimize_bound(spec, q_lo, q_hi, grid_step)});
    }
    return rows;
}

SubsetScanRow best_event_subset(double q_lo, double q_hi, bool include_top_count,
                                double grid_step) {
    const std::vector<SubsetScanRow> rows = scan_event_subsets(q_lo, q_hi, include_top_count, grid_step);
    return *std::max_element(rows.begin(), rows.end(),
                             [](const SubsetScanRow& a, const SubsetScanRow& b) {
                                 return a.optimum.value < b.optimum.value;
                             });
}

}  // namespace parkfn
