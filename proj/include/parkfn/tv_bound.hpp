#pragma once

#include <cstdint>
#include <vector>

// Lower bounds on the limiting total-variation distance between the tilted
// (q > 1) and uniform parking-function measures, built from the limiting
// laws of the count of 1 and the count of the top value.

namespace parkfn {

// Limiting law of the count of 1 under the uniform measure: 1 + Poisson(1),
// so P(count = m) = e^{-1}/(m-1)!.
double limit_unif_N1_pmf(std::int64_t m);

// Limiting P(count of 1 = m) under the tilt q > 1 (the Bernoulli-sum law
// with first indicator a.s. 1).
double limit_q_N1_pmf(double q, std::int64_t m, double tol = 1e-12);

// Limiting P(count of the top value = 1) under the tilt q > 1: (q-1)/q.
// Under the uniform measure the same limit is 1/e.
double limit_q_Nn_one(double q);

struct BoundSpec {
    std::vector<int> event_set{2};   // nonempty subset of {1,2,3,4}
    bool include_top_count = true;   // add the |{count of n} = 1| comparison
    double tol = 1e-12;
};

// max over the spec's comparisons of |limit under the tilt - limit under
// uniform|; a valid lower bound on lim TV for this q.
double lower_bound(double q, const BoundSpec& spec);

struct BoundOptimum {
    double q_star = 0.0;
    double value = 0.0;
};

// Grid scan (default step 1e-3) followed by golden-section refinement to
// 1e-6 in q.  The objective is a max of absolute values, so the scan comes
// first and the derivative-free refinement only polishes the winning cell.
BoundOptimum minimize_bound(const BoundSpec& spec, double q_lo, double q_hi,
                            double grid_step = 1e-3);

struct SubsetScanRow {
    std::vector<int> event_set;
    BoundOptimum optimum;
};

// minimize_bound for every nonempty subset of {1,2,3,4}.
std::vector<SubsetScanRow> scan_event_subsets(double q_lo, double q_hi, bool include_top_count,
                                              double grid_step = 1e-3);

// The subset whose minimized bound is LARGEST, i.e. the one that yields
// the sharpest lower bound on inf_q lim TV.
SubsetScanRow best_event_subset(double q_lo, double q_hi, bool include_top_count,
                                double grid_step = 1e-3);

}  // namespace parkfn
