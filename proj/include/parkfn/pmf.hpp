#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parkfn {

// Finite probability vector with integer support labels.  Carrier for
// exact laws, empirical laws and truncated limit laws alike.
struct DiscretePMF {
    std::vector<std::int64_t> support;  // strictly increasing
    std::vector<double> prob;           // nonnegative, sums to ~1

    // Throws if support is not strictly increasing, a mass is negative, or
    // the total differs from 1 by more than tol.
    void validate(double tol = 1e-10) const;

    double total() const;
    double mean() const;
    double variance() const;

    // Mass at a support value; 0 when absent.
    double at(std::int64_t value) const;

    // CSV rows "support,prob", one per line.
    std::string to_csv() const;

    static DiscretePMF from_counts(const std::map<std::int64_t, std::uint64_t>& counts,
                                   std::uint64_t total);
};

// Certificate attached to a truncated infinite sum/product: everything
// past truncation_index contributes at most `bound` in total variation.
struct TailBound {
    std::int64_t truncation_index = 0;
    double bound = 0.0;
};

struct TruncatedPMF {
    DiscretePMF pmf;
    TailBound tail;
};

// Half the l1 distance over the union support.
double tv_distance(const DiscretePMF& p, const DiscretePMF& r);

}  // namespace parkfn
