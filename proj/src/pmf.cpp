#include "parkfn/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace parkfn {

void DiscretePMF::validate(double tol) const {
    if (support.size() != prob.size())
        throw std::invalid_argument("support/prob size mismatch");
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        if (support[i] >= support[i + 1])
            throw std::invalid_argument("support labels must be strictly increasing");
    for (double p : prob)
        if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
    if (std::fabs(total() - 1.0) > tol)
        throw std::invalid_argument("probabilities do not sum to 1");
}

double DiscretePMF::total() const {
    double s = 0.0;
    for (double p : prob) s += p;
    return s;
}

double DiscretePMF::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < prob.size(); ++i)
        m += static_cast<double>(support[i]) * prob[i];
    return m;
}

double DiscretePMF::variance() const {
    const double m = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < prob.size(); ++i) {
        const double d = static_cast<double>(support[i]) - m;
        v += d * d * prob[i];
    }
    return v;
}

double DiscretePMF::at(std::int64_t value) const {
    const auto it = std::lower_bound(support.begin(), support.end(), value);
    if (it == support.end() || *it != value) return 0.0;
    return prob[static_cast<std::size_t>(it - support.begin())];
}

std::string DiscretePMF::to_csv() const {
    std::string out;
    char line[64];
    for (std::size_t i = 0; i < support.size(); ++i) {
        std::snprintf(line, sizeof line, "%lld,%.17g\n", static_cast<long long>(support[i]), prob[i]);
        out += line;
    }
    return out;
}

DiscretePMF DiscretePMF::from_counts(const std::map<std::int64_t, std::uint64_t>& counts,
                                     std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("empty sample");
    DiscretePMF pmf;
    pmf.support.reserve(counts.size());
    pmf.prob.reserve(counts.size());
    for (const auto& [value, count] : counts) {
        pmf.support.push_back(value);
        pmf.prob.push_back(static_cast<double>(count) / static_cast<double>(total));
    }
    return pmf;
}

double tv_distance(const DiscretePMF& p, const DiscretePMF& r) {
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    while (i < p.support.size() || j < r.support.size()) {
        if (j == r.support.size() || (i < p.support.size() && p.support[i] < r.support[j])) {
            acc += p.prob[i];
            ++i;
        } else if (i == p.support.size() || r.support[j] < p.support[i]) {
            acc += r.prob[j];
            ++j;
        } else {
            acc += std::fabs(p.prob[i] - r.prob[j]);
            ++i;
            ++j;
        }
    }
    return 0.5 * acc;
}

}  // namespace parkfn
