#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parkfn/perm.hpp"
#include "parkfn/rng.hpp"

namespace parkfn {

struct TruncGeomParams {
    std::int64_t j;  // support {1..j}
    double q;        // > 0
};

// Rule selecting the tilt parameter as a function of n.  Accepted string
// forms (the leading "q=" is optional):
//   "0.5"                     fixed q
//   "1+c/n:c=2", "1-c/n:c=2"  q_n = 1 +- c/n
//   "1+c/n^a:c=1,a=0.5"       q_n = 1 +- c/n^a, a in (0,1)
class QSchedule {
  public:
    enum class Kind { fixed, one_plus_c_over_n, one_plus_c_over_n_alpha };

    static QSchedule fixed(double q);
    static QSchedule one_plus_c_over_n(double c);
    static QSchedule one_plus_c_over_n_alpha(double c, double alpha);
    static QSchedule parse(std::string_view text);

    // q_n; throws if the schedule is not positive at this n.
    double evaluate(std::int64_t n) const;

    Kind kind() const { return kind_; }
    std::string describe() const;

  private:
    QSchedule(Kind kind, double param, double alpha) : kind_(kind), param_(param), alpha_(alpha) {}

    Kind kind_;
    double param_;  // fixed q, or c
    double alpha_ = 0.0;
};

// Sum over all permutations of q^{inversions}; the q-factorial
// prod_{j=1..n} (1 + q + ... + q^{j-1}).  Throws std::overflow_error once
// the value leaves double range; use the log form beyond that.
double q_normalizer(std::int64_t n, double q);
double log_q_normalizer(std::int64_t n, double q);

// q^{inversions(sigma)} / q_normalizer.
double mallows_pmf(const Permutation& sigma, double q);
double log_mallows_pmf(const Permutation& sigma, double q);

// One draw from the truncated geometric on {1..j}, mass ~ q^{i-1}.
// Closed-form CDF inversion, O(1).
std::int64_t sample_trunc_geom(TruncGeomParams params, RandomStream& rng);

// Per-j constants for tight sampling loops (fixed q, j up to n).
class TruncGeomSampler {
  public:
    TruncGeomSampler(std::int64_t n, double q);

    std::int64_t draw(std::int64_t j, RandomStream& rng) const;

    std::int64_t n() const { return static_cast<std::int64_t>(one_minus_qpow_.size()) - 1; }
    double q() const { return q_; }

  private:
    double q_;
    double inv_log_q_;                   // 0 marks the uniform (q = 1) branch
    std::vector<double> one_minus_qpow_;  // [j] = 1 - q^j
};

// Exact Mallows draw: independent truncated-geometric Lehmer entries,
// decoded.  O(n log n).
Permutation sample_mallows(std::int64_t n, double q, RandomStream& rng);

// The Lehmer code of a Mallows draw, without decoding.
LehmerCode sample_mallows_code(std::int64_t n, double q, RandomStream& rng);

// Fisher-Yates.
Permutation sample_uniform_permutation(std::int64_t n, RandomStream& rng);

// Exact expected inversion count under the Mallows law; n(n-1)/4 at q = 1.
double expected_inversions(std::int64_t n, double q);

}  // namespace parkfn
