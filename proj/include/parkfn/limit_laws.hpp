#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "parkfn/pmf.hpp"

// Closed-form limiting laws of the first coordinate and the value counts,
// plus the Borel-law comparators for the uniform measure.

namespace parkfn {

struct ContinuousLaw {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;  // may be +inf
    std::function<double(double)> cdf;
    std::function<double(double)> density;  // empty when not supplied
};

// CDF x - x log x on [0,1] (density -log x); the q = 1 limit of pi_1/n.
double law_q1_cdf(double x);
ContinuousLaw law_q1();

// Limit CDF of pi_1/n under q = 1 + c/n, c != 0:
//   F_c(x) = x + (1/c)(e^{cx}-1) log((1-e^{-c})/(1-e^{-cx}))
// (one expression covers both signs of c when the log-ratio is evaluated
// as a difference of log|expm1| terms).  c = 0 falls back to law_q1.
double law_Fc_cdf(double x, double c);
ContinuousLaw law_Fc(double c);

// Its density e^{cx} log((1-e^{-c})/(1-e^{-cx})) on (0,1]; monotone
// decreasing, logarithmic blow-up at 0.
double law_fc_density(double x, double c);

// 1 - e^{-cx} on [0, inf).
double law_exponential_cdf(double x, double c);
ContinuousLaw law_exponential(double c);

ContinuousLaw law_uniform01();

// (1-q) q^{k-1}, q in (0,1), k >= 1.
double law_geometric_pmf(std::int64_t k, double q);

// Corner approximation (1/n)(1 - q^{-(k+1)}) to P(pi_1 = n-k), q > 1.
double corner_upper_q(std::int64_t n, double q, std::int64_t k);

// Poisson parameter of the count limit at k ~ d n under q = 1 + c/n;
// equals law_fc_density(d, c) for c != 0 and -log d at c = 0.
double lambda_c(double c, double d);

// Limit law of the count of a fixed value k for q > 1: sum over j >= k of
// independent Bernoulli((q-1) q^{k-1} / (q^j - 1)).  Truncated once the
// remaining mass bound (geometric, ratio 1/q) drops below tol/10; the
// certificate is attached.
TruncatedPMF law_Zsum(double q, std::int64_t k, double tol = 1e-12);

// Limit law of the count in the bulk / near the top for q > 1: sum over
// i = 0..kmax of independent Bernoulli((q-1)/q^{i+1}).  Finite kmax is
// exact (zero tail bound); kmax = nullopt means the infinite sum,
// truncated under the same rule as law_Zsum.
TruncatedPMF law_Ysum(double q, std::optional<std::int64_t> kmax, double tol = 1e-12);

// e^{-j} j^{j-1} / j! via log-gamma.
double borel_pmf(std::int64_t j);

enum class CornerSide { low, high };

// Coefficients of the uniform-measure corner asymptotics: n P(pi_1 = k) ->
// 1 + P(X >= k) (low side) and n P(pi_1 = n-k) -> P(X <= k+1) (high side),
// X Borel.
double dh_corner(std::int64_t k, CornerSide side);

// Poisson reference table, truncated where both tails are below tail_eps.
DiscretePMF poisson_pmf(double lambda, double tail_eps = 1e-12);

// Geometric on {1,2,...} with success 1-q, truncated below tail_eps.
DiscretePMF geometric_pmf_table(double q, double tail_eps = 1e-12);

}  // namespace parkfn
