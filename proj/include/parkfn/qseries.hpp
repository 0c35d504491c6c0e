#pragma once

#include <cstdint>

// Stable evaluation of the q-series primitives shared by the Mallows
// machinery and the exact laws.  Everything funnels through t = q - 1 and
// expm1/log1p so that the tilt parameter may sit within 1e-9 of 1 (the
// q = 1 +- c/n regimes) without catastrophic cancellation.

namespace parkfn::qseries {

// log q, exact for q near 1.
double log_q(double q);

// log |expm1(x)|, safe against overflow for large positive x.
double log_abs_expm1(double x);

// 1 - q^j.  Zero at q = 1, negative for q > 1.
double one_minus_qpow(std::int64_t j, double q);

// (1 - q) / (1 - q^j): mass scale of the length-j truncated geometric.
// Equals 1/j at q = 1; the |q-1|*j < 1e-8 branch uses the first-order
// expansion 1/(j*(1 + (j-1)t/2)) to bridge the 0/0 at t = 0.
double trunc_geom_head(std::int64_t j, double q);

// log(1 + q + ... + q^{j-1}), the log of the q-integer [j]_q.
// Equals log j at q = 1.
double log_q_integer(std::int64_t j, double q);

// P(X = i) for X truncated-geometric on {1..j}: q^{i-1} (1-q)/(1-q^j),
// uniform 1/j at q = 1.
double trunc_geom_pmf(std::int64_t i, std::int64_t j, double q);

// E X for the law above, i.e. 1 + [ q/(1-q) - j q^j/(1-q^j) ].
// The bracket suffers total cancellation near q = 1 (both terms blow up
// like 1/t); for |j log q| < 1e-3 we use the Bernoulli-number expansion
//   j/expm1(jL) - 1/expm1(L) = -(j-1)/2 + (j^2-1)L/12 - (j^4-1)L^3/720 + ...
// with L = log q.
double trunc_geom_mean(std::int64_t j, double q);

}  // namespace parkfn::qseries
