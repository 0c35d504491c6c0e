#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parkfn/pmf.hpp"

// Exact finite-n laws of the first coordinate and of the value counts under
// the tilted parking-function measure.  All q-dependent factors route
// through the stable q-series evaluators.

namespace parkfn {

// P(pi_1 = k) = (1/n) sum_{j=k..n} q^{k-1} / [j]_q.
double pi1_pmf(std::int64_t n, double q, std::int64_t k);

// P(pi_1 <= k) = k/n + (1/n)(1-q^k) sum_{j=k+1..n} 1/(1-q^j)
// (k/n + (k/n) sum 1/j at q = 1).  Defined for 0 <= k <= n.
double pi1_cdf(std::int64_t n, double q, std::int64_t k);

// P(pi_1 >= k) = 1 - pi1_cdf(k-1), for 1 <= k <= n+1.
double pi1_survival(std::int64_t n, double q, std::int64_t k);

// E pi_1; equals (n+3)/4 exactly at q = 1.
double pi1_mean(std::int64_t n, double q);

// Full distribution of pi_1 on {1..n}.
DiscretePMF pi1_pmf_table(std::int64_t n, double q);

// Success probabilities of the independent indicators whose sum is
// distributed as the count of k: p_j = q^{k-1}/[j]_q for j = k..n.
std::vector<double> nk_bernoulli_params(std::int64_t n, double q, std::int64_t k);

// Law of a sum of independent Bernoulli(p_i): O(m * m_cap) dynamic
// programming with the support capped where the Chernoff tail drops below
// tail_eps, renormalized at the end.
DiscretePMF poisson_binomial_pmf(std::span<const double> p, double tail_eps = 1e-15);

// Exact law of the count of the value k.
DiscretePMF nk_pmf(std::int64_t n, double q, std::int64_t k);

// E exp(-t N_k) = prod_{j=k..n} (1 - p_j (1 - e^{-t})), t >= 0.
double nk_laplace(std::int64_t n, double q, std::int64_t k, double t);

struct DominanceResult {
    bool dominates = false;
    std::int64_t violating_k = 0;  // 0 when dominates
};

// True iff P^{(q_lo)}(pi_1 >= k) < P^{(q_hi)}(pi_1 >= k) for every k=2..n.
DominanceResult dominance_check(std::int64_t n, double q_lo, double q_hi);

}  // namespace parkfn
