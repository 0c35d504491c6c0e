#include "parkfn/exact_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parkfn/mallows.hpp"
#include "parkfn/qseries.hpp"

namespace parkfn {

namespace {

void check_k(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1..n]");
}

// expm1(a)/expm1(b) for a, b of the same sign, b dominating.
double expm1_ratio(double a, double b) {
    if (a == 0.0) return 0.0;
    if (b > 700.0)  // expm1(b) overflows; go through logs
        return std::exp(qseries::log_abs_expm1(a) - qseries::log_abs_expm1(b));
    return std::expm1(a) / std::expm1(b);
}

}  // namespace

double pi1_pmf(std::int64_t n, double q, std::int64_t k) {
    check_k(n, k);
    const double L = qseries::log_q(q);
    const double kk = static_cast<double>(k - 1);
    double acc = 0.0;
    for (std::int64_t j = n; j >= k; --j)
        acc += std::exp(kk * L - qseries::log_q_integer(j, q));
    return acc / static_cast<double>(n);
}

double pi1_cdf(std::int64_t n, double q, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("k out of [0..n]");
    if (k == 0) return 0.0;
    if (k == n) return 1.0;
    const double nd = static_cast<double>(n);
    const double L = qseries::log_q(q);
    double tail = 0.0;
    if (L == 0.0) {
        for (std::int64_t j = k + 1; j <= n; ++j)
            tail += static_cast<double>(k) / static_cast<double>(j);
    } else {
        const double a = static_cast<double>(k) * L;
        for (std::int64_t j = k + 1; j <= n; ++j)
            tail += expm1_ratio(a, static_cast<double>(j) * L);
    }
    return static_cast<double>(k) / nd + tail / nd;
}

double pi1_survival(std::int64_t n, double q, std::int64_t k) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("k out of [1..n+1]");
    if (k == n + 1) return 0.0;
    return 1.0 - pi1_cdf(n, q, k - 1);
}

double pi1_mean(std::int64_t n, double q) {
    // pi_1 is a uniformly chosen Lehmer entry, so its mean is the average
    // of the n truncated-geometric means; equivalently 1 + E I_n / n.
    return 1.0 + expected_inversions(n, q) / static_cast<double>(n);
}

DiscretePMF pi1_pmf_table(std::int64_t n, double q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double L = qseries::log_q(q);
    std::vector<double> lqi(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t j = 1; j <= n; ++j)
        lqi[static_cast<std::size_t>(j)] = qseries::log_q_integer(j, q);
    // P(k) = exp((k-1)L - lqi[k]) * S(k) / n with
    // S(k) = sum_{j>=k} exp(lqi[k]-lqi[j]) built by backward recurrence;
    // every factor stays in [0,1] for any q.
    DiscretePMF pmf;
    pmf.support.resize(static_cast<std::size_t>(n));
    pmf.prob.resize(static_cast<std::size_t>(n));
    double s = 0.0;  // S(k+1) while processing k
    for (std::int64_t k = n; k >= 1; --k) {
        const double ratio =
            (k == n) ? 0.0
                     : std::exp(lqi[static_cast<std::size_t>(k)] - lqi[static_cast<std::size_t>(k) + 1]);
        s = 1.0 + ratio * s;
        const double head = std::exp(static_cast<double>(k - 1) * L - lqi[static_cast<std::size_t>(k)]);
        pmf.support[static_cast<std::size_t>(k) - 1] = k;
        pmf.prob[static_cast<std::size_t>(k) - 1] = head * s / static_cast<double>(n);
    }
    return pmf;
}

std::vector<double> nk_bernoulli_params(std::int64_t n, double q, std::int64_t k) {
    check_k(n, k);
    const double L = qseries::log_q(q);
    const double kk = static_cast<double>(k - 1);
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(n - k + 1));
    for (std::int64_t j = k; j <= n; ++j)
        p.push_back(std::exp(kk * L - qseries::log_q_integer(j, q)));
    return p;
}

DiscretePMF poisson_binomial_pmf(std::span<const double> p, double tail_eps) {
    double mu = 0.0;
    for (double pi : p) {
        if (!(pi >= 0.0 && pi <= 1.0)) throw std::invalid_argument("Bernoulli parameter out of [0,1]");
        mu += pi;
    }
    // Chernoff cap: P(X >= m) <= e^{-mu} (e mu / m)^m for m > mu.
    std::size_t cap = p.size();
    if (!p.empty() && mu > 0.0) {
        std::size_t m = static_cast<std::size_t>(mu) + 1;
        const double log_eps = std::log(tail_eps);
        while (m < p.size()) {
            const double md = static_cast<double>(m);
            if (md * (1.0 + std::log(mu) - std::log(md)) - mu <= log_eps) break;
            ++m;
        }
        cap = m;
    }
    std::vector<double> f(cap + 1, 0.0);
    f[0] = 1.0;
    std::size_t hi = 0;
    for (double pi : p) {
        hi = std::min(hi + 1, cap);
        for (std::size_t m = hi; m >= 1; --m) f[m] = f[m] * (1.0 - pi) + f[m - 1] * pi;
        f[0] *= 1.0 - pi;
    }
    double total = 0.0;
    for (double v : f) total += v;
    DiscretePMF pmf;
    pmf.support.resize(f.size());
    pmf.prob.resize(f.size());
    for (std::size_t m = 0; m < f.size(); ++m) {
        pmf.support[m] = static_cast<std::int64_t>(m);
        pmf.prob[m] = f[m] / total;
    }
    return pmf;
}

DiscretePMF nk_pmf(std::int64_t n, double q, std::int64_t k) {
    const std::vector<double> p = nk_bernoulli_params(n, q, k);
    return poisson_binomial_pmf(std::span<const double>(p.data(), p.size()));
}

double nk_laplace(std::int64_t n, double q, std::int64_t k, double t) {
    check_k(n, k);
    if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
    const double w = -std::expm1(-t);  // 1 - e^{-t}
    double log_acc = 0.0;
    for (double pj : nk_bernoulli_params(n, q, k)) log_acc += std::log1p(-pj * w);
    return std::exp(log_acc);
}

DominanceResult dominance_check(std::int64_t n, double q_lo, double q_hi) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!(0.0 < q_lo && q_lo < q_hi))
        throw std::invalid_argument("need 0 < q_lo < q_hi");
    for (std::int64_t k = 2; k <= n; ++k) {
        if (!(pi1_survival(n, q_lo, k) < pi1_survival(n, q_hi, k)))
            return {false, k};
    }
    return {true, 0};
}

}  // namespace parkfn
