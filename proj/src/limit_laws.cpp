#include "parkfn/limit_laws.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "parkfn/exact_laws.hpp"
#include "parkfn/qseries.hpp"

namespace parkfn {

namespace {

void check_unit_interval(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("x must lie in [0,1]");
}

// log((1 - e^{-c}) / (1 - e^{-cx})), valid for either sign of c.
double log_ratio_expm1(double c, double x) {
    return qseries::log_abs_expm1(-c) - qseries::log_abs_expm1(-c * x);
}

}  // namespace

double law_q1_cdf(double x) {
    check_unit_interval(x);
    if (x == 0.0) return 0.0;
    return x - x * std::log(x);
}

ContinuousLaw law_q1() {
    ContinuousLaw law;
    law.name = "q1";
    law.lo = 0.0;
    law.hi = 1.0;
    law.cdf = [](double x) { return law_q1_cdf(x); };
    law.density = [](double x) { return -std::log(x); };
    return law;
}

double law_Fc_cdf(double x, double c) {
    check_unit_interval(x);
    if (c == 0.0) return law_q1_cdf(x);
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    return x + std::expm1(c * x) / c * log_ratio_expm1(c, x);
}

ContinuousLaw law_Fc(double c) {
    if (c == 0.0) return law_q1();
    ContinuousLaw law;
    law.name = "Fc(c=" + std::to_string(c) + ")";
    law.lo = 0.0;
    law.hi = 1.0;
    law.cdf = [c](double x) { return law_Fc_cdf(x, c); };
    law.density = [c](double x) { return law_fc_density(x, c); };
    return law;
}

double law_fc_density(double x, double c) {
    if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("x must lie in (0,1]");
    if (c == 0.0) return -std::log(x);
    return std::exp(c * x) * log_ratio_expm1(c, x);
}

double law_exponential_cdf(double x, double c) {
    if (!(x >= 0.0)) throw std::domain_error("x must be >= 0");
    if (!(c > 0.0)) throw std::invalid_argument("rate must be positive");
    return -std::expm1(-c * x);
}

ContinuousLaw law_exponential(double c) {
    ContinuousLaw law;
    law.name = "exponential(c=" + std::to_string(c) + ")";
    law.lo = 0.0;
    law.hi = std::numeric_limits<double>::infinity();
    law.cdf = [c](double x) { return law_exponential_cdf(x, c); };
    law.density = [c](double x) { return c * std::exp(-c * x); };
    return law;
}

ContinuousLaw law_uniform01() {
    ContinuousLaw law;
    law.name = "uniform01";
    law.lo = 0.0;
    law.hi = 1.0;
    law.cdf = [](double x) { return std::min(1.0, std::max(0.0, x)); };
    law.density = [](double) { return 1.0; };
    return law;
}

double law_geometric_pmf(std::int64_t k, double q) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    return (1.0 - q) * std::pow(q, static_cast<double>(k - 1));
}

double corner_upper_q(std::int64_t n, double q, std::int64_t k) {
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    if (k < 0 || k >= n) throw std::invalid_argument("k out of [0..n)");
    return -std::expm1(-static_cast<double>(k + 1) * std::log(q)) / static_cast<double>(n);
}

double lambda_c(double c, double d) {
    if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("d must lie in (0,1)");
    if (c == 0.0) return -std::log(d);
    return law_fc_density(d, c);
}

TruncatedPMF law_Zsum(double q, std::int64_t k, double tol) {
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    // p_j = (q-1) q^{k-1} / (q^j - 1) = q^{k-1} / [j]_q for j >= k; the
    // remainder past j satisfies sum_{j'>j} p_{j'} <= q^{k-1-j}/(1-q^{-(j+1)}).
    std::vector<double> p;
    std::int64_t j = k;
    double tail = 0.0;
    while (true) {
        tail = std::exp(static_cast<double>(k - 1 - j) * std::log(q)) /
               -std::expm1(-static_cast<double>(j + 1) * std::log(q));
        if (tail < tol / 10.0 && !p.empty()) break;
        p.push_back(std::exp(static_cast<double>(k - 1) * std::log(q) -
                             qseries::log_q_integer(j, q)));
        ++j;
        if (j > k + 100000) throw std::runtime_error("law_Zsum failed to reach tolerance");
    }
    TruncatedPMF out;
    out.pmf = poisson_binomial_pmf(std::span<const double>(p.data(), p.size()), tol / 10.0);
    out.tail = TailBound{j - 1, tail};
    return out;
}

TruncatedPMF law_Ysum(double q, std::optional<std::int64_t> kmax, double tol) {
    if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    std::vector<double> p;
    TailBound tail{0, 0.0};
    if (kmax.has_value()) {
        if (*kmax < 0) throw std::invalid_argument("kmax must be >= 0");
        for (std::int64_t i = 0; i <= *kmax; ++i)
            p.push_back((q - 1.0) * std::exp(-static_cast<double>(i + 1) * std::log(q)));
        tail.truncation_index = *kmax;
    } else {
        // sum_{i>M} (q-1) q^{-(i+1)} = q^{-(M+1)}
        std::int64_t i = 0;
        double bound = 1.0;
        while (true) {
            bound = std::exp(-static_cast<double>(i + 1) * std::log(q));
            if (bound < tol / 10.0 && i > 0) break;
            p.push_back((q - 1.0) * std::exp(-static_cast<double>(i + 1) * std::log(q)));
            ++i;
            if (i > 100000) throw std::runtime_error("law_Ysum failed to reach tolerance");
        }
        tail = TailBound{i - 1, bound};
    }
    TruncatedPMF out;
    out.pmf = poisson_binomial_pmf(std::span<const double>(p.data(), p.size()),
                                   kmax.has_value() ? 0.0 : tol / 10.0);
    out.tail = tail;
    return out;
}

double borel_pmf(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const double jd = static_cast<double>(j);
    return std::exp(-jd + (jd - 1.0) * std::log(jd) - std::lgamma(jd + 1.0));
}

double dh_corner(std::int64_t k, CornerSide side) {
    if (side == CornerSide::low) {
        if (k < 1) throw std::invalid_argument("k must be >= 1 on the low side");
        double below = 0.0;  // P(X < k)
        for (std::int64_t j = 1; j < k; ++j) below += borel_pmf(j);
        return 1.0 + (1.0 - below);
    }
    if (k < 0) throw std::invalid_argument("k must be >= 0 on the high side");
    double cum = 0.0;  // P(X <= k+1)
    for (std::int64_t j = 1; j <= k + 1; ++j) cum += borel_pmf(j);
    return cum;
}

DiscretePMF poisson_pmf(double lambda, double tail_eps) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
    DiscretePMF pmf;
    double term = std::exp(-lambda);  // P(0)
    double cum = 0.0;
    std::int64_t m = 0;
    while (true) {
        pmf.support.push_back(m);
        pmf.prob.push_back(term);
        cum += term;
        if (1.0 - cum < tail_eps && static_cast<double>(m) > lambda) break;
        ++m;
        term *= lambda / static_cast<double>(m);
        if (m > 1000000) break;
    }
    return pmf;
}

DiscretePMF geometric_pmf_table(double q, double tail_eps) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    DiscretePMF pmf;
    double term = 1.0 - q;
    double cum = 0.0;
    std::int64_t k = 1;
    while (cum < 1.0 - tail_eps) {
        pmf.support.push_back(k);
        pmf.prob.push_back(term);
        cum += term;
        term *= q;
        ++k;
    }
    return pmf;
}

}  // namespace parkfn
