#include "parkfn/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace parkfn::qseries {

namespace {

void require_positive_q(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
}

}  // namespace

double log_q(double q) {
    require_positive_q(q);
    return std::log1p(q - 1.0);
}

double log_abs_expm1(double x) {
    if (x > 36.0) return x + std::log1p(-std::exp(-x));  // expm1 may overflow
    return std::log(std::fabs(std::expm1(x)));
}

double one_minus_qpow(std::int64_t j, double q) {
    require_positive_q(q);
    return -std::expm1(static_cast<double>(j) * log_q(q));
}

double trunc_geom_head(std::int64_t j, double q) {
    require_positive_q(q);
    if (j < 1) throw std::invalid_argument("support size must be >= 1");
    const double t = q - 1.0;
    const double jd = static_cast<double>(j);
    if (std::fabs(t) * jd < 1e-8) {
        return 1.0 / (jd * (1.0 + 0.5 * (jd - 1.0) * t));
    }
    return t / std::expm1(jd * log_q(q));
}

double log_q_integer(std::int64_t j, double q) {
    require_positive_q(q);
    if (j < 1) throw std::invalid_argument("q-integer index must be >= 1");
    const double t = q - 1.0;
    const double jd = static_cast<double>(j);
    if (std::fabs(t) * jd < 1e-8) {
        // [j]_q = j + t j(j-1)/2 + O(t^2 j^3)
        return std::log(jd) + 0.5 * (jd - 1.0) * t;
    }
    const double L = log_q(q);
    return log_abs_expm1(jd * L) - log_abs_expm1(L);
}

double trunc_geom_pmf(std::int64_t i, std::int64_t j, double q) {
    if (i < 1 || i > j) return 0.0;
    // q^{i-1} / [j]_q, one expression for q < 1, = 1, > 1 alike.
    return std::exp(static_cast<double>(i - 1) * log_q(q) - log_q_integer(j, q));
}

double trunc_geom_mean(std::int64_t j, double q) {
    require_positive_q(q);
    if (j < 1) throw std::invalid_argument("support size must be >= 1");
    if (j == 1) return 1.0;
    const double t = q - 1.0;
    const double jd = static_cast<double>(j);
    const double L = log_q(q);
    const double x = jd * L;
    if (std::fabs(x) < 1e-3) {
        const double j2 = jd * jd;
        return 0.5 * (jd + 1.0) + (j2 - 1.0) * L / 12.0
               - (j2 * j2 - 1.0) * L * L * L / 720.0;
    }
    // E X = j + j/expm1(jL) - 1/t; the t in the last term is expm1(L) exactly.
    double mid = 0.0;
    if (x < 700.0) mid = jd / std::expm1(x);  // else q^j has overflowed: term ~ j e^{-jL} ~ 0
    return jd + mid - 1.0 / t;
}

}  // namespace parkfn::qseries
