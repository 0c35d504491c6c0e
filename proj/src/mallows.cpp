#include "parkfn/mallows.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parkfn/qseries.hpp"

namespace parkfn {

namespace {

constexpr double kLogDblMax = 709.0;

double parse_double(std::string_view s, std::string_view what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    }
}

}  // namespace

QSchedule QSchedule::fixed(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("fixed q must be positive");
    return QSchedule(Kind::fixed, q, 0.0);
}

QSchedule QSchedule::one_plus_c_over_n(double c) {
    return QSchedule(Kind::one_plus_c_over_n, c, 0.0);
}

QSchedule QSchedule::one_plus_c_over_n_alpha(double c, double alpha) {
    if (c == 0.0) throw std::invalid_argument("c must be nonzero for the n^alpha schedule");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    return QSchedule(Kind::one_plus_c_over_n_alpha, c, alpha);
}

QSchedule QSchedule::parse(std::string_view text) {
    std::string_view s = text;
    if (s.substr(0, 2) == "q=") s.remove_prefix(2);
    if (s.substr(0, 5) == "1+c/n" || s.substr(0, 5) == "1-c/n") {
        const double sign = (s[1] == '+') ? 1.0 : -1.0;
        const bool has_alpha = s.substr(0, 7) == (sign > 0 ? "1+c/n^a" : "1-c/n^a");
        const std::size_t colon = s.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("schedule '" + std::string(text) + "' is missing parameters");
        std::string_view params = s.substr(colon + 1);
        double c = std::numeric_limits<double>::quiet_NaN();
        double alpha = std::numeric_limits<double>::quiet_NaN();
        while (!params.empty()) {
            const std::size_t comma = params.find(',');
            std::string_view item = params.substr(0, comma);
            if (item.substr(0, 2) == "c=")
                c = parse_double(item.substr(2), "c");
            else if (item.substr(0, 2) == "a=")
                alpha = parse_double(item.substr(2), "a");
            else
                throw std::invalid_argument("unknown schedule parameter '" + std::string(item) + "'");
            if (comma == std::string_view::npos) break;
            params.remove_prefix(comma + 1);
        }
        if (std::isnan(c)) throw std::invalid_argument("schedule is missing c=");
        if (has_alpha) {
            if (std::isnan(alpha)) throw std::invalid_argument("schedule is missing a=");
            return one_plus_c_over_n_alpha(sign * c, alpha);
        }
        return one_plus_c_over_n(sign * c);
    }
    return fixed(parse_double(s, "q"));
}

double QSchedule::evaluate(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    double q = 0.0;
    switch (kind_) {
        case Kind::fixed: q = param_; break;
        case Kind::one_plus_c_over_n: q = 1.0 + param_ / static_cast<double>(n); break;
        case Kind::one_plus_c_over_n_alpha:
            q = 1.0 + param_ / std::pow(static_cast<double>(n), alpha_);
            break;
    }
    if (!(q > 0.0))
        throw std::invalid_argument("schedule " + describe() + " is not positive at n=" + std::to_string(n));
    return q;
}

std::string QSchedule::describe() const {
    switch (kind_) {
        case Kind::fixed: return "q=" + std::to_string(param_);
        case Kind::one_plus_c_over_n:
            return (param_ >= 0 ? "q=1+c/n:c=" + std::to_string(param_)
                                : "q=1-c/n:c=" + std::to_string(-param_));
        case Kind::one_plus_c_over_n_alpha:
            return (param_ >= 0 ? "q=1+c/n^a:c=" + std::to_string(param_)
                                : "q=1-c/n^a:c=" + std::to_string(-param_)) +
                   ",a=" + std::to_string(alpha_);
    }
    return {};
}

double log_q_normalizer(std::int64_t n, double q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    double acc = 0.0;
    for (std::int64_t j = 2; j <= n; ++j) acc += qseries::log_q_integer(j, q);
    return acc;
}

double q_normalizer(std::int64_t n, double q) {
    const double lg = log_q_normalizer(n, q);
    if (lg > kLogDblMax)
        throw std::overflow_error("q_normalizer exceeds double range; use log_q_normalizer");
    return std::exp(lg);
}

double log_mallows_pmf(const Permutation& sigma, double q) {
    return static_cast<double>(inversions(sigma)) * qseries::log_q(q) -
           log_q_normalizer(sigma.size(), q);
}

double mallows_pmf(const Permutation& sigma, double q) {
    return std::exp(log_mallows_pmf(sigma, q));
}

std::int64_t sample_trunc_geom(TruncGeomParams params, RandomStream& rng) {
    if (params.j < 1) throw std::invalid_argument("support size must be >= 1");
    if (!(params.q > 0.0)) throw std::invalid_argument("q must be positive");
    if (params.j == 1) return 1;
    const double u = rng.next_unit();
    if (params.q == 1.0) {
        const std::int64_t i = static_cast<std::int64_t>(std::ceil(u * static_cast<double>(params.j)));
        return std::min(std::max<std::int64_t>(i, 1), params.j);
    }
    // invert the CDF (1-q^i)/(1-q^j):  i = 1 + floor(log(1 - u(1-q^j)) / log q)
    const double L = qseries::log_q(params.q);
    const double omq = qseries::one_minus_qpow(params.j, params.q);
    const std::int64_t i = 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u * omq) / L));
    return std::min(std::max<std::int64_t>(i, 1), params.j);
}

TruncGeomSampler::TruncGeomSampler(std::int64_t n, double q) : q_(q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
    const double L = qseries::log_q(q);
    inv_log_q_ = (q == 1.0) ? 0.0 : 1.0 / L;
    one_minus_qpow_.resize(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t j = 1; j <= n; ++j)
        one_minus_qpow_[static_cast<std::size_t>(j)] = -std::expm1(static_cast<double>(j) * L);
}

std::int64_t TruncGeomSampler::draw(std::int64_t j, RandomStream& rng) const {
    const double u = rng.next_unit();
    if (inv_log_q_ == 0.0) {
        const std::int64_t i = static_cast<std::int64_t>(std::ceil(u * static_cast<double>(j)));
        return std::min(std::max<std::int64_t>(i, 1), j);
    }
    const double omq = one_minus_qpow_[static_cast<std::size_t>(j)];
    const std::int64_t i = 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u * omq) * inv_log_q_));
    return std::min(std::max<std::int64_t>(i, 1), j);
}

LehmerCode sample_mallows_code(std::int64_t n, double q, RandomStream& rng) {
    TruncGeomSampler sampler(n, q);
    std::vector<int> code(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j)
        code[static_cast<std::size_t>(j) - 1] = static_cast<int>(sampler.draw(j, rng));
    return LehmerCode(std::move(code));
}

Permutation sample_mallows(std::int64_t n, double q, RandomStream& rng) {
    return lehmer_decode(sample_mallows_code(n, q, rng));
}

Permutation sample_uniform_permutation(std::int64_t n, RandomStream& rng) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
    for (std::int64_t i = n - 1; i > 0; --i) {
        const auto k = static_cast<std::int64_t>(rng.next_index(static_cast<std::uint64_t>(i + 1)));
        std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(k)]);
    }
    return Permutation(std::move(w));
}

double expected_inversions(std::int64_t n, double q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    double acc = 0.0;
    for (std::int64_t j = 2; j <= n; ++j) acc += qseries::trunc_geom_mean(j, q) - 1.0;
    return acc;
}

}  // namespace parkfn
