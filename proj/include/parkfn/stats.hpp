#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parkfn/limit_laws.hpp"
#include "parkfn/mallows.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/pmf.hpp"
#include "parkfn/rng.hpp"

// Seeded Monte Carlo over the tilted parking-function measure and the
// goodness-of-fit comparisons against exact and limiting references.

namespace parkfn {

using Histogram = std::map<std::int64_t, std::uint64_t>;

DiscretePMF empirical_pmf(std::span<const std::int64_t> samples);

// Sup distance between the empirical CDF and a reference CDF.
double ks_distance(std::vector<double> samples, const ContinuousLaw& law);

// Same, from an integer histogram whose values are mapped to value*scale.
double ks_distance(const Histogram& hist, std::uint64_t total, double scale,
                   const ContinuousLaw& law);

struct ChiSquareResult {
    double statistic = 0.0;
    std::int64_t dof = 0;
    double p_value = 1.0;
};

// Pearson chi-square of an observed histogram against a reference pmf.
// Cells with expected count below min_expected merge rightward into a tail
// cell; observations outside the reference support clamp to the nearest
// cell.
ChiSquareResult chi_square_gof(const Histogram& observed, std::uint64_t total,
                               const DiscretePMF& expected, double min_expected = 5.0);

// One draw from the parking-function measure: tilted Lehmer code composed
// with a uniform relabeling.
ParkingFunction sample_pf(std::int64_t n, double q, RandomStream& rng);

// First coordinate only: a uniform index tau_1 plus the single truncated
// geometric it selects.  O(1) per draw.
std::int64_t sample_pi1(const TruncGeomSampler& sampler, RandomStream& rng);

// Count of the value k: entries j < k can never equal k, so only the
// n-k+1 top code entries are drawn.  The relabeling never matters for a
// value count.
std::int64_t sample_count_stat(const TruncGeomSampler& sampler, std::int64_t k,
                               RandomStream& rng);

// Conditional Monte Carlo estimate of P(pi_1 = v) for each requested v:
// draw only tau_1 and average the conditional mass of the code entry it
// selects.  Unbiased, and the variance at the corner events is smaller
// than the raw indicator's by a factor ~ n, which is what makes corner
// probabilities ~ 1/n^2 measurable at desk-scale sample counts.
std::vector<double> pi1_pmf_conditional_estimate(std::int64_t n, double q,
                                                 std::span<const std::int64_t> values,
                                                 std::uint64_t num_samples,
                                                 RandomStream& rng);

enum class StatisticKind { pi1, nk };

// How the experiment's k is derived from n.
struct KRule {
    enum class Kind { fixed, power, fraction, from_top };
    Kind kind = Kind::fixed;
    double value = 1.0;

    std::int64_t resolve(std::int64_t n) const;
};

enum class ScaleRule { none, over_n, over_n_power, over_log_n };

struct ReferenceSpec {
    enum class Kind {
        q1_cdf,            // x - x log x
        Fc_cdf,            // F_c, param c
        exponential_cdf,   // Exp(c)
        uniform01_cdf,
        geometric,         // (1-q) q^{k-1}, resolved q
        poisson,           // fixed lambda
        poisson_lambda_c,  // lambda_c(c, d)
        poisson_nqk,       // lambda = (1-q)/q * n q^k, resolved per run
        exact_pi1,         // pi1_pmf_table(n, q)
        exact_nk,          // nk_pmf(n, q, k)
        zsum,              // law_Zsum(q, k)
        ysum,              // law_Ysum(q, kmax)
        constant           // scaled mean compared against `value`
    };

    Kind kind = Kind::q1_cdf;
    double c = 0.0;
    double d = 0.5;
    double lambda = 0.0;
    double value = 0.0;
    double tol = 1e-12;
    std::optional<std::int64_t> ysum_kmax;

    bool is_continuous() const;
};

struct ExperimentConfig {
    std::string name;
    std::int64_t n = 0;
    QSchedule schedule = QSchedule::fixed(1.0);
    StatisticKind statistic = StatisticKind::pi1;
    KRule k_rule;
    ScaleRule scale = ScaleRule::none;
    double scale_power = 1.0;  // for over_n_power
    std::uint64_t num_samples = 0;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: PARKFN_THREADS env, then hardware
    ReferenceSpec reference;
};

struct GofReport {
    std::string experiment;
    std::int64_t n = 0;
    double q_resolved = 0.0;
    std::int64_t k_resolved = 0;
    std::uint64_t num_samples = 0;
    double ks = 0.0;
    double chi2 = 0.0;
    std::int64_t dof = 0;
    double chi2_pvalue = 0.0;
    double tv = 0.0;
    double emp_mean = 0.0;
    double emp_variance = 0.0;
    double ref_mean = 0.0;
    std::uint64_t seed = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

// Samples the configured statistic, applies the scaling, compares against
// the configured reference and fills a report row.  Parallel over fixed
// 8192-sample chunks with stream-id = chunk index, so the result is
// byte-identical for any thread count.
GofReport run_experiment(const ExperimentConfig& cfg);

// JSON array of experiment objects; throws with the entry index on a
// malformed entry.
std::vector<ExperimentConfig> load_experiments_json(const std::string& path);

}  // namespace parkfn
