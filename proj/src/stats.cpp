#include "parkfn/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include "parkfn/exact_laws.hpp"
#include "parkfn/qseries.hpp"

namespace parkfn {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PARKFN_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

constexpr std::uint64_t kChunk = 8192;

}  // namespace

DiscretePMF empirical_pmf(std::span<const std::int64_t> samples) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    Histogram hist;
    for (std::int64_t v : samples) ++hist[v];
    return DiscretePMF::from_counts(hist, samples.size());
}

double ks_distance(std::vector<double> samples, const ContinuousLaw& law) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = law.cdf(samples[i]);
        d = std::max(d, std::max(static_cast<double>(i + 1) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    return d;
}

double ks_distance(const Histogram& hist, std::uint64_t total, double scale,
                   const ContinuousLaw& law) {
    if (total == 0) throw std::invalid_argument("empty sample");
    const double n = static_cast<double>(total);
    std::uint64_t cum = 0;
    double d = 0.0;
    for (const auto& [value, count] : hist) {
        const double f = law.cdf(std::min(law.hi, std::max(law.lo, static_cast<double>(value) * scale)));
        const double before = static_cast<double>(cum) / n;
        cum += count;
        const double after = static_cast<double>(cum) / n;
        d = std::max(d, std::max(after - f, f - before));
    }
    return d;
}

ChiSquareResult chi_square_gof(const Histogram& observed, std::uint64_t total,
                               const DiscretePMF& expected, double min_expected) {
    if (expected.support.empty()) throw std::invalid_argument("empty reference pmf");
    const std::size_t m = expected.support.size();

    // observed counts aligned to the reference support; out-of-support
    // observations clamp to the nearest cell
    std::vector<double> obs(m, 0.0);
    for (const auto& [value, count] : observed) {
        auto it = std::lower_bound(expected.support.begin(), expected.support.end(), value);
        std::size_t idx;
        if (it == expected.support.end())
            idx = m - 1;
        else
            idx = static_cast<std::size_t>(it - expected.support.begin());
        obs[idx] += static_cast<double>(count);
    }

    const double n = static_cast<double>(total);
    std::vector<double> bin_obs, bin_exp;
    double acc_o = 0.0, acc_e = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc_o += obs[i];
        acc_e += n * expected.prob[i];
        if (i + 1 == m) acc_e += n * (1.0 - expected.total());  // fold truncated tail
        if (acc_e >= min_expected) {
            bin_obs.push_back(acc_o);
            bin_exp.push_back(acc_e);
            acc_o = acc_e = 0.0;
        }
    }
    if (acc_e > 0.0 || acc_o > 0.0) {
        if (!bin_exp.empty()) {
            bin_obs.back() += acc_o;
            bin_exp.back() += acc_e;
        } else {
            bin_obs.push_back(acc_o);
            bin_exp.push_back(acc_e);
        }
    }
    if (bin_exp.size() < 2) throw std::invalid_argument("chi-square needs at least two cells");

    double stat = 0.0;
    for (std::size_t b = 0; b < bin_exp.size(); ++b) {
        const double diff = bin_obs[b] - bin_exp[b];
        stat += diff * diff / bin_exp[b];
    }
    ChiSquareResult result;
    result.statistic = stat;
    result.dof = static_cast<std::int64_t>(bin_exp.size()) - 1;
    result.p_value = boost::math::gamma_q(static_cast<double>(result.dof) / 2.0, stat / 2.0);
    return result;
}

ParkingFunction sample_pf(std::int64_t n, double q, RandomStream& rng) {
    const LehmerCode code = sample_mallows_code(n, q, rng);
    const Permutation tau = sample_uniform_permutation(n, rng);
    std::vector<int> prefs(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i)
        prefs[static_cast<std::size_t>(i) - 1] = code.at(tau.at(static_cast<int>(i)));
    return ParkingFunction(std::move(prefs));
}

std::int64_t sample_pi1(const TruncGeomSampler& sampler, RandomStream& rng) {
    const std::int64_t tau1 = 1 + static_cast<std::int64_t>(
                                      rng.next_index(static_cast<std::uint64_t>(sampler.n())));
    return sampler.draw(tau1, rng);
}

std::int64_t sample_count_stat(const TruncGeomSampler& sampler, std::int64_t k,
                               RandomStream& rng) {
    const std::int64_t n = sampler.n();
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1..n]");
    std::int64_t count = 0;
    for (std::int64_t j = k; j <= n; ++j) count += (sampler.draw(j, rng) == k);
    return count;
}

std::vector<double> pi1_pmf_conditional_estimate(std::int64_t n, double q,
                                                 std::span<const std::int64_t> values,
                                                 std::uint64_t num_samples,
                                                 RandomStream& rng) {
    if (num_samples == 0) throw std::invalid_argument("need at least one sample");
    for (std::int64_t v : values)
        if (v < 1 || v > n) throw std::invalid_argument("value out of [1..n]");
    const double L = qseries::log_q(q);
    std::vector<double> lqi(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::int64_t j = 1; j <= n; ++j)
        lqi[static_cast<std::size_t>(j)] = qseries::log_q_integer(j, q);
    std::vector<double> acc(values.size(), 0.0);
    for (std::uint64_t s = 0; s < num_samples; ++s) {
        const std::int64_t tau1 =
            1 + static_cast<std::int64_t>(rng.next_index(static_cast<std::uint64_t>(n)));
        for (std::size_t vi = 0; vi < values.size(); ++vi) {
            const std::int64_t v = values[vi];
            if (v > tau1) continue;
            acc[vi] += std::exp(static_cast<double>(v - 1) * L -
                                lqi[static_cast<std::size_t>(tau1)]);
        }
    }
    for (double& a : acc) a /= static_cast<double>(num_samples);
    return acc;
}

std::int64_t KRule::resolve(std::int64_t n) const {
    std::int64_t k = 0;
    switch (kind) {
        case Kind::fixed: k = static_cast<std::int64_t>(value); break;
        case Kind::power:
            k = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n), value)));
            break;
        case Kind::fraction:
            k = static_cast<std::int64_t>(std::floor(value * static_cast<double>(n)));
            break;
        case Kind::from_top: k = n - static_cast<std::int64_t>(value); break;
    }
    if (k < 1 || k > n)
        throw std::invalid_argument("k-rule resolves to " + std::to_string(k) + " outside [1.." +
                                    std::to_string(n) + "]");
    return k;
}

bool ReferenceSpec::is_continuous() const {
    switch (kind) {
        case Kind::q1_cdf:
        case Kind::Fc_cdf:
        case Kind::exponential_cdf:
        case Kind::uniform01_cdf: return true;
        default: return false;
    }
}

namespace {

double scale_factor(ScaleRule rule, double power, std::int64_t n) {
    switch (rule) {
        case ScaleRule::none: return 1.0;
        case ScaleRule::over_n: return 1.0 / static_cast<double>(n);
        case ScaleRule::over_n_power: return std::pow(static_cast<double>(n), -power);
        case ScaleRule::over_log_n: return 1.0 / std::log(static_cast<double>(n));
    }
    return 1.0;
}

Histogram collect_statistic(const ExperimentConfig& cfg, const TruncGeomSampler& sampler,
                            std::int64_t k) {
    const std::uint64_t num_chunks = (cfg.num_samples + kChunk - 1) / kChunk;
    const int threads = std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_threads(cfg.threads)), num_chunks);

    Histogram global;
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&]() {
        Histogram local;
        while (true) {
            const std::uint64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= num_chunks) break;
            RandomStream rng(cfg.seed, chunk);
            const std::uint64_t count = std::min(kChunk, cfg.num_samples - chunk * kChunk);
            if (cfg.statistic == StatisticKind::pi1) {
                for (std::uint64_t i = 0; i < count; ++i) ++local[sample_pi1(sampler, rng)];
            } else {
                for (std::uint64_t i = 0; i < count; ++i)
                    ++local[sample_count_stat(sampler, k, rng)];
            }
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        for (const auto& [value, count] : local) global[value] += count;
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return global;
}

double continuous_law_mean(const ContinuousLaw& law) {
    // mean = lo + integral of (1 - F); extend a finite window until the
    // survival is negligible when the support is unbounded
    double hi = law.hi;
    if (!std::isfinite(hi)) {
        hi = 1.0;
        while (1.0 - law.cdf(hi) > 1e-12 && hi < 1e9) hi *= 2.0;
    }
    const int steps = 20000;
    const double h = (hi - law.lo) / steps;
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double x = law.lo + h * i;
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        acc += w * (1.0 - law.cdf(x));
    }
    return law.lo + acc * h;
}

struct ResolvedReference {
    std::optional<ContinuousLaw> continuous;
    std::optional<DiscretePMF> discrete;
    std::optional<double> constant;
};

ResolvedReference resolve_reference(const ReferenceSpec& ref, std::int64_t n, double q,
                                    std::int64_t k) {
    using Kind = ReferenceSpec::Kind;
    ResolvedReference out;
    switch (ref.kind) {
        case Kind::q1_cdf: out.continuous = law_q1(); break;
        case Kind::Fc_cdf: out.continuous = law_Fc(ref.c); break;
        case Kind::exponential_cdf: out.continuous = law_exponential(ref.c); break;
        case Kind::uniform01_cdf: out.continuous = law_uniform01(); break;
        case Kind::geometric: out.discrete = geometric_pmf_table(q); break;
        case Kind::poisson: out.discrete = poisson_pmf(ref.lambda); break;
        case Kind::poisson_lambda_c: out.discrete = poisson_pmf(lambda_c(ref.c, ref.d)); break;
        case Kind::poisson_nqk: {
            const double L = static_cast<double>(n) *
                             std::exp(static_cast<double>(k) * qseries::log_q(q));
            out.discrete = poisson_pmf((1.0 - q) / q * L);
            break;
        }
        case Kind::exact_pi1: out.discrete = pi1_pmf_table(n, q); break;
        case Kind::exact_nk: out.discrete = nk_pmf(n, q, k); break;
        case Kind::zsum: out.discrete = law_Zsum(q, k, ref.tol).pmf; break;
        case Kind::ysum: out.discrete = law_Ysum(q, ref.ysum_kmax, ref.tol).pmf; break;
        case Kind::constant: out.constant = ref.value; break;
    }
    return out;
}

}  // namespace

std::string GofReport::csv_header() {
    return "experiment,n,q_resolved,k_resolved,N,ks,chi2,dof,tv,emp_mean,ref_mean,seed";
}

std::string GofReport::csv_row() const {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%lld,%.12g,%lld,%llu,%.10g,%.10g,%lld,%.10g,%.10g,%.10g,%llu",
                  experiment.c_str(), static_cast<long long>(n), q_resolved,
                  static_cast<long long>(k_resolved),
                  static_cast<unsigned long long>(num_samples), ks, chi2,
                  static_cast<long long>(dof), tv, emp_mean, ref_mean,
                  static_cast<unsigned long long>(seed));
    return buf;
}

GofReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
    if (cfg.num_samples < 1) throw std::invalid_argument("sample count must be >= 1");

    const double q = cfg.schedule.evaluate(cfg.n);
    const std::int64_t k = (cfg.statistic == StatisticKind::nk) ? cfg.k_rule.resolve(cfg.n) : 0;

    if (cfg.reference.is_continuous() && cfg.scale == ScaleRule::none)
        throw std::invalid_argument("continuous reference requires a scaled statistic");
    if (!cfg.reference.is_continuous() && cfg.reference.kind != ReferenceSpec::Kind::constant &&
        cfg.scale != ScaleRule::none)
        throw std::invalid_argument("discrete reference requires the unscaled statistic");

    const TruncGeomSampler sampler(cfg.n, q);
    const Histogram hist = collect_statistic(cfg, sampler, k);

    const double scale = scale_factor(cfg.scale, cfg.scale_power, cfg.n);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    GofReport report;
    report.experiment = cfg.name;
    report.n = cfg.n;
    report.q_resolved = q;
    report.k_resolved = k;
    report.num_samples = cfg.num_samples;
    report.seed = cfg.seed;
    report.ks = nan;
    report.chi2 = nan;
    report.dof = 0;
    report.chi2_pvalue = nan;
    report.tv = nan;
    report.ref_mean = nan;

    const double nd = static_cast<double>(cfg.num_samples);
    double mean = 0.0;
    for (const auto& [value, count] : hist)
        mean += static_cast<double>(value) * scale * static_cast<double>(count);
    mean /= nd;
    double var = 0.0;
    for (const auto& [value, count] : hist) {
        const double d = static_cast<double>(value) * scale - mean;
        var += d * d * static_cast<double>(count);
    }
    var /= nd;
    report.emp_mean = mean;
    report.emp_variance = var;

    const ResolvedReference ref = resolve_reference(cfg.reference, cfg.n, q, k);
    if (ref.continuous) {
        report.ks = ks_distance(hist, cfg.num_samples, scale, *ref.continuous);
        report.ref_mean = continuous_law_mean(*ref.continuous);
    } else if (ref.discrete) {
        const DiscretePMF empirical = DiscretePMF::from_counts(hist, cfg.num_samples);
        report.tv = tv_distance(empirical, *ref.discrete);
        const ChiSquareResult chi = chi_square_gof(hist, cfg.num_samples, *ref.discrete);
        report.chi2 = chi.statistic;
        report.dof = chi.dof;
        report.chi2_pvalue = chi.p_value;
        report.ref_mean = ref.discrete->mean();
    } else if (ref.constant) {
        report.ref_mean = *ref.constant;
    }
    return report;
}

namespace {

ExperimentConfig parse_experiment(const nlohmann::json& entry) {
    ExperimentConfig cfg;
    cfg.name = entry.at("name").get<std::string>();
    cfg.n = entry.at("n").get<std::int64_t>();
    cfg.schedule = QSchedule::parse(entry.at("schedule").get<std::string>());
    const std::string stat = entry.at("statistic").get<std::string>();
    if (stat == "pi1")
        cfg.statistic = StatisticKind::pi1;
    else if (stat == "nk")
        cfg.statistic = StatisticKind::nk;
    else
        throw std::invalid_argument("unknown statistic '" + stat + "'");
    cfg.num_samples = entry.at("samples").get<std::uint64_t>();
    cfg.seed = entry.value("seed", 0ull);
    cfg.threads = entry.value("threads", 0);

    if (entry.contains("k_rule")) {
        const auto& kr = entry.at("k_rule");
        const std::string kind = kr.at("kind").get<std::string>();
        if (kind == "fixed")
            cfg.k_rule.kind = KRule::Kind::fixed;
        else if (kind == "power")
            cfg.k_rule.kind = KRule::Kind::power;
        else if (kind == "fraction")
            cfg.k_rule.kind = KRule::Kind::fraction;
        else if (kind == "from_top")
            cfg.k_rule.kind = KRule::Kind::from_top;
        else
            throw std::invalid_argument("unknown k-rule '" + kind + "'");
        cfg.k_rule.value = kr.at("value").get<double>();
    }

    if (entry.contains("scale")) {
        const std::string scale = entry.at("scale").get<std::string>();
        if (scale == "none")
            cfg.scale = ScaleRule::none;
        else if (scale == "over_n")
            cfg.scale = ScaleRule::over_n;
        else if (scale == "over_n_power")
            cfg.scale = ScaleRule::over_n_power;
        else if (scale == "over_log_n")
            cfg.scale = ScaleRule::over_log_n;
        else
            throw std::invalid_argument("unknown scale rule '" + scale + "'");
        cfg.scale_power = entry.value("scale_power", 1.0);
    }

    const auto& ref = entry.at("reference");
    const std::string kind = ref.at("kind").get<std::string>();
    using Kind = ReferenceSpec::Kind;
    if (kind == "q1")
        cfg.reference.kind = Kind::q1_cdf;
    else if (kind == "Fc")
        cfg.reference.kind = Kind::Fc_cdf;
    else if (kind == "exponential")
        cfg.reference.kind = Kind::exponential_cdf;
    else if (kind == "uniform01")
        cfg.reference.kind = Kind::uniform01_cdf;
    else if (kind == "geometric")
        cfg.reference.kind = Kind::geometric;
    else if (kind == "poisson")
        cfg.reference.kind = Kind::poisson;
    else if (kind == "poisson_lambda_c")
        cfg.reference.kind = Kind::poisson_lambda_c;
    else if (kind == "poisson_nqk")
        cfg.reference.kind = Kind::poisson_nqk;
    else if (kind == "exact_pi1")
        cfg.reference.kind = Kind::exact_pi1;
    else if (kind == "exact_nk")
        cfg.reference.kind = Kind::exact_nk;
    else if (kind == "zsum")
        cfg.reference.kind = Kind::zsum;
    else if (kind == "ysum")
        cfg.reference.kind = Kind::ysum;
    else if (kind == "constant")
        cfg.reference.kind = Kind::constant;
    else
        throw std::invalid_argument("unknown reference kind '" + kind + "'");
    cfg.reference.c = ref.value("c", 0.0);
    cfg.reference.d = ref.value("d", 0.5);
    cfg.reference.lambda = ref.value("lambda", 0.0);
    cfg.reference.value = ref.value("value", 0.0);
    cfg.reference.tol = ref.value("tol", 1e-12);
    if (ref.contains("kmax")) cfg.reference.ysum_kmax = ref.at("kmax").get<std::int64_t>();
    return cfg;
}

}  // namespace

std::vector<ExperimentConfig> load_experiments_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    if (!doc.is_array()) throw std::runtime_error("config must be a JSON array");
    std::vector<ExperimentConfig> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        try {
            out.push_back(parse_experiment(doc[i]));
        } catch (const std::exception& e) {
            throw std::runtime_error("config entry " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace parkfn
