#include "parkfn/exact_rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace parkfn {

namespace {

Rational q_integer(int j, const Rational& q) {  // 1 + q + ... + q^{j-1}
    Rational acc = 0, pw = 1;
    for (int i = 0; i < j; ++i) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

Rational q_pow(const Rational& q, int e) {
    Rational pw = 1;
    for (int i = 0; i < e; ++i) pw *= q;
    return pw;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    const std::size_t slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            const Rational num(boost::multiprecision::cpp_int(s.substr(0, slash)));
            const Rational den(boost::multiprecision::cpp_int(s.substr(slash + 1)));
            if (den == 0) throw std::invalid_argument("");
            return num / den;
        }
        const std::size_t dot = s.find('.');
        if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
        const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac = s.size() - dot - 1;
        if (frac > 18) throw std::invalid_argument("");
        Rational den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        return Rational(boost::multiprecision::cpp_int(digits)) / den;
    } catch (...) {
        throw std::invalid_argument("cannot parse rational from '" + s + "'");
    }
}

Rational trunc_geom_pmf_rational(int i, int j, const Rational& q) {
    if (j < 1) throw std::invalid_argument("support size must be >= 1");
    if (q <= 0) throw std::invalid_argument("q must be positive");
    if (i < 1 || i > j) return 0;
    return q_pow(q, i - 1) / q_integer(j, q);
}

Rational pi1_pmf_rational(int n, const Rational& q, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1..n]");
    Rational acc = 0;
    for (int j = k; j <= n; ++j) acc += trunc_geom_pmf_rational(k, j, q);
    return acc / n;
}

std::vector<Rational> nk_pmf_rational(int n, const Rational& q, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("k out of [1..n]");
    std::vector<Rational> f{Rational(1)};
    for (int j = k; j <= n; ++j) {
        const Rational p = trunc_geom_pmf_rational(k, j, q);
        f.push_back(0);
        for (std::size_t m = f.size() - 1; m >= 1; --m)
            f[m] = f[m] * (1 - p) + f[m - 1] * p;
        f[0] *= 1 - p;
    }
    return f;
}

InducedMeasure::InducedMeasure(int n, Rational q, std::map<std::vector<int>, Rational> mass)
    : n_(n), q_(std::move(q)), mass_(std::move(mass)) {}

Rational InducedMeasure::total() const {
    Rational t = 0;
    for (const auto& [pf, m] : mass_) t += m;
    return t;
}

std::vector<Rational> InducedMeasure::pi1_marginal() const {
    std::vector<Rational> marg(static_cast<std::size_t>(n_), Rational(0));
    for (const auto& [pf, m] : mass_) marg[static_cast<std::size_t>(pf[0]) - 1] += m;
    return marg;
}

std::vector<Rational> InducedMeasure::count_marginal(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("k out of [1..n]");
    std::vector<Rational> marg(static_cast<std::size_t>(n_) + 1, Rational(0));
    for (const auto& [pf, m] : mass_) {
        const auto c = static_cast<std::size_t>(std::count(pf.begin(), pf.end(), k));
        marg[c] += m;
    }
    return marg;
}

bool InducedMeasure::is_exchangeable() const {
    for (const auto& [pf, m] : mass_) {
        std::vector<int> rep = pf;
        std::sort(rep.begin(), rep.end());
        // walk the whole orbit of the sorted representative
        do {
            const auto it = mass_.find(rep);
            if (it == mass_.end() || it->second != m) return false;
        } while (std::next_permutation(rep.begin(), rep.end()));
    }
    return true;
}

InducedMeasure induced_measure_bruteforce(int n, const Rational& q) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("induced_measure_bruteforce is capped at n <= 6");
    if (q <= 0) throw std::invalid_argument("q must be positive");

    // per-entry truncated geometric masses, code[j] in {1..j}
    std::vector<std::vector<Rational>> geom(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
            geom[static_cast<std::size_t>(j)].push_back(trunc_geom_pmf_rational(i, j, q));

    const Rational tau_mass = Rational(1) / factorial_u64(n);

    std::map<std::vector<int>, Rational> mass;
    std::vector<int> code(static_cast<std::size_t>(n), 1);
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::vector<int> pf(static_cast<std::size_t>(n));
    while (true) {
        Rational w = tau_mass;
        for (int j = 1; j <= n; ++j)
            w *= geom[static_cast<std::size_t>(j)][static_cast<std::size_t>(code[static_cast<std::size_t>(j) - 1]) - 1];

        std::iota(tau.begin(), tau.end(), 1);
        do {
            for (int i = 0; i < n; ++i)
                pf[static_cast<std::size_t>(i)] = code[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)]) - 1];
            mass[pf] += w;
        } while (std::next_permutation(tau.begin(), tau.end()));

        // odometer over the code space [1] x [2] x ... x [n]
        int j = n - 1;
        while (j >= 0 && code[static_cast<std::size_t>(j)] == j + 1) {
            code[static_cast<std::size_t>(j)] = 1;
            --j;
        }
        if (j < 0) break;
        ++code[static_cast<std::size_t>(j)];
    }
    return InducedMeasure(n, q, std::move(mass));
}

}  // namespace parkfn
