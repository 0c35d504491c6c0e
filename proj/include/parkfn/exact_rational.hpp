#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact-rational mirror of the small-n laws: brute-force induced measure
// over all (Lehmer code, tau) pairs plus rational evaluations of the
// closed-form marginals, so agreement can be asserted as equality instead
// of tolerance.  Everything here is capped at n <= 6.

namespace parkfn {

using Rational = boost::multiprecision::cpp_rational;

// "3/2", "1", "0.5" (decimals with up to 18 fractional digits).
Rational parse_rational(std::string_view text);

// P(X = i) for the truncated geometric on {1..j}: q^{i-1} / [j]_q.
Rational trunc_geom_pmf_rational(int i, int j, const Rational& q);

// P(pi_1 = k) = (1/n) sum_{j=k..n} q^{k-1} / [j]_q.
Rational pi1_pmf_rational(int n, const Rational& q, int k);

// Law of the count of k: exact convolution of the Bernoulli(q^{k-1}/[j]_q)
// indicators, j = k..n.  Entry m is P(count = m), m = 0..n-k+1.
std::vector<Rational> nk_pmf_rational(int n, const Rational& q, int k);

// Exact pushforward of (Mallows x uniform) onto the parking functions.
class InducedMeasure {
  public:
    InducedMeasure(int n, Rational q, std::map<std::vector<int>, Rational> mass);

    int n() const { return n_; }
    const Rational& q() const { return q_; }
    const std::map<std::vector<int>, Rational>& mass() const { return mass_; }

    Rational total() const;

    // pi1_marginal()[k-1] = P(pi_1 = k).
    std::vector<Rational> pi1_marginal() const;

    // count_marginal(k)[m] = P(#{i : pi_i = k} = m), m = 0..n.
    std::vector<Rational> count_marginal(int k) const;

    // Mass constant on each orbit under coordinate permutation, and each
    // orbit fully present.
    bool is_exchangeable() const;

  private:
    int n_;
    Rational q_;
    std::map<std::vector<int>, Rational> mass_;
};

// Enumerates all n! x n! (code, tau) pairs; n <= 6 guard.
InducedMeasure induced_measure_bruteforce(int n, const Rational& q);

}  // namespace parkfn
