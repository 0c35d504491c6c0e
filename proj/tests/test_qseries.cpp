#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "parkfn/exact_rational.hpp"
#include "parkfn/qseries.hpp"

using namespace parkfn;

namespace {

// exact rational references at a dyadic q (representable in a double)
Rational rat_q_integer(int j, const Rational& q) {
    Rational acc = 0, pw = 1;
    for (int i = 0; i < j; ++i) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

Rational rat_trunc_geom_mean(int j, const Rational& q) {
    Rational num = 0, pw = 1;
    for (int i = 1; i <= j; ++i) {
        num += i * pw;
        pw *= q;
    }
    return num / rat_q_integer(j, q);
}

const double kDyadicEps = 0x1.0p-30;  // exactly representable offset

}  // namespace

TEST_CASE("trunc_geom_head matches 1/j at q = 1 and exact rationals elsewhere") {
    for (int j : {1, 2, 3, 10, 137}) CHECK(qseries::trunc_geom_head(j, 1.0) == 1.0 / j);

    // (1-q)/(1-q^j) = 1/[j]_q, so the exact rational q-integer is the oracle
    for (double q : {0.25, 0.5, 2.0, 4.0, 1.0 + kDyadicEps, 1.0 - kDyadicEps}) {
        const Rational qr = parse_rational(q == 0.25 ? "1/4"
                                           : q == 0.5 ? "1/2"
                                           : q == 2.0 ? "2"
                                           : q == 4.0 ? "4"
                                           : q > 1.0  ? "1073741825/1073741824"
                                                      : "1073741823/1073741824");
        for (int j : {1, 2, 3, 7, 20}) {
            const double expected = static_cast<double>(Rational(1) / rat_q_integer(j, qr));
            CHECK(qseries::trunc_geom_head(j, q) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("log_q_integer matches the exact rational q-integer") {
    struct Case {
        double q;
        const char* qr;
    };
    for (const Case& c : {Case{0.3, "3/10"}, Case{2.0, "2"},
                          Case{1.0 + kDyadicEps, "1073741825/1073741824"},
                          Case{1.0 - kDyadicEps, "1073741823/1073741824"}}) {
        const Rational qr = parse_rational(c.qr);
        for (int j : {1, 2, 5, 17, 40}) {
            const double expected = std::log(static_cast<double>(rat_q_integer(j, qr)));
            CHECK(qseries::log_q_integer(j, c.q) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
    for (int j : {1, 4, 1000}) CHECK(qseries::log_q_integer(j, 1.0) == doctest::Approx(std::log(j)));
}

TEST_CASE("trunc_geom_pmf sums to one") {
    for (double q : {0.2, 0.9999999, 1.0, 1.0000001, 3.0}) {
        for (int j : {1, 2, 5, 30}) {
            double total = 0.0;
            for (int i = 1; i <= j; ++i) total += qseries::trunc_geom_pmf(i, j, q);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK(qseries::trunc_geom_pmf(0, 5, 2.0) == 0.0);
    CHECK(qseries::trunc_geom_pmf(6, 5, 2.0) == 0.0);
}

TEST_CASE("trunc_geom_mean matches the exact rational mean, including near q = 1") {
    struct Case {
        double q;
        const char* qr;
    };
    for (const Case& c : {Case{0.5, "1/2"}, Case{2.0, "2"}, Case{5.0, "5"},
                          Case{1.0 + kDyadicEps, "1073741825/1073741824"},
                          Case{1.0 - kDyadicEps, "1073741823/1073741824"}}) {
        const Rational qr = parse_rational(c.qr);
        for (int j : {1, 2, 3, 10, 50}) {
            const double expected = static_cast<double>(rat_trunc_geom_mean(j, qr));
            CHECK(qseries::trunc_geom_mean(j, c.q) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    for (int j : {1, 2, 9, 1000})
        CHECK(qseries::trunc_geom_mean(j, 1.0) == doctest::Approx((j + 1) / 2.0).epsilon(1e-15));
}

TEST_CASE("trunc_geom_mean is continuous across q = 1") {
    for (int j : {2, 10, 400}) {
        const double at1 = qseries::trunc_geom_mean(j, 1.0);
        CHECK(qseries::trunc_geom_mean(j, 1.0 + 1e-9) == doctest::Approx(at1).epsilon(1e-7));
        CHECK(qseries::trunc_geom_mean(j, 1.0 - 1e-9) == doctest::Approx(at1).epsilon(1e-7));
        // both sides of the series-vs-direct switch at |j log q| = 1e-3
        const double lo = qseries::trunc_geom_mean(j, 1.0 + 0.9e-3 / j);
        const double hi = qseries::trunc_geom_mean(j, 1.0 + 1.1e-3 / j);
        CHECK(std::fabs(hi - lo) < std::fabs(hi) * 1e-3 + 1e-3);
    }
}

TEST_CASE("q series guards") {
    CHECK_THROWS_AS(qseries::trunc_geom_head(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(qseries::trunc_geom_head(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qseries::trunc_geom_head(3, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(qseries::log_q_integer(0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(qseries::trunc_geom_mean(0, 2.0), std::invalid_argument);
}
