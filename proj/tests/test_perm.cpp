#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "parkfn/perm.hpp"
#include "parkfn/rng.hpp"
#include "test_util.hpp"

using namespace parkfn;

TEST_CASE("permutation construction validates the word") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("inversions on the canonical words") {
    CHECK(inversions(Permutation::identity(6)) == 0);
    CHECK(inversions(Permutation::reversed_identity(6)) == 15);  // n(n-1)/2
    CHECK(inversions(Permutation({3, 1, 2})) == 2);
}

TEST_CASE("inversions agrees with the quadratic oracle") {
    RandomStream rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> word(40);
        for (int i = 0; i < 40; ++i) word[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(word.begin(), word.end(), rng);
        const Permutation sigma(word);
        CHECK(inversions(sigma) == testutil::naive_inversions(word));
    }
}

TEST_CASE("inversions_below basics") {
    const Permutation sigma({3, 1, 2});
    CHECK(inversions_below(sigma, 1) == 0);
    CHECK(inversions_below(sigma, 2) == 0);
    CHECK(inversions_below(sigma, 3) == 2);
    CHECK(inversions_below(sigma, 1) + inversions_below(sigma, 2) + inversions_below(sigma, 3) ==
          inversions(sigma));
    CHECK_THROWS_AS(inversions_below(sigma, 0), std::invalid_argument);
    CHECK_THROWS_AS(inversions_below(sigma, 4), std::invalid_argument);

    const Permutation rev = Permutation::reversed_identity(7);
    for (int j = 1; j <= 7; ++j) CHECK(inversions_below(rev, j) == j - 1);
}

TEST_CASE("inversions_below is always zero at j=1 and sums to the inversion count") {
    testutil::for_each_permutation(5, [](const Permutation& sigma) {
        CHECK(inversions_below(sigma, 1) == 0);
        std::int64_t total = 0;
        for (int j = 1; j <= 5; ++j) total += inversions_below(sigma, j);
        CHECK(total == inversions(sigma));
    });
}

TEST_CASE("lehmer_encode canonical values") {
    const LehmerCode id_code = lehmer_encode(Permutation::identity(5));
    CHECK(id_code.entries() == std::vector<int>{1, 1, 1, 1, 1});
    const LehmerCode rev_code = lehmer_encode(Permutation::reversed_identity(5));
    CHECK(rev_code.entries() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("lehmer_decode canonical values and validation") {
    CHECK(lehmer_decode(LehmerCode({1, 1, 1, 1})) == Permutation::identity(4));
    CHECK(lehmer_decode(LehmerCode({1, 2, 3, 4})) == Permutation::reversed_identity(4));
    CHECK_THROWS_AS(LehmerCode({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(LehmerCode({0, 1}), std::invalid_argument);
}

TEST_CASE("encode/decode roundtrip, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        testutil::for_each_permutation(n, [](const Permutation& sigma) {
            CHECK(lehmer_decode(lehmer_encode(sigma)) == sigma);
        });
    }
}

TEST_CASE("decode/encode roundtrip over all codes, n = 5") {
    // odometer over [1] x [2] x ... x [5]
    std::vector<int> code{1, 1, 1, 1, 1};
    int seen = 0;
    while (true) {
        const LehmerCode lc(code);
        CHECK(lehmer_encode(lehmer_decode(lc)) == lc);
        CHECK(lehmer_decode(lc) == testutil::naive_lehmer_decode(lc));
        ++seen;
        int j = 4;
        while (j >= 0 && code[static_cast<std::size_t>(j)] == j + 1) code[static_cast<std::size_t>(j--)] = 1;
        if (j < 0) break;
        ++code[static_cast<std::size_t>(j)];
    }
    CHECK(seen == 120);
}

TEST_CASE("randomized roundtrips at n = 7, 8") {
    RandomStream rng(7);
    for (int n : {7, 8}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> word(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(word.begin(), word.end(), rng);
            const Permutation sigma(word);
            CHECK(lehmer_decode(lehmer_encode(sigma)) == sigma);
        }
    }
}

TEST_CASE("large roundtrip against the quadratic decoder") {
    RandomStream rng(8);
    std::vector<int> code(2000);
    for (int j = 1; j <= 2000; ++j)
        code[static_cast<std::size_t>(j) - 1] =
            1 + static_cast<int>(rng.next_index(static_cast<std::uint64_t>(j)));
    const LehmerCode lc(code);
    const Permutation fast = lehmer_decode(lc);
    CHECK(fast == testutil::naive_lehmer_decode(lc));
    CHECK(lehmer_encode(fast) == lc);
}

TEST_CASE("reverse") {
    CHECK(reverse(Permutation::identity(5)) == Permutation::reversed_identity(5));
    testutil::for_each_permutation(4, [](const Permutation& sigma) {
        CHECK(reverse(reverse(sigma)) == sigma);
        CHECK(inversions(sigma) + inversions(reverse(sigma)) == 6);  // n(n-1)/2
    });
}
