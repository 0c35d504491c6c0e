#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace parkfn {

// Permutation of {1..n} in one-line notation.  Values are 1-based (the
// container is 0-based internally); accessors speak the 1-based language
// so the inversion formulas read exactly as written.
class Permutation {
  public:
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation reversed_identity(int n);

    int size() const { return static_cast<int>(word_.size()); }

    // Value at 1-based position.
    int at(int pos) const { return word_[static_cast<std::size_t>(pos) - 1]; }

    const std::vector<int>& word() const { return word_; }

    // positions()[v-1] is the 1-based position of value v.
    std::vector<int> positions() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

// Vector (c_1..c_n) with 1 <= c_j <= j; bijective image of a permutation.
class LehmerCode {
  public:
    explicit LehmerCode(std::vector<int> code);

    int size() const { return static_cast<int>(code_.size()); }
    int at(int j) const { return code_[static_cast<std::size_t>(j) - 1]; }
    const std::vector<int>& entries() const { return code_; }

    bool operator==(const LehmerCode&) const = default;

  private:
    std::vector<int> code_;
};

// Number of pairs i < j with word[j] < word[i].  Merge-count, O(n log n).
std::int64_t inversions(const Permutation& sigma);

// Number of inversions involving the value j and a smaller value, i.e.
// #{ i < j : position of j precedes position of i }.  Always 0 at j = 1,
// and summing over j recovers inversions(sigma).
std::int64_t inversions_below(const Permutation& sigma, int j);

// code[j] = inversions_below(sigma, j) + 1 for every j.  O(n log n).
LehmerCode lehmer_encode(const Permutation& sigma);

// Inverse of lehmer_encode.  O(n log n) via order-statistics selection on
// a Fenwick tree over free slots.
Permutation lehmer_decode(const LehmerCode& code);

// sigma_n sigma_{n-1} ... sigma_1.
Permutation reverse(const Permutation& sigma);

}  // namespace parkfn
