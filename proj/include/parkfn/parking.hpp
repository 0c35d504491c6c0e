#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "parkfn/perm.hpp"

namespace parkfn {

// Preference sequence pi in [1..n]^n with at least j entries <= j for every
// j; construction validates.
class ParkingFunction {
  public:
    explicit ParkingFunction(std::vector<int> prefs);

    int size() const { return static_cast<int>(prefs_.size()); }
    int at(int i) const { return prefs_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& prefs() const { return prefs_; }

    bool operator==(const ParkingFunction&) const = default;
    auto operator<=>(const ParkingFunction&) const = default;

  private:
    std::vector<int> prefs_;
};

// Counting-sort check of the defining inequality, O(n).  Entries outside
// [1..n] are rejected with std::invalid_argument.
bool is_parking(std::span<const int> prefs);

struct CarProcessResult {
    bool all_parked = false;
    std::vector<int> spots;  // spots[i] = where car i+1 parked (when all_parked)
    int first_exit_car = 0;  // 1-based index of the first car to exit (when not)
};

// Drive the cars one at a time down the one-way street; each takes its
// preferred spot or the first free spot after it.  Success iff is_parking
// holds -- kept deliberately independent of it as an oracle.
CarProcessResult simulate_cars(std::span<const int> prefs);

// The pair map: coordinate i is the Lehmer entry of sigma at index tau_i.
// Always lands in the parking functions.
ParkingFunction from_pair(const Permutation& sigma, const Permutation& tau);

// Thrown when an enumeration would exceed the n <= 8 guard.
class enumeration_guard_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Visit every parking function of length n exactly once, in lexicographic
// order; stop early when the visitor returns false.  The span passed to
// the visitor is only valid during the call.  DFS over preference prefixes
// with pruning on prefix counts; refused for n > 8 unless unsafe_large is
// set.
void enumerate_parking(int n, const std::function<bool(std::span<const int>)>& visit,
                       bool unsafe_large = false);

// (n+1)^{n-1}.
std::uint64_t parking_count(int n);

// Number of coordinates equal to k.
std::int64_t count_value(const ParkingFunction& pf, int k);
std::int64_t count_value(std::span<const int> prefs, int k);

}  // namespace parkfn
