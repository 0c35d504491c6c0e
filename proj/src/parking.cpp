#include "parkfn/parking.hpp"

#include <string>

namespace parkfn {

namespace {

void check_entries(std::span<const int> prefs) {
    const int n = static_cast<int>(prefs.size());
    if (n == 0) throw std::invalid_argument("preference sequence must be nonempty");
    for (int v : prefs)
        if (v < 1 || v > n)
            throw std::invalid_argument("preference " + std::to_string(v) + " out of [1.." +
                                        std::to_string(n) + "]");
}

bool is_parking_checked(std::span<const int> prefs) {
    const int n = static_cast<int>(prefs.size());
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int v : prefs) ++count[static_cast<std::size_t>(v)];
    int cum = 0;
    for (int j = 1; j <= n; ++j) {
        cum += count[static_cast<std::size_t>(j)];
        if (cum < j) return false;
    }
    return true;
}

}  // namespace

ParkingFunction::ParkingFunction(std::vector<int> prefs) : prefs_(std::move(prefs)) {
    check_entries(prefs_);
    if (!is_parking_checked(prefs_))
        throw std::invalid_argument("sequence is not a parking function");
}

bool is_parking(std::span<const int> prefs) {
    check_entries(prefs);
    return is_parking_checked(prefs);
}

CarProcessResult simulate_cars(std::span<const int> prefs) {
    check_entries(prefs);
    const int n = static_cast<int>(prefs.size());
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    CarProcessResult result;
    result.spots.assign(static_cast<std::size_t>(n), 0);
    for (int car = 1; car <= n; ++car) {
        int spot = prefs[static_cast<std::size_t>(car) - 1];
        while (spot <= n && taken[static_cast<std::size_t>(spot)]) ++spot;
        if (spot > n) {
            result.all_parked = false;
            result.spots.clear();
            result.first_exit_car = car;
            return result;
        }
        taken[static_cast<std::size_t>(spot)] = 1;
        result.spots[static_cast<std::size_t>(car) - 1] = spot;
    }
    result.all_parked = true;
    return result;
}

ParkingFunction from_pair(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("sigma and tau must have the same length");
    const LehmerCode code = lehmer_encode(sigma);
    const int n = sigma.size();
    std::vector<int> prefs(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) prefs[static_cast<std::size_t>(i) - 1] = code.at(tau.at(i));
    return ParkingFunction(std::move(prefs));
}

namespace {

// prefix of length depth is extendable iff every deficiency j - #{<= j}
// can still be covered by the n - depth entries yet to be placed.
bool prefix_feasible(const std::vector<int>& count_le, int n, int depth) {
    const int budget = n - depth;
    int cum = 0;
    for (int j = 1; j <= n; ++j) {
        cum += count_le[static_cast<std::size_t>(j)];
        if (j - cum > budget) return false;
    }
    return true;
}

bool enumerate_rec(int n, int depth, std::vector<int>& prefix, std::vector<int>& count,
                   const std::function<bool(std::span<const int>)>& visit) {
    if (depth == n) return visit(std::span<const int>(prefix.data(), prefix.size()));
    for (int v = 1; v <= n; ++v) {
        prefix[static_cast<std::size_t>(depth)] = v;
        ++count[static_cast<std::size_t>(v)];
        const bool keep_going = !prefix_feasible(count, n, depth + 1) ||
                                enumerate_rec(n, depth + 1, prefix, count, visit);
        --count[static_cast<std::size_t>(v)];
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void enumerate_parking(int n, const std::function<bool(std::span<const int>)>& visit,
                       bool unsafe_large) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > 8 && !unsafe_large)
        throw enumeration_guard_error("enumerate_parking(n=" + std::to_string(n) +
                                      ") exceeds the n <= 8 guard; pass unsafe_large to override");
    std::vector<int> prefix(static_cast<std::size_t>(n), 0);
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    enumerate_rec(n, 0, prefix, count, visit);
}

std::uint64_t parking_count(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::uint64_t result = 1;
    for (int i = 0; i < n - 1; ++i) result *= static_cast<std::uint64_t>(n) + 1;
    return result;
}

std::int64_t count_value(std::span<const int> prefs, int k) {
    const int n = static_cast<int>(prefs.size());
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    std::int64_t c = 0;
    for (int v : prefs) c += (v == k);
    return c;
}

std::int64_t count_value(const ParkingFunction& pf, int k) {
    return count_value(std::span<const int>(pf.prefs().data(), pf.prefs().size()), k);
}

}  // namespace parkfn
