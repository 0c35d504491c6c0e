#include "parkfn/perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parkfn {

namespace {

// Fenwick tree over positions 1..n supporting prefix sums and selection of
// the k-th set position.
class Fenwick {
  public:
    explicit Fenwick(int n) : n_(n), tree_(static_cast<std::size_t>(n) + 1, 0) {
        log2_ = 0;
        while ((1 << (log2_ + 1)) <= n_) ++log2_;
    }

    void add(int pos, int delta) {
        for (; pos <= n_; pos += pos & -pos) tree_[static_cast<std::size_t>(pos)] += delta;
    }

    int prefix(int pos) const {
        int s = 0;
        for (; pos > 0; pos -= pos & -pos) s += tree_[static_cast<std::size_t>(pos)];
        return s;
    }

    // Smallest position p with prefix(p) >= k; requires 1 <= k <= prefix(n).
    int select(int k) const {
        int pos = 0;
        for (int step = 1 << log2_; step > 0; step >>= 1) {
            const int next = pos + step;
            if (next <= n_ && tree_[static_cast<std::size_t>(next)] < k) {
                pos = next;
                k -= tree_[static_cast<std::size_t>(next)];
            }
        }
        return pos + 1;
    }

  private:
    int n_;
    int log2_;
    std::vector<int> tree_;
};

std::int64_t merge_count(std::vector<int>& a, std::vector<int>& buf, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[j] < a[i]) {
            inv += static_cast<std::int64_t>(mid - i);
            buf[k++] = a[j++];
        } else {
            buf[k++] = a[i++];
        }
    }
    while (i < mid) buf[k++] = a[i++];
    while (j < hi) buf[k++] = a[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : word_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("duplicate value " + std::to_string(v) + " in permutation");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::reversed_identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(word_.size());
    for (int i = 0; i < size(); ++i) pos[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)]) - 1] = i + 1;
    return pos;
}

LehmerCode::LehmerCode(std::vector<int> code) : code_(std::move(code)) {
    if (code_.empty()) throw std::invalid_argument("Lehmer code must be nonempty");
    for (int j = 1; j <= size(); ++j) {
        const int c = code_[static_cast<std::size_t>(j) - 1];
        if (c < 1 || c > j)
            throw std::invalid_argument("Lehmer code entry " + std::to_string(c) +
                                        " at index " + std::to_string(j) + " out of range");
    }
}

std::int64_t inversions(const Permutation& sigma) {
    std::vector<int> a = sigma.word();
    std::vector<int> buf(a.size());
    return merge_count(a, buf, 0, a.size());
}

std::int64_t inversions_below(const Permutation& sigma, int j) {
    const int n = sigma.size();
    if (j < 1 || j > n) throw std::invalid_argument("j out of range");
    const std::vector<int> pos = sigma.positions();
    const int pj = pos[static_cast<std::size_t>(j) - 1];
    std::int64_t count = 0;
    for (int i = 1; i < j; ++i)
        if (pos[static_cast<std::size_t>(i) - 1] > pj) ++count;
    return count;
}

LehmerCode lehmer_encode(const Permutation& sigma) {
    const int n = sigma.size();
    const std::vector<int> pos = sigma.positions();
    Fenwick seen(n);
    std::vector<int> code(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        const int p = pos[static_cast<std::size_t>(v) - 1];
        // values 1..v-1 already inserted; those after position p are the
        // inversions below v
        const int after = (v - 1) - seen.prefix(p);
        code[static_cast<std::size_t>(v) - 1] = after + 1;
        seen.add(p, 1);
    }
    return LehmerCode(std::move(code));
}

Permutation lehmer_decode(const LehmerCode& code) {
    const int n = code.size();
    Fenwick free_slots(n);
    for (int p = 1; p <= n; ++p) free_slots.add(p, 1);
    std::vector<int> word(static_cast<std::size_t>(n));
    // Place values from n down to 1: value j has code.at(j)-1 smaller values
    // after it, so it takes the (j - code.at(j) + 1)-th free slot from the
    // left among the j still-free slots.
    for (int j = n; j >= 1; --j) {
        const int rank = j - code.at(j) + 1;
        const int p = free_slots.select(rank);
        word[static_cast<std::size_t>(p) - 1] = j;
        free_slots.add(p, -1);
    }
    return Permutation(std::move(word));
}

Permutation reverse(const Permutation& sigma) {
    std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
    return Permutation(std::move(w));
}

}  // namespace parkfn
