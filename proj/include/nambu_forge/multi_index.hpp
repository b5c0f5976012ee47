#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nforge {

// Strictly increasing tuple of 0-based basis indices.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> sorted) : v_(std::move(sorted)) {
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 0) throw std::invalid_argument("negative basis index");
            if (i > 0 && v_[i] <= v_[i - 1])
                throw std::invalid_argument("multi-index is not strictly increasing");
        }
    }

    MultiIndex(std::initializer_list<int> il) : MultiIndex(std::vector<int>(il)) {}

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    int operator[](std::size_t i) const { return v_[i]; }
    const std::vector<int>& indices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(int k) const { return std::binary_search(v_.begin(), v_.end(), k); }

    // 1-based text form, e.g. (1,2,3).
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i] + 1);
        }
        return s + ")";
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.v_ <=> b.v_; }

private:
    std::vector<int> v_;
};

struct SignedMultiIndex {
    MultiIndex index;
    int sign = 0;  // +1, -1, or 0 when the sequence has a repeat
};

// Sorts a sequence of basis indices and returns the permutation sign.
inline SignedMultiIndex canonical_multiindex(std::span<const int> seq) {
    std::vector<int> v(seq.begin(), seq.end());
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1]) return {MultiIndex(), 0};
    }
    return {MultiIndex(std::move(v)), sign};
}

inline SignedMultiIndex canonical_multiindex(std::initializer_list<int> seq) {
    return canonical_multiindex(std::span<const int>(seq.begin(), seq.size()));
}

// All strictly increasing k-tuples from {0, ..., n-1} in lexicographic order.
inline std::vector<MultiIndex> combinations(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.emplace_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Copy of `seq` with position `pos` removed.
inline std::vector<int> omit(std::span<const int> seq, std::size_t pos) {
    std::vector<int> out;
    out.reserve(seq.size() ? seq.size() - 1 : 0);
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (i != pos) out.push_back(seq[i]);
    return out;
}

inline std::vector<int> with_appended(std::span<const int> seq, int k) {
    std::vector<int> out(seq.begin(), seq.end());
    out.push_back(k);
    return out;
}

inline std::vector<int> with_replaced(std::span<const int> seq, std::size_t pos, int k) {
    std::vector<int> out(seq.begin(), seq.end());
    out[pos] = k;
    return out;
}

// (-1)^k
inline int parity_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace nforge
