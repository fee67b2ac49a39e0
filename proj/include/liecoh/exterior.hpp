#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "errors.hpp"

namespace liecoh {

inline size_t binom(size_t n, size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    size_t r = 1;
    for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Basis of Λ^k(R^n)*: the strictly increasing k-subsets of {0..n-1} in
/// lexicographic order, with both subset -> position and position -> subset
/// maps. All wedge bookkeeping (insertion signs) routes through here.
class ExteriorBasis {
public:
    ExteriorBasis(size_t n, size_t k) : n_(n), k_(k) {
        if (k > n) throw InputError("exterior degree exceeds ambient dimension");
        std::vector<size_t> cur(k);
        for (size_t i = 0; i < k; ++i) cur[i] = i;
        while (true) {
            index_[cur] = subsets_.size();
            subsets_.push_back(cur);
            // next k-subset in lexicographic order
            size_t i = k;
            while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
            if (i == 0) break; // k = 0 lands here immediately: one empty subset
            ++cur[i - 1];
            for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
    }

    size_t n() const { return n_; }
    size_t k() const { return k_; }
    size_t size() const { return subsets_.size(); }
    const std::vector<size_t>& subset(size_t pos) const { return subsets_[pos]; }

    size_t position(const std::vector<size_t>& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw InputError("subset not in exterior basis");
        return it->second;
    }

    /// Sign and sorted result of e_m ^ e_S for m not in S: the sign is
    /// (-1)^(number of elements of S below m).
    static std::pair<int, std::vector<size_t>> insert(const std::vector<size_t>& s, size_t m) {
        std::vector<size_t> out;
        out.reserve(s.size() + 1);
        int sign = 1;
        bool placed = false;
        for (size_t u : s) {
            if (u == m) throw InputError("insert: element already present");
            if (u < m) {
                sign = -sign;
                out.push_back(u);
            } else {
                if (!placed) {
                    out.push_back(m);
                    placed = true;
                }
                out.push_back(u);
            }
        }
        if (!placed) out.push_back(m);
        return {sign, out};
    }

    /// Sorted subset with position a removed; the paired contraction sign is
    /// (-1)^a, tracked by the caller.
    static std::vector<size_t> erase_at(const std::vector<size_t>& s, size_t a) {
        std::vector<size_t> out = s;
        out.erase(out.begin() + static_cast<long>(a));
        return out;
    }

private:
    size_t n_, k_;
    std::vector<std::vector<size_t>> subsets_;
    std::map<std::vector<size_t>, size_t> index_;
};

} // namespace liecoh
