#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cospec {

class UnionFind {
  public:
    explicit UnionFind(int64_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int32_t find(int32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // path halving
            x = parent_[x];
        }
        return x;
    }

    bool unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    // Fully path-compress and return the root labels.
    std::vector<int32_t> labels() {
        std::vector<int32_t> out(parent_.size());
        for (size_t i = 0; i < parent_.size(); ++i) out[i] = find(static_cast<int32_t>(i));
        return out;
    }

  private:
    std::vector<int32_t> parent_;
    std::vector<uint8_t> rank_;
};

}  // namespace cospec
