#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace scamscope {

class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), size_t{0});
    }

    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(size_t a, size_t b) {
        size_t ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
    }

    bool connected(size_t a, size_t b) { return find(a) == find(b); }

private:
    std::vector<size_t> parent_;
    std::vector<size_t> rank_;
};

} // namespace scamscope
