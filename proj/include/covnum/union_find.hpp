#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace covnum {

/// Disjoint sets over 0..n-1 with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        std::size_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root)
            x = std::exchange(parent_[x], root);
        return root;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::size_t size() const noexcept { return parent_.size(); }

    /// Labels every element with a 1-based class id, classes numbered in
    /// increasing order of their smallest element. Returns the class count.
    std::uint32_t canonical_labels(std::uint32_t *out)
    {
        std::vector<std::uint32_t> label_of_root(parent_.size(), 0);
        std::uint32_t next = 0;
        for (std::size_t v = 0; v < parent_.size(); ++v) {
            auto &label = label_of_root[find(v)];
            if (label == 0)
                label = ++next;
            out[v] = label;
        }
        return next;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace covnum
