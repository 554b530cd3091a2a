#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace covnum {

/// Colors are 1-based: a k-coloring uses the values 1..k.
using Color = std::uint16_t;

/// A vertex of the complete r-partite hypergraph, addressed by its part
/// (0-based) and its index inside that part (0-based).
struct VertexId {
    int part = 0;
    std::size_t index = 0;

    friend bool operator==(const VertexId &, const VertexId &) = default;
};

/// The combinatorial frame of a colored complete r-partite r-uniform
/// hypergraph: number of parts, number of colors and the part sizes.
///
/// Global vertex ids concatenate the parts in order. Edges are the
/// transversal r-tuples, indexed lexicographically with the last part
/// varying fastest.
class Shape {
public:
    /// Validates and builds a shape. Throws covnum::Error on a dimension
    /// mismatch, a non-positive part size, r < 2, k < 1, or when the edge
    /// count does not fit in 64 bits.
    static Shape make(int r, int k, std::vector<std::size_t> part_sizes);

    int r() const noexcept { return r_; }
    int k() const noexcept { return k_; }
    std::span<const std::size_t> part_sizes() const noexcept { return sizes_; }
    std::size_t part_size(int part) const { return sizes_.at(static_cast<std::size_t>(part)); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::uint64_t edge_count() const noexcept { return edge_count_; }

    /// Number of edges through any single vertex of the given part.
    std::uint64_t degree(int part) const { return edge_count_ / part_size(part); }
    std::uint64_t min_degree() const noexcept;

    std::size_t part_offset(int part) const { return offsets_.at(static_cast<std::size_t>(part)); }
    std::uint64_t stride(int part) const { return strides_.at(static_cast<std::size_t>(part)); }

    std::size_t global(VertexId v) const;
    VertexId vertex(std::size_t global) const;
    int part_of(std::size_t global) const;

    /// Edge index of the transversal whose entry i is the index in part i.
    std::uint64_t edge_index(std::span<const std::size_t> indices) const;
    /// Inverse of edge_index; `indices` must have length r.
    void edge_indices(std::uint64_t edge, std::span<std::size_t> indices) const;
    /// Like edge_indices but produces global vertex ids.
    void edge_vertices(std::uint64_t edge, std::span<std::size_t> globals) const;

    friend bool operator==(const Shape &, const Shape &) = default;

private:
    Shape() = default;

    int r_ = 0;
    int k_ = 0;
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint64_t> strides_;
    std::size_t vertex_count_ = 0;
    std::uint64_t edge_count_ = 0;
};

/// Calls fn(edge_index) for every edge containing `global`, in increasing
/// edge order.
template <typename Fn>
void for_each_incident_edge(const Shape &shape, std::size_t global, Fn &&fn)
{
    const VertexId v = shape.vertex(global);
    const int r = shape.r();
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    idx[static_cast<std::size_t>(v.part)] = v.index;
    const std::uint64_t count = shape.degree(v.part);
    for (std::uint64_t n = 0; n < count; ++n) {
        fn(shape.edge_index(idx));
        for (int p = r - 1; p >= 0; --p) {
            if (p == v.part)
                continue;
            auto &slot = idx[static_cast<std::size_t>(p)];
            if (++slot < shape.part_size(p))
                break;
            slot = 0;
        }
    }
}

} // namespace covnum
