#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "covnum/coloring.hpp"
#include "covnum/shape.hpp"

namespace covnum {

/// Per-color partitions of a vertex set. Row c (0-based; color c+1) maps
/// every vertex to a 1-based component id in 1..counts[c].
struct ComponentRows {
    std::size_t vertex_count = 0;
    std::vector<std::uint32_t> ids; ///< colors x vertex_count, row-major
    std::vector<std::uint32_t> counts;

    int colors() const noexcept { return static_cast<int>(counts.size()); }
    std::uint32_t id(Color color, std::size_t v) const
    {
        return ids[(static_cast<std::size_t>(color) - 1) * vertex_count + v];
    }
    std::span<const std::uint32_t> row(Color color) const
    {
        return {ids.data() + (static_cast<std::size_t>(color) - 1) * vertex_count, vertex_count};
    }

    /// Throws covnum::Error unless every row uses exactly the ids
    /// 1..counts[c].
    void validate() const;
};

/// Monochromatic component decomposition of an edge coloring.
class ComponentTable {
public:
    /// Wraps precomputed rows. Only the partition invariants are checked
    /// here; edge coherence is guaranteed by decompose().
    ComponentTable(Shape shape, ComponentRows rows);

    const Shape &shape() const noexcept { return shape_; }
    const ComponentRows &rows() const noexcept { return rows_; }
    std::uint32_t id(Color color, std::size_t global) const { return rows_.id(color, global); }
    std::uint32_t count(Color color) const { return rows_.counts[static_cast<std::size_t>(color) - 1]; }
    std::span<const std::uint32_t> counts() const noexcept { return rows_.counts; }

private:
    Shape shape_;
    ComponentRows rows_;
};

/// A vertex's component ids across all colors; entry i belongs to color i+1.
struct ComponentVector {
    std::vector<std::uint32_t> entries;

    friend bool operator==(const ComponentVector &, const ComponentVector &) = default;
};

/// Union-find over each color class with canonical numbering by smallest
/// member. Colors without edges yield singleton rows.
ComponentTable decompose(const EdgeColoring &coloring);

ComponentVector vector_of(const ComponentTable &table, VertexId v);
ComponentVector vector_of(const ComponentTable &table, std::size_t global);

/// Number of coordinates in which the two vectors differ.
std::size_t hamming(const ComponentVector &a, const ComponentVector &b);

} // namespace covnum
