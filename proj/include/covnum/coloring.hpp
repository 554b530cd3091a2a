#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "covnum/shape.hpp"

namespace covnum {

/// Total assignment of a color in 1..k to every transversal edge of a
/// shape, stored densely in lexicographic edge order.
class EdgeColoring {
public:
    /// Throws covnum::Error when the array length differs from the edge
    /// count or a value lies outside 1..k.
    EdgeColoring(Shape shape, std::vector<Color> colors);

    const Shape &shape() const noexcept { return shape_; }
    std::span<const Color> colors() const noexcept { return colors_; }
    Color color(std::uint64_t edge) const { return colors_[edge]; }
    Color color_at(std::span<const std::size_t> indices) const
    {
        return colors_[shape_.edge_index(indices)];
    }

    friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;

private:
    Shape shape_;
    std::vector<Color> colors_;
};

/// Every edge gets the same color.
EdgeColoring uniform_coloring(const Shape &shape, Color color = 1);

struct MissingColor {
    std::size_t vertex = 0; ///< global id
    Color color = 0;
};

/// Result of is_spanning. `missing` is set iff the coloring is not spanning
/// and names the first (vertex, color) pair in vertex-major order that is
/// never seen.
struct SpanningCheck {
    bool spanning = false;
    std::optional<MissingColor> missing;

    explicit operator bool() const noexcept { return spanning; }
};

SpanningCheck is_spanning(const EdgeColoring &coloring);

} // namespace covnum
