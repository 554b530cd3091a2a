#include "covnum/coloring.hpp"

#include <string>

#include "covnum/error.hpp"

namespace covnum {

EdgeColoring::EdgeColoring(Shape shape, std::vector<Color> colors)
    : shape_(std::move(shape)), colors_(std::move(colors))
{
    if (colors_.size() != shape_.edge_count())
        throw Error("coloring: expected " + std::to_string(shape_.edge_count()) + " colors, got "
                    + std::to_string(colors_.size()));
    for (std::size_t e = 0; e < colors_.size(); ++e)
        if (colors_[e] < 1 || colors_[e] > shape_.k())
            throw Error("coloring: edge " + std::to_string(e) + " has color "
                        + std::to_string(colors_[e]) + " outside 1.."
                        + std::to_string(shape_.k()));
}

EdgeColoring uniform_coloring(const Shape &shape, Color color)
{
    return EdgeColoring(shape, std::vector<Color>(shape.edge_count(), color));
}

SpanningCheck is_spanning(const EdgeColoring &coloring)
{
    const Shape &shape = coloring.shape();
    const auto k = static_cast<std::size_t>(shape.k());
    const auto r = static_cast<std::size_t>(shape.r());
    std::vector<std::uint8_t> seen(shape.vertex_count() * k, 0);

    // Odometer over the transversal in edge order.
    std::vector<std::size_t> globals(r);
    for (std::size_t i = 0; i < r; ++i)
        globals[i] = shape.part_offset(static_cast<int>(i));
    for (auto c : coloring.colors()) {
        for (auto v : globals)
            seen[v * k + c - 1] = 1;
        for (std::size_t p = r; p-- > 0;) {
            const auto end = shape.part_offset(static_cast<int>(p)) + shape.part_size(static_cast<int>(p));
            if (++globals[p] < end)
                break;
            globals[p] = shape.part_offset(static_cast<int>(p));
        }
    }

    for (std::size_t v = 0; v < shape.vertex_count(); ++v)
        for (std::size_t c = 0; c < k; ++c)
            if (!seen[v * k + c])
                return {false, MissingColor{v, static_cast<Color>(c + 1)}};
    return {true, std::nullopt};
}

} // namespace covnum
