#include "covnum/shape.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "covnum/error.hpp"

namespace covnum {

Shape Shape::make(int r, int k, std::vector<std::size_t> part_sizes)
{
    if (r < 2)
        throw Error("shape: r must be at least 2, got " + std::to_string(r));
    if (k < 1)
        throw Error("shape: k must be at least 1, got " + std::to_string(k));
    if (k > std::numeric_limits<Color>::max())
        throw Error("shape: k too large");
    if (part_sizes.size() != static_cast<std::size_t>(r))
        throw Error("shape: expected " + std::to_string(r) + " part sizes, got "
                    + std::to_string(part_sizes.size()));

    Shape s;
    s.r_ = r;
    s.k_ = k;
    s.offsets_.resize(part_sizes.size());
    s.strides_.resize(part_sizes.size());

    std::uint64_t edges = 1;
    std::size_t vertices = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] == 0)
            throw Error("shape: non-positive part size in part " + std::to_string(i));
        s.offsets_[i] = vertices;
        vertices += part_sizes[i];
        if (edges > std::numeric_limits<std::uint64_t>::max() / part_sizes[i])
            throw Error("shape: edge count overflows 64 bits");
        edges *= part_sizes[i];
    }
    std::uint64_t stride = 1;
    for (std::size_t i = part_sizes.size(); i-- > 0;) {
        s.strides_[i] = stride;
        stride *= part_sizes[i];
    }
    s.sizes_ = std::move(part_sizes);
    s.vertex_count_ = vertices;
    s.edge_count_ = edges;
    return s;
}

std::uint64_t Shape::min_degree() const noexcept
{
    const auto largest = *std::max_element(sizes_.begin(), sizes_.end());
    return edge_count_ / largest;
}

std::size_t Shape::global(VertexId v) const
{
    if (v.part < 0 || v.part >= r_ || v.index >= part_size(v.part))
        throw Error("vertex out of range");
    return offsets_[static_cast<std::size_t>(v.part)] + v.index;
}

VertexId Shape::vertex(std::size_t global) const
{
    const int part = part_of(global);
    return {part, global - offsets_[static_cast<std::size_t>(part)]};
}

int Shape::part_of(std::size_t global) const
{
    if (global >= vertex_count_)
        throw Error("vertex " + std::to_string(global) + " out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::uint64_t Shape::edge_index(std::span<const std::size_t> indices) const
{
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < indices.size(); ++i)
        e += indices[i] * strides_[i];
    return e;
}

void Shape::edge_indices(std::uint64_t edge, std::span<std::size_t> indices) const
{
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        indices[i] = static_cast<std::size_t>(edge / strides_[i]);
        edge %= strides_[i];
    }
}

void Shape::edge_vertices(std::uint64_t edge, std::span<std::size_t> globals) const
{
    edge_indices(edge, globals);
    for (std::size_t i = 0; i < sizes_.size(); ++i)
        globals[i] += offsets_[i];
}

} // namespace covnum
