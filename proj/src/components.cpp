#include "covnum/components.hpp"

#include <string>

#include "covnum/error.hpp"
#include "covnum/union_find.hpp"

namespace covnum {

void ComponentRows::validate() const
{
    if (ids.size() != counts.size() * vertex_count)
        throw Error("component rows: id array has wrong length");
    std::vector<std::uint8_t> used;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        used.assign(counts[c] + 1, 0);
        for (std::size_t v = 0; v < vertex_count; ++v) {
            const auto id = ids[c * vertex_count + v];
            if (id < 1 || id > counts[c])
                throw Error("component rows: id " + std::to_string(id) + " outside 1.."
                            + std::to_string(counts[c]) + " in row " + std::to_string(c));
            used[id] = 1;
        }
        for (std::uint32_t id = 1; id <= counts[c]; ++id)
            if (!used[id])
                throw Error("component rows: id " + std::to_string(id) + " unused in row "
                            + std::to_string(c));
    }
}

ComponentTable::ComponentTable(Shape shape, ComponentRows rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    if (rows_.vertex_count != shape_.vertex_count()
        || rows_.counts.size() != static_cast<std::size_t>(shape_.k()))
        throw Error("component table: rows do not match shape");
    rows_.validate();
}

ComponentTable decompose(const EdgeColoring &coloring)
{
    const Shape &shape = coloring.shape();
    const auto k = static_cast<std::size_t>(shape.k());
    const auto r = static_cast<std::size_t>(shape.r());
    const auto n = shape.vertex_count();

    std::vector<UnionFind> sets(k, UnionFind(n));
    std::vector<std::size_t> globals(r);
    for (std::size_t i = 0; i < r; ++i)
        globals[i] = shape.part_offset(static_cast<int>(i));
    for (auto c : coloring.colors()) {
        auto &uf = sets[c - 1];
        for (std::size_t i = 1; i < r; ++i)
            uf.unite(globals[0], globals[i]);
        for (std::size_t p = r; p-- > 0;) {
            const auto end = shape.part_offset(static_cast<int>(p)) + shape.part_size(static_cast<int>(p));
            if (++globals[p] < end)
                break;
            globals[p] = shape.part_offset(static_cast<int>(p));
        }
    }

    ComponentRows rows;
    rows.vertex_count = n;
    rows.ids.resize(k * n);
    rows.counts.resize(k);
    for (std::size_t c = 0; c < k; ++c)
        rows.counts[c] = sets[c].canonical_labels(rows.ids.data() + c * n);
    return ComponentTable(shape, std::move(rows));
}

ComponentVector vector_of(const ComponentTable &table, std::size_t global)
{
    if (global >= table.shape().vertex_count())
        throw Error("vector_of: vertex " + std::to_string(global) + " out of range");
    ComponentVector out;
    const int k = table.shape().k();
    out.entries.reserve(static_cast<std::size_t>(k));
    for (int c = 1; c <= k; ++c)
        out.entries.push_back(table.id(static_cast<Color>(c), global));
    return out;
}

ComponentVector vector_of(const ComponentTable &table, VertexId v)
{
    return vector_of(table, table.shape().global(v));
}

std::size_t hamming(const ComponentVector &a, const ComponentVector &b)
{
    if (a.entries.size() != b.entries.size())
        throw Error("hamming: vectors of length " + std::to_string(a.entries.size()) + " and "
                    + std::to_string(b.entries.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        d += a.entries[i] != b.entries[i];
    return d;
}

} // namespace covnum
