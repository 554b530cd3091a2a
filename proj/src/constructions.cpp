#include "covnum/constructions.hpp"

#include <array>
#include <string>

#include "covnum/error.hpp"
#include "covnum/rng.hpp"

namespace covnum {

EdgeColoring cyclic_biclique(int kk)
{
    if (kk < 2)
        throw Error("cyclic_biclique: need at least 2 colors, got " + std::to_string(kk));
    const auto n = static_cast<std::size_t>(kk);
    auto shape = Shape::make(2, kk, {n, n});
    std::vector<Color> colors(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            colors[i * n + j] = static_cast<Color>((j + n - i) % n + 1);
    return EdgeColoring(std::move(shape), std::move(colors));
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

GeneralHypergraph truncated_projective_plane(int q)
{
    if (!is_prime(q))
        throw Error("truncated_projective_plane: order " + std::to_string(q) + " is not prime");

    using Triple = std::array<int, 3>;
    // Normalized homogeneous triples (first nonzero entry 1) in
    // lexicographic order; they serve both as points and as lines.
    std::vector<Triple> triples;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                const Triple t{a, b, c};
                int lead = 0;
                while (lead < 3 && t[lead] == 0)
                    ++lead;
                if (lead < 3 && t[lead] == 1)
                    triples.push_back(t);
            }
    auto incident = [q](const Triple &point, const Triple &line) {
        return (point[0] * line[0] + point[1] * line[1] + point[2] * line[2]) % q == 0;
    };

    const Triple removed = triples.front(); // (0, 0, 1)
    std::vector<std::size_t> id_of(triples.size(), SIZE_MAX);
    GeneralHypergraph::Partition partition;
    std::size_t next = 0;
    for (const auto &line : triples) {
        if (!incident(removed, line))
            continue;
        auto &cls = partition.emplace_back();
        for (std::size_t p = 1; p < triples.size(); ++p)
            if (incident(triples[p], line)) {
                id_of[p] = next++;
                cls.push_back(id_of[p]);
            }
    }

    std::vector<GeneralHypergraph::Edge> edges;
    for (const auto &line : triples) {
        if (incident(removed, line))
            continue;
        auto &edge = edges.emplace_back();
        for (std::size_t p = 1; p < triples.size(); ++p)
            if (incident(triples[p], line))
                edge.push_back(id_of[p]);
    }
    return GeneralHypergraph(next, q + 1, std::move(edges), std::move(partition));
}

namespace {

/// Flat per-edge vertex lists plus per-vertex color counts, reused across
/// draws.
class ColorCounts {
public:
    explicit ColorCounts(const Shape &shape)
        : shape_(shape), r_(static_cast<std::size_t>(shape.r())),
          k_(static_cast<std::size_t>(shape.k())), edge_vertices_(shape.edge_count() * r_),
          counts_(shape.vertex_count() * k_)
    {
        for (std::uint64_t e = 0; e < shape.edge_count(); ++e)
            shape.edge_vertices(e, std::span(&edge_vertices_[e * r_], r_));
    }

    std::span<const std::size_t> vertices(std::uint64_t e) const
    {
        return {&edge_vertices_[e * r_], r_};
    }

    void reset(const std::vector<Color> &colors)
    {
        std::fill(counts_.begin(), counts_.end(), 0);
        for (std::uint64_t e = 0; e < colors.size(); ++e)
            for (auto v : vertices(e))
                ++counts_[v * k_ + colors[e] - 1];
    }

    std::uint64_t &at(std::size_t v, Color c) { return counts_[v * k_ + c - 1]; }

    bool spanning() const
    {
        for (auto n : counts_)
            if (n == 0)
                return false;
        return true;
    }

    /// Recolor edge e if no vertex of e would lose its last edge of the old color.
    bool try_recolor(std::vector<Color> &colors, std::uint64_t e, Color to)
    {
        const Color from = colors[e];
        for (auto v : vertices(e))
            if (at(v, from) < 2)
                return false;
        for (auto v : vertices(e)) {
            --at(v, from);
            ++at(v, to);
        }
        colors[e] = to;
        return true;
    }

private:
    const Shape &shape_;
    std::size_t r_;
    std::size_t k_;
    std::vector<std::size_t> edge_vertices_;
    std::vector<std::uint64_t> counts_;
};

void require_possible(const Shape &shape)
{
    if (static_cast<std::uint64_t>(shape.k()) > shape.min_degree())
        throw Error("random_spanning_coloring: some vertex has degree "
                    + std::to_string(shape.min_degree()) + " < " + std::to_string(shape.k())
                    + " colors, no spanning coloring exists");
}

void draw(Rng &rng, const Shape &shape, std::vector<Color> &colors)
{
    const auto k = static_cast<std::uint64_t>(shape.k());
    for (auto &c : colors)
        c = static_cast<Color>(rng.below(k) + 1);
}

} // namespace

SampledColoring random_spanning_coloring(const Shape &shape, std::uint64_t seed,
                                         std::uint64_t max_retries)
{
    require_possible(shape);
    Rng rng(seed);
    ColorCounts counts(shape);
    std::vector<Color> colors(shape.edge_count());
    for (std::uint64_t attempt = 0; attempt <= max_retries; ++attempt) {
        draw(rng, shape, colors);
        counts.reset(colors);
        if (counts.spanning())
            return {EdgeColoring(shape, std::move(colors)), attempt};
    }
    throw Error("random_spanning_coloring: no spanning coloring after "
                + std::to_string(max_retries) + " retries");
}

SampledColoring random_spanning_coloring_chain(const Shape &shape, std::uint64_t seed,
                                               std::uint64_t steps, std::uint64_t max_retries)
{
    require_possible(shape);
    if (steps == 0)
        steps = 32 * shape.edge_count();

    Rng rng(seed);
    ColorCounts counts(shape);
    std::vector<std::vector<std::uint64_t>> incident(shape.vertex_count());
    for (std::size_t v = 0; v < shape.vertex_count(); ++v)
        for_each_incident_edge(shape, v, [&](std::uint64_t e) { incident[v].push_back(e); });

    std::vector<Color> colors(shape.edge_count());
    std::uint64_t restarts = 0;
    for (;;) {
        draw(rng, shape, colors);
        counts.reset(colors);
        // Each repair adds a missing color at v without removing the last
        // edge of any color at any vertex, so it never undoes earlier repairs.
        bool stuck = false;
        for (std::size_t v = 0; v < shape.vertex_count() && !stuck; ++v)
            for (int c = 1; c <= shape.k() && !stuck; ++c) {
                const auto color = static_cast<Color>(c);
                if (counts.at(v, color) > 0)
                    continue;
                const auto &edges = incident[v];
                const auto start = rng.below(edges.size());
                bool fixed = false;
                for (std::size_t i = 0; i < edges.size() && !fixed; ++i)
                    fixed = counts.try_recolor(colors, edges[(start + i) % edges.size()], color);
                stuck = !fixed;
            }
        if (!stuck)
            break;
        if (++restarts > max_retries)
            throw Error("random_spanning_coloring_chain: repair failed " + std::to_string(restarts)
                        + " times");
    }

    const auto k = static_cast<std::uint64_t>(shape.k());
    for (std::uint64_t s = 0; s < steps; ++s) {
        const auto e = rng.below(shape.edge_count());
        const auto to = static_cast<Color>(rng.below(k) + 1);
        if (to != colors[e])
            counts.try_recolor(colors, e, to);
    }
    return {EdgeColoring(shape, std::move(colors)), restarts};
}

} // namespace covnum
