#include "covnum/ryser.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "covnum/error.hpp"
#include "covnum/union_find.hpp"

namespace covnum {

GeneralHypergraph::GeneralHypergraph(std::size_t vertex_count, int r, std::vector<Edge> edges,
                                     std::optional<Partition> partition)
    : vertex_count_(vertex_count), r_(r), edges_(std::move(edges)),
      partition_(std::move(partition))
{
    if (r < 1)
        throw Error("hypergraph: r must be positive");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto &e = edges_[i];
        std::sort(e.begin(), e.end());
        if (e.size() != static_cast<std::size_t>(r))
            throw Error("hypergraph: edge " + std::to_string(i) + " has " + std::to_string(e.size())
                        + " vertices, expected " + std::to_string(r));
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error("hypergraph: edge " + std::to_string(i) + " repeats a vertex");
        if (e.back() >= vertex_count_)
            throw Error("hypergraph: edge " + std::to_string(i) + " names vertex "
                        + std::to_string(e.back()) + " out of range");
    }
    if (!partition_)
        return;

    if (partition_->size() != static_cast<std::size_t>(r))
        throw Error("hypergraph: partition must have " + std::to_string(r) + " classes");
    part_of_.assign(vertex_count_, -1);
    for (std::size_t p = 0; p < partition_->size(); ++p)
        for (auto v : (*partition_)[p]) {
            if (v >= vertex_count_)
                throw Error("hypergraph: partition names vertex " + std::to_string(v)
                            + " out of range");
            if (part_of_[v] != -1)
                throw Error("hypergraph: vertex " + std::to_string(v) + " in two classes");
            part_of_[v] = static_cast<int>(p);
        }
    for (std::size_t v = 0; v < vertex_count_; ++v)
        if (part_of_[v] == -1)
            throw Error("hypergraph: vertex " + std::to_string(v) + " in no class");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        std::vector<int> parts;
        for (auto v : edges_[i])
            parts.push_back(part_of_[v]);
        std::sort(parts.begin(), parts.end());
        if (std::adjacent_find(parts.begin(), parts.end()) != parts.end())
            throw Error("hypergraph: edge " + std::to_string(i) + " is not a transversal");
    }
}

int GeneralHypergraph::part_of(std::size_t v) const
{
    if (!partition_)
        throw Error("hypergraph: no partition");
    return part_of_.at(v);
}

ColoredCompleteGraph::ColoredCompleteGraph(std::size_t n, int r, std::vector<Color> colors)
    : n_(n), r_(r), colors_(std::move(colors))
{
    if (r < 1)
        throw Error("graph: r must be positive");
    if (colors_.size() != pair_count(n))
        throw Error("graph: expected " + std::to_string(pair_count(n)) + " pair colors, got "
                    + std::to_string(colors_.size()));
    for (auto c : colors_)
        if (c < 1 || c > r)
            throw Error("graph: color " + std::to_string(c) + " outside 1.." + std::to_string(r));
}

std::size_t ColoredCompleteGraph::pair_index(std::size_t n, std::size_t u, std::size_t v)
{
    if (u > v)
        std::swap(u, v);
    if (u == v || v >= n)
        throw Error("graph: invalid pair");
    // Pairs (0,*) come first: row u starts after u rows of decreasing length.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

namespace {

void check_guard(const GeneralHypergraph &h, const SearchGuard &guard)
{
    if (guard.max_edges > 64)
        throw Error("search guard: max_edges cannot exceed 64");
    if (h.edges().size() > guard.max_edges)
        throw GuardExceeded("hypergraph has " + std::to_string(h.edges().size())
                            + " edges, exact search limit is " + std::to_string(guard.max_edges));
    if (h.vertex_count() > guard.max_vertices)
        throw GuardExceeded("hypergraph has " + std::to_string(h.vertex_count())
                            + " vertices, exact search limit is "
                            + std::to_string(guard.max_vertices));
}

/// incidence[v]: mask of edges containing v.
std::vector<std::uint64_t> incidence(const GeneralHypergraph &h)
{
    std::vector<std::uint64_t> inc(h.vertex_count(), 0);
    for (std::size_t e = 0; e < h.edges().size(); ++e)
        for (auto v : h.edges()[e])
            inc[v] |= std::uint64_t{1} << e;
    return inc;
}

/// conflict[e]: mask of edges meeting e, e included.
std::vector<std::uint64_t> conflicts(const GeneralHypergraph &h,
                                     const std::vector<std::uint64_t> &inc)
{
    std::vector<std::uint64_t> out(h.edges().size(), 0);
    for (std::size_t e = 0; e < h.edges().size(); ++e)
        for (auto v : h.edges()[e])
            out[e] |= inc[v];
    return out;
}

std::uint64_t all_edges(std::size_t m)
{
    return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

struct MatchingSearch {
    const std::vector<std::uint64_t> &conflict;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;

    void run(std::uint64_t open)
    {
        if (open == 0) {
            if (chosen.size() > best.size())
                best = chosen;
            return;
        }
        if (chosen.size() + static_cast<std::size_t>(std::popcount(open)) <= best.size())
            return;
        const auto e = static_cast<std::size_t>(std::countr_zero(open));
        chosen.push_back(e);
        run(open & ~conflict[e]);
        chosen.pop_back();
        run(open & ~(std::uint64_t{1} << e));
    }
};

struct CoverSearch {
    const GeneralHypergraph &h;
    const std::vector<std::uint64_t> &inc;
    const std::vector<std::uint64_t> &conflict;
    std::uint64_t all;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    bool found = false;

    void run(std::uint64_t covered)
    {
        const std::uint64_t open = all & ~covered;
        if (open == 0) {
            if (!found || chosen.size() < best.size()) {
                best = chosen;
                found = true;
            }
            return;
        }
        // Pairwise disjoint open edges each need their own cover vertex.
        std::size_t lower = 0;
        for (auto rest = open; rest != 0; ++lower)
            rest &= ~conflict[static_cast<std::size_t>(std::countr_zero(rest))];
        if (found && chosen.size() + lower >= best.size())
            return;
        const auto e = static_cast<std::size_t>(std::countr_zero(open));
        for (auto v : h.edges()[e]) {
            chosen.push_back(v);
            run(covered | inc[v]);
            chosen.pop_back();
        }
    }
};

} // namespace

MatchingResult max_matching(const GeneralHypergraph &h, SearchGuard guard)
{
    check_guard(h, guard);
    const auto inc = incidence(h);
    const auto conflict = conflicts(h, inc);
    MatchingSearch search{conflict, {}, {}};
    search.run(all_edges(h.edges().size()));
    return {search.best.size(), search.best};
}

VertexCoverResult min_vertex_cover(const GeneralHypergraph &h, SearchGuard guard)
{
    check_guard(h, guard);
    const auto inc = incidence(h);
    const auto conflict = conflicts(h, inc);
    CoverSearch search{h, inc, conflict, all_edges(h.edges().size()), {}, {}, false};
    search.run(0);
    std::sort(search.best.begin(), search.best.end());
    return {search.best.size(), search.best};
}

IntersectingCheck is_intersecting(const GeneralHypergraph &h)
{
    const auto &edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(),
                                  edges[j].end(), std::back_inserter(common));
            if (common.empty())
                return {false, std::pair{i, j}};
        }
    return {true, std::nullopt};
}

ColoredCompleteGraph to_colored_graph(const GeneralHypergraph &h)
{
    if (!h.partition())
        throw Error("to_colored_graph: hypergraph is not partitioned");
    if (auto check = is_intersecting(h); !check)
        throw Error("to_colored_graph: edges " + std::to_string(check.disjoint_pair->first)
                    + " and " + std::to_string(check.disjoint_pair->second) + " are disjoint");

    const auto m = h.edges().size();
    const auto r = static_cast<std::size_t>(h.r());
    // by_part[e * r + p]: the vertex of edge e in part p.
    std::vector<std::size_t> by_part(m * r);
    for (std::size_t e = 0; e < m; ++e)
        for (auto v : h.edges()[e])
            by_part[e * r + static_cast<std::size_t>(h.part_of(v))] = v;

    std::vector<Color> colors;
    colors.reserve(ColoredCompleteGraph::pair_count(m));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t w = u + 1; w < m; ++w) {
            std::size_t p = 0;
            while (by_part[u * r + p] != by_part[w * r + p])
                ++p;
            colors.push_back(static_cast<Color>(p + 1));
        }
    return ColoredCompleteGraph(m, h.r(), std::move(colors));
}

ComponentRows graph_components(const ColoredCompleteGraph &g)
{
    const auto n = g.n();
    const auto r = static_cast<std::size_t>(g.r());
    std::vector<UnionFind> sets(r, UnionFind(n));
    std::size_t pair = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            sets[g.colors()[pair++] - 1].unite(u, v);

    ComponentRows rows;
    rows.vertex_count = n;
    rows.ids.resize(r * n);
    rows.counts.resize(r);
    for (std::size_t c = 0; c < r; ++c)
        rows.counts[c] = sets[c].canonical_labels(rows.ids.data() + c * n);
    return rows;
}

GeneralHypergraph to_partite_hypergraph(const ColoredCompleteGraph &g)
{
    const auto rows = graph_components(g);
    const auto r = static_cast<std::size_t>(g.r());
    std::vector<std::size_t> offset(r + 1, 0);
    for (std::size_t c = 0; c < r; ++c)
        offset[c + 1] = offset[c] + rows.counts[c];

    GeneralHypergraph::Partition partition(r);
    for (std::size_t c = 0; c < r; ++c)
        for (auto x = offset[c]; x < offset[c + 1]; ++x)
            partition[c].push_back(x);

    std::vector<GeneralHypergraph::Edge> edges;
    std::set<GeneralHypergraph::Edge> seen;
    for (std::size_t v = 0; v < g.n(); ++v) {
        GeneralHypergraph::Edge e(r);
        for (std::size_t c = 0; c < r; ++c)
            e[c] = offset[c] + rows.id(static_cast<Color>(c + 1), v) - 1;
        if (seen.insert(e).second)
            edges.push_back(std::move(e));
    }
    return GeneralHypergraph(offset[r], g.r(), std::move(edges), std::move(partition));
}

ComponentRef component_of_partite_vertex(const ComponentRows &components, std::size_t vertex)
{
    std::size_t base = 0;
    for (std::size_t c = 0; c < components.counts.size(); ++c) {
        if (vertex < base + components.counts[c])
            return {static_cast<Color>(c + 1), static_cast<std::uint32_t>(vertex - base + 1)};
        base += components.counts[c];
    }
    throw Error("partite vertex " + std::to_string(vertex) + " out of range");
}

ExactCoverResult min_component_cover(const ColoredCompleteGraph &g)
{
    return min_cover_exact(CoverInstance::from_rows(graph_components(g)));
}

std::vector<std::size_t> vertex_cover_from_component_cover(const GeneralHypergraph &h,
                                                           const Cover &cover)
{
    const auto g = to_colored_graph(h);
    const auto rows = graph_components(g);
    if (!validate_cover(CoverInstance::from_rows(rows), cover))
        throw Error("vertex_cover_from_component_cover: cover does not cover the graph");

    std::vector<std::size_t> out;
    for (const auto &ref : cover.members) {
        const auto row = rows.row(ref.color);
        const auto u = static_cast<std::size_t>(std::find(row.begin(), row.end(), ref.id) - row.begin());
        for (auto v : h.edges()[u])
            if (h.part_of(v) == ref.color - 1)
                out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cover component_cover_from_vertex_cover(const ColoredCompleteGraph &g,
                                        const std::vector<std::size_t> &vertices)
{
    const auto rows = graph_components(g);
    Cover cover;
    for (auto x : vertices)
        cover.members.push_back(component_of_partite_vertex(rows, x));
    std::sort(cover.members.begin(), cover.members.end());
    cover.members.erase(std::unique(cover.members.begin(), cover.members.end()),
                        cover.members.end());
    return cover;
}

bool is_vertex_cover(const GeneralHypergraph &h, const std::vector<std::size_t> &vertices)
{
    for (const auto &e : h.edges()) {
        bool hit = false;
        for (auto v : vertices)
            hit = hit || std::binary_search(e.begin(), e.end(), v);
        if (!hit)
            return false;
    }
    return true;
}

bool is_matching(const GeneralHypergraph &h, const std::vector<std::size_t> &edges)
{
    std::vector<std::uint8_t> used(h.vertex_count(), 0);
    for (auto i : edges) {
        if (i >= h.edges().size())
            return false;
        for (auto v : h.edges()[i]) {
            if (used[v])
                return false;
            used[v] = 1;
        }
    }
    return true;
}

} // namespace covnum
