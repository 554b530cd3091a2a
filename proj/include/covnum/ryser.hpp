#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covnum/components.hpp"
#include "covnum/cover.hpp"

namespace covnum {

/// An r-uniform hypergraph on vertices 0..vertex_count-1, optionally with an
/// r-partition under which every edge is a transversal.
class GeneralHypergraph {
public:
    using Edge = std::vector<std::size_t>;
    using Partition = std::vector<std::vector<std::size_t>>;

    /// Edges are stored sorted. Throws covnum::Error if an edge does not
    /// have exactly r distinct in-range vertices, or if the partition is
    /// not r disjoint classes covering all vertices with transversal edges.
    GeneralHypergraph(std::size_t vertex_count, int r, std::vector<Edge> edges,
                      std::optional<Partition> partition = std::nullopt);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    int r() const noexcept { return r_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const std::optional<Partition> &partition() const noexcept { return partition_; }

    /// Class index (0-based) of a vertex; requires a partition.
    int part_of(std::size_t v) const;

private:
    std::size_t vertex_count_;
    int r_;
    std::vector<Edge> edges_;
    std::optional<Partition> partition_;
    std::vector<int> part_of_;
};

/// Complete graph on n vertices with every unordered pair colored in 1..r.
/// Pairs are stored in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
class ColoredCompleteGraph {
public:
    ColoredCompleteGraph(std::size_t n, int r, std::vector<Color> colors);

    std::size_t n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    const std::vector<Color> &colors() const noexcept { return colors_; }
    Color color(std::size_t u, std::size_t v) const { return colors_[pair_index(n_, u, v)]; }

    static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }
    static std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v);

private:
    std::size_t n_;
    int r_;
    std::vector<Color> colors_;
};

/// Limits for the exact tau / nu searches. Edge masks are single words, so
/// max_edges can never exceed 64.
struct SearchGuard {
    std::size_t max_edges = 20;
    std::size_t max_vertices = 24;
};

struct MatchingResult {
    std::size_t size = 0;
    std::vector<std::size_t> edges; ///< indices into h.edges()
};

struct VertexCoverResult {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;
};

/// Maximum matching size by branch and bound. Throws GuardExceeded.
MatchingResult max_matching(const GeneralHypergraph &h, SearchGuard guard = {});

/// Minimum vertex cover by branch and bound. Throws GuardExceeded.
VertexCoverResult min_vertex_cover(const GeneralHypergraph &h, SearchGuard guard = {});

struct IntersectingCheck {
    bool intersecting = true;
    std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;

    explicit operator bool() const noexcept { return intersecting; }
};

IntersectingCheck is_intersecting(const GeneralHypergraph &h);

/// One graph vertex per hypergraph edge; a pair is colored by the smallest
/// (1-based) part in which the two edges meet. Throws covnum::Error when h
/// is unpartitioned or not intersecting.
ColoredCompleteGraph to_colored_graph(const GeneralHypergraph &h);

/// Per-color connected components with canonical numbering.
ComponentRows graph_components(const ColoredCompleteGraph &g);

/// One vertex per monochromatic component (grouped by color, ordered by
/// id) and one edge per graph vertex listing its r components. Duplicate
/// tuples collapse to a single edge.
GeneralHypergraph to_partite_hypergraph(const ColoredCompleteGraph &g);

/// Component of g that a vertex of to_partite_hypergraph(g) stands for.
ComponentRef component_of_partite_vertex(const ComponentRows &components, std::size_t vertex);

/// Minimum cover of g's vertices by monochromatic components.
ExactCoverResult min_component_cover(const ColoredCompleteGraph &g);

/// Maps a component cover of to_colored_graph(h) to a vertex cover of h:
/// each color-i component contributes the shared part-i vertex of its
/// member edges. Throws covnum::Error if the cover is not valid.
std::vector<std::size_t> vertex_cover_from_component_cover(const GeneralHypergraph &h,
                                                           const Cover &cover);

/// Maps a vertex cover of to_partite_hypergraph(g) to the components it names.
Cover component_cover_from_vertex_cover(const ColoredCompleteGraph &g,
                                        const std::vector<std::size_t> &vertices);

bool is_vertex_cover(const GeneralHypergraph &h, const std::vector<std::size_t> &vertices);
bool is_matching(const GeneralHypergraph &h, const std::vector<std::size_t> &edges);

} // namespace covnum
