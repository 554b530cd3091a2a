#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "covnum/constructions.hpp"
#include "covnum/error.hpp"
#include "covnum/io.hpp"
#include "covnum/ryser.hpp"
#include "oracles.hpp"

using namespace covnum;

namespace {

GeneralHypergraph two_edge_example()
{
    // parts {a1,a2}, {b1}, {c1} as vertices 0,1 | 2 | 3
    return GeneralHypergraph(4, 3, {{0, 2, 3}, {1, 2, 3}}, GeneralHypergraph::Partition{{0, 1}, {2}, {3}});
}

ColoredCompleteGraph monochromatic(std::size_t n, int r)
{
    return ColoredCompleteGraph(n, r, std::vector<Color>(ColoredCompleteGraph::pair_count(n), 1));
}

} // namespace

TEST_CASE("hypergraph validation")
{
    CHECK_THROWS_AS(GeneralHypergraph(3, 2, {{0, 0}}), Error);
    CHECK_THROWS_AS(GeneralHypergraph(3, 2, {{0, 3}}), Error);
    CHECK_THROWS_AS(GeneralHypergraph(3, 2, {{0, 1, 2}}), Error);
    CHECK_THROWS_AS(GeneralHypergraph(4, 2, {{0, 1}}, GeneralHypergraph::Partition{{0, 1}, {2, 3}}), Error);
    CHECK_THROWS_AS(GeneralHypergraph(4, 2, {{0, 2}}, GeneralHypergraph::Partition{{0, 1}, {2}}), Error);
    const GeneralHypergraph h(4, 2, {{2, 0}}, GeneralHypergraph::Partition{{0, 1}, {2, 3}});
    CHECK(h.edges()[0] == GeneralHypergraph::Edge{0, 2});
    CHECK(h.part_of(3) == 1);
}

TEST_CASE("matching and vertex cover examples")
{
    const GeneralHypergraph empty(3, 2, {});
    CHECK(max_matching(empty).size == 0);
    CHECK(min_vertex_cover(empty).size == 0);

    const GeneralHypergraph disjoint(4, 2, {{0, 1}, {2, 3}});
    CHECK(max_matching(disjoint).size == 2);
    const auto check = is_intersecting(disjoint);
    CHECK_FALSE(check.intersecting);
    REQUIRE(check.disjoint_pair);
    CHECK(*check.disjoint_pair == std::pair<std::size_t, std::size_t>{0, 1});

    const GeneralHypergraph single(3, 3, {{0, 1, 2}});
    CHECK(min_vertex_cover(single).size == 1);
    CHECK(is_intersecting(single).intersecting);

    const auto fano = truncated_projective_plane(2);
    CHECK(max_matching(fano).size == 1);
    CHECK(oracle::brute_nu(fano) == 1);
    const auto vc = min_vertex_cover(fano);
    CHECK(vc.size == 2);
    CHECK(oracle::brute_tau(fano) == 2);
    CHECK(is_vertex_cover(fano, vc.vertices));
    CHECK(is_intersecting(fano).intersecting);
    CHECK(oracle::pairwise_intersecting(fano));
}

TEST_CASE("search guards")
{
    std::vector<GeneralHypergraph::Edge> edges;
    for (std::size_t i = 0; i < 30; ++i)
        edges.push_back({i, i + 30});
    const GeneralHypergraph big(60, 2, edges);
    CHECK_THROWS_AS(max_matching(big), GuardExceeded);
    CHECK_THROWS_AS(min_vertex_cover(big), GuardExceeded);
    CHECK_THROWS_AS(min_vertex_cover(big, {65, 100}), Error);
    CHECK(max_matching(big, {30, 60}).size == 30);
}

TEST_CASE("tau and nu agree with subset oracles")
{
    Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        const int r = 2 + static_cast<int>(rng.below(3));
        const auto h = oracle::random_partite(rng, r, 2 + rng.below(3), 8, rng.below(2) == 0);
        const auto nu = max_matching(h);
        const auto tau = min_vertex_cover(h);
        CHECK(nu.size == oracle::brute_nu(h));
        CHECK(tau.size == oracle::brute_tau(h));
        CHECK(is_matching(h, nu.edges));
        CHECK(is_vertex_cover(h, tau.vertices));
        CHECK(is_intersecting(h).intersecting == oracle::pairwise_intersecting(h));
    }
}

TEST_CASE("to_colored_graph examples")
{
    const auto g = to_colored_graph(two_edge_example());
    CHECK(g.n() == 2);
    CHECK(g.color(0, 1) == 2);

    const auto one = to_colored_graph(GeneralHypergraph(3, 3, {{0, 1, 2}}, GeneralHypergraph::Partition{{0}, {1}, {2}}));
    CHECK(one.n() == 1);
    CHECK(one.colors().empty());

    const GeneralHypergraph disjoint(4, 2, {{0, 2}, {1, 3}}, GeneralHypergraph::Partition{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(to_colored_graph(disjoint), Error);
    CHECK_THROWS_AS(to_colored_graph(GeneralHypergraph(3, 3, {{0, 1, 2}})), Error);
}

TEST_CASE("to_colored_graph colors agree with a direct intersection scan")
{
    Rng rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto h = oracle::random_partite(rng, 3, 3, 10, true);
        const auto g = to_colored_graph(h);
        for (std::size_t a = 0; a < g.n(); ++a)
            for (std::size_t b = a + 1; b < g.n(); ++b) {
                std::size_t p = 0;
                while (h.edges()[a][p] != h.edges()[b][p])
                    ++p;
                CHECK(g.color(a, b) == p + 1);
            }
    }
}

TEST_CASE("to_partite_hypergraph of a monochromatic graph")
{
    const auto h = to_partite_hypergraph(monochromatic(4, 2));
    REQUIRE(h.partition());
    CHECK((*h.partition())[0].size() == 1);
    CHECK((*h.partition())[1].size() == 4);
    CHECK(h.edges().size() == 4);
    CHECK(is_intersecting(h).intersecting);
}

TEST_CASE("graph_components examples")
{
    const auto rows = graph_components(monochromatic(5, 3));
    CHECK(rows.counts == std::vector<std::uint32_t>{1, 5, 5});

    // K4 with color 1 on the perfect matching 01, 23.
    std::vector<Color> colors(6, 2);
    colors[ColoredCompleteGraph::pair_index(4, 0, 1)] = 1;
    colors[ColoredCompleteGraph::pair_index(4, 2, 3)] = 1;
    const ColoredCompleteGraph g(4, 2, colors);
    CHECK(graph_components(g).counts[0] == 2);

    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const auto rg = oracle::random_graph(rng, 1 + rng.below(9), 2 + static_cast<int>(rng.below(3)));
        const auto got = graph_components(rg);
        const auto expected = oracle::flood_fill(rg);
        CHECK(got.ids == expected.ids);
        CHECK(got.counts == expected.counts);
    }
}

TEST_CASE("to_partite_hypergraph is always intersecting and names components")
{
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_graph(rng, 1 + rng.below(8), 2 + static_cast<int>(rng.below(3)));
        const auto h = to_partite_hypergraph(g);
        CHECK(is_intersecting(h).intersecting);
        CHECK(oracle::pairwise_intersecting(h));
        const auto rows = graph_components(g);
        for (std::size_t x = 0; x < h.vertex_count(); ++x) {
            const auto ref = component_of_partite_vertex(rows, x);
            CHECK(static_cast<int>(ref.color) == h.part_of(x) + 1);
        }
    }
}

TEST_CASE("cover transfer from graph to hypergraph")
{
    Rng rng(59);
    for (int i = 0; i < 50; ++i) {
        const auto h = oracle::random_partite(rng, 3, 3, 10, true);
        const auto g = to_colored_graph(h);
        const auto cover = min_component_cover(g);
        REQUIRE(cover.cover);
        const auto vertices = vertex_cover_from_component_cover(h, *cover.cover);
        CHECK(is_vertex_cover(h, vertices));
        CHECK(vertices.size() <= cover.cover->size());
        CHECK(min_vertex_cover(h).size <= cover.cover->size());
    }
}

TEST_CASE("cover transfer from hypergraph to graph")
{
    Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const auto g = oracle::random_graph(rng, 1 + rng.below(7), 3);
        const auto h = to_partite_hypergraph(g);
        const auto tau = min_vertex_cover(h, {64, 64});
        const auto cover = component_cover_from_vertex_cover(g, tau.vertices);
        const auto instance = CoverInstance::from_rows(graph_components(g));
        CHECK(validate_cover(instance, cover).valid);
        CHECK(min_component_cover(g).cover->size() <= tau.size);
    }
}

TEST_CASE("Ryser bound on small bipartite and 3-partite instances")
{
    Rng rng(67);
    for (int i = 0; i < 100; ++i) {
        const auto h2 = oracle::random_partite(rng, 2, 4, 12, false);
        CHECK(min_vertex_cover(h2).size <= max_matching(h2).size);
        const auto h3 = oracle::random_partite(rng, 3, 4, 12, false);
        CHECK(min_vertex_cover(h3).size <= 2 * max_matching(h3).size);
    }
}

TEST_CASE("hypergraph and graph file formats")
{
    const auto fano = truncated_projective_plane(2);
    std::stringstream ss;
    write_hypergraph(ss, fano);
    const auto back = read_hypergraph(ss);
    CHECK(back.edges() == fano.edges());
    CHECK(back.partition() == fano.partition());

    const auto g = to_colored_graph(fano);
    std::stringstream gs;
    write_graph(gs, g);
    const auto gb = read_graph(gs);
    CHECK(gb.colors() == g.colors());

    std::stringstream bad("3 1 2\n0 5\n");
    CHECK_THROWS_AS(read_hypergraph(bad), ParseError);
    std::stringstream short_graph("3 2\n1 2\n");
    CHECK_THROWS_AS(read_graph(short_graph), ParseError);
}
