#include "doctest.h"

#include "covnum/constructions.hpp"
#include "covnum/cover.hpp"
#include "covnum/error.hpp"
#include "oracles.hpp"

using namespace covnum;

TEST_CASE("cyclic biclique structure and covers")
{
    for (int kk = 2; kk <= 6; ++kk) {
        CAPTURE(kk);
        const auto coloring = cyclic_biclique(kk);
        CHECK(is_spanning(coloring).spanning);
        const auto table = decompose(coloring);
        for (Color c = 1; c <= kk; ++c)
            CHECK(table.count(c) == static_cast<std::uint32_t>(kk));
        CHECK(min_cover_size(table) == static_cast<std::size_t>(kk));
    }
    // x_0 y_2 in K_{3,3}: (2 - 0) mod 3 + 1 = 3
    CHECK(cyclic_biclique(3).color_at(std::vector<std::size_t>{0, 2}) == 3);
    CHECK(cyclic_biclique(3).color_at(std::vector<std::size_t>{2, 0}) == 2);
    CHECK_THROWS_AS(cyclic_biclique(1), Error);
}

TEST_CASE("truncated projective planes")
{
    const auto p2 = truncated_projective_plane(2);
    CHECK(p2.vertex_count() == 6);
    CHECK(p2.edges().size() == 4);
    CHECK(p2.r() == 3);
    REQUIRE(p2.partition());
    for (const auto &cls : *p2.partition())
        CHECK(cls.size() == 2);
    CHECK(oracle::pairwise_intersecting(p2));
    CHECK(oracle::brute_nu(p2) == 1);
    CHECK(oracle::brute_tau(p2) == 2);

    const auto p3 = truncated_projective_plane(3);
    CHECK(p3.vertex_count() == 12);
    CHECK(p3.edges().size() == 9);
    CHECK(p3.r() == 4);
    for (const auto &cls : *p3.partition())
        CHECK(cls.size() == 3);
    CHECK(oracle::pairwise_intersecting(p3));
    CHECK(oracle::brute_nu(p3) == 1);
    CHECK(oracle::brute_tau(p3) == 3);
    CHECK(min_vertex_cover(p3).size == 3);
    CHECK(max_matching(p3).size == 1);

    const auto p5 = truncated_projective_plane(5);
    CHECK(p5.vertex_count() == 30);
    CHECK(p5.edges().size() == 25);
    CHECK(is_intersecting(p5).intersecting);

    CHECK_THROWS_AS(truncated_projective_plane(4), Error);
    CHECK_THROWS_AS(truncated_projective_plane(1), Error);
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("rejection sampler")
{
    const auto shape = Shape::make(3, 4, {2, 2, 2});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_spanning_coloring(shape, seed, 1'000'000);
        CHECK(oracle::naive_spanning(a.coloring));
        CHECK(random_spanning_coloring(shape, seed, 1'000'000).coloring == a.coloring);
    }
    CHECK_FALSE(random_spanning_coloring(shape, 1, 1'000'000).coloring
                == random_spanning_coloring(shape, 2, 1'000'000).coloring);
    CHECK_THROWS_AS(random_spanning_coloring(Shape::make(2, 9, {2, 2}), 0, 100), Error);
    CHECK_THROWS_AS(random_spanning_coloring(Shape::make(3, 6, {3, 3, 3}), 0, 10), Error);
}

TEST_CASE("chain sampler")
{
    const auto shape = Shape::make(3, 6, {3, 3, 3});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_spanning_coloring_chain(shape, seed);
        CHECK(oracle::naive_spanning(a.coloring));
        CHECK(random_spanning_coloring_chain(shape, seed).coloring == a.coloring);
    }
    CHECK_THROWS_AS(random_spanning_coloring_chain(Shape::make(2, 9, {2, 2}), 0), Error);
}
