#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "covnum/biclique.hpp"
#include "covnum/claims.hpp"
#include "covnum/constructions.hpp"
#include "covnum/error.hpp"
#include "covnum/harness.hpp"
#include "oracles.hpp"

using namespace covnum;

namespace {

SweepConfig exhaustive(Shape shape, Symmetry symmetry = Symmetry::none)
{
    SweepConfig config{.shape = std::move(shape)};
    config.symmetry = symmetry;
    return config;
}

/// K_{2,2} whose color-1 class is the path y0 x0 y1 ... x1 y0 minus x1y1.
EdgeColoring k22_path()
{
    return EdgeColoring(Shape::make(2, 2, {2, 2}), {1, 1, 1, 2});
}

std::size_t oracle_max_cross_distance(const EdgeColoring &coloring)
{
    const auto rows = oracle::flood_fill(coloring);
    const auto &shape = coloring.shape();
    std::size_t best = 0;
    for (std::size_t u = 0; u < shape.vertex_count(); ++u)
        for (std::size_t v = 0; v < shape.vertex_count(); ++v) {
            if (shape.part_of(u) == shape.part_of(v))
                continue;
            std::size_t d = 0;
            for (Color c = 1; c <= shape.k(); ++c)
                d += rows.id(c, u) != rows.id(c, v);
            best = std::max(best, d);
        }
    return best;
}

} // namespace

TEST_CASE("default budget")
{
    CHECK(default_budget(Shape::make(3, 4, {2, 2, 2})) == 2);
    CHECK(default_budget(Shape::make(3, 3, {2, 2, 2})) == 1);
    CHECK(default_budget(Shape::make(3, 2, {2, 2, 2})) == 1);
    CHECK(default_budget(Shape::make(2, 3, {3, 3})) == 3);
}

TEST_CASE("exhaustive sweeps of small shapes")
{
    const auto s = sweep(exhaustive(Shape::make(3, 4, {2, 2, 2}), Symmetry::color_canonical));
    CHECK(s.colorings > 0);
    CHECK(s.max_min_cover <= 2);
    CHECK(s.violation_count == 0);
    CHECK(s.forensics_failures == 0);

    const auto one = sweep(exhaustive(Shape::make(3, 3, {2, 2, 2})));
    CHECK(one.max_min_cover == 1);
    CHECK(one.min_min_cover == 1);
    CHECK(one.violation_count == 0);

    const auto k2 = sweep(exhaustive(Shape::make(2, 2, {3, 3})));
    CHECK(k2.max_min_cover == 2);
    CHECK(k2.violation_count == 0);
}

TEST_CASE("random sweep on K33 with three colors")
{
    SweepConfig config{.shape = Shape::make(2, 3, {3, 3})};
    config.mode = SweepMode::random;
    config.samples = 10'000;
    config.seed = 5;
    config.threads = 4;
    const auto s = sweep(config);
    CHECK(s.colorings == 10'000);
    CHECK(s.max_min_cover <= 3);
    CHECK(s.violation_count == 0);
}

TEST_CASE("color-canonical enumeration visits one coloring per color class")
{
    const std::vector<Shape> shapes{Shape::make(3, 3, {2, 2, 2}), Shape::make(2, 2, {3, 3}),
                                    Shape::make(2, 3, {3, 3}), Shape::make(3, 4, {2, 2, 2}),
                                    Shape::make(2, 3, {2, 4})};
    for (const auto &shape : shapes) {
        const auto all = sweep(exhaustive(shape));
        const auto canon = sweep(exhaustive(shape, Symmetry::color_canonical));
        std::uint64_t fact = 1;
        for (int i = 2; i <= shape.k(); ++i)
            fact *= static_cast<std::uint64_t>(i);
        CHECK(all.colorings == fact * canon.colorings);
        CHECK(all.max_min_cover == canon.max_min_cover);
        CHECK(all.min_min_cover == canon.min_min_cover);
        for (auto [size, count] : canon.histogram)
            CHECK(all.histogram.at(size) == fact * count);
    }
}

TEST_CASE("exhaustive sweep counts agree with brute enumeration")
{
    for (const auto &shape : {Shape::make(2, 2, {2, 3}), Shape::make(3, 4, {2, 2, 2}), Shape::make(2, 3, {2, 3})}) {
        const auto k = static_cast<std::uint64_t>(shape.k());
        std::uint64_t total = 1;
        for (std::uint64_t e = 0; e < shape.edge_count(); ++e)
            total *= k;
        std::uint64_t spanning = 0;
        std::vector<Color> colors(shape.edge_count());
        for (std::uint64_t m = 0; m < total; ++m) {
            auto x = m;
            for (auto &c : colors) {
                c = static_cast<Color>(x % k + 1);
                x /= k;
            }
            spanning += oracle::naive_spanning(EdgeColoring(shape, colors));
        }
        CHECK(sweep(exhaustive(shape)).colorings == spanning);
    }
    // Each color class of the cube-shaped instance is one antipodal pair.
    CHECK(sweep(exhaustive(Shape::make(3, 4, {2, 2, 2}))).colorings == 24);
}

TEST_CASE("sweep results do not depend on the thread count")
{
    for (auto mode : {SweepMode::exhaustive, SweepMode::random}) {
        SweepConfig config{.shape = Shape::make(2, 3, {3, 3})};
        config.mode = mode;
        config.samples = 500;
        config.seed = 9;
        config.budget = 2;
        config.threads = 1;
        const auto a = sweep(config);
        config.threads = 7;
        const auto b = sweep(config);
        CHECK(a.colorings == b.colorings);
        CHECK(a.retries == b.retries);
        CHECK(a.histogram == b.histogram);
        CHECK(a.violation_count == b.violation_count);
        CHECK(a.violations == b.violations);
    }
}

TEST_CASE("sweep budget violations are recorded")
{
    SweepConfig config{.shape = Shape::make(2, 3, {3, 3})};
    config.budget = 2;
    const auto s = sweep(config);
    CHECK(s.violation_count > 0);
    CHECK(s.violations.size() == std::min<std::uint64_t>(s.violation_count, config.max_recorded_violations));
    for (const auto &v : s.violations)
        CHECK(min_cover_size(decompose(v)) > 2);
}

TEST_CASE("sweep guards")
{
    SweepConfig config{.shape = Shape::make(3, 6, {3, 3, 3})};
    CHECK_THROWS_AS(sweep(config), GuardExceeded);
    CHECK(exhaustive_space(Shape::make(2, 2, {2, 2}), Symmetry::none) == 16.0L);
}

TEST_CASE("rsame claim")
{
    CHECK(check_claim_rsame(cyclic_biclique(3)).holds);
    Rng rng(71);
    for (int i = 0; i < 50; ++i)
        CHECK(check_claim_rsame(oracle::random_coloring(oracle::random_shape(rng, 12), rng)).holds);

    // Not reachable from decompose: the only edge's endpoints sit in
    // different components of its own color.
    const ComponentTable broken(Shape::make(2, 1, {1, 1}), ComponentRows{2, {1, 2}, {2}});
    const auto res = check_claim_rsame(broken);
    CHECK_FALSE(res.holds);
    CHECK(res.witness == std::vector<std::size_t>{0, 1});
    CHECK(witness_confirms(broken, res));
}

TEST_CASE("t1diff claim")
{
    const auto k33 = cyclic_biclique(3);
    CHECK(check_claim_t1diff(k33, 2).holds);
    const auto three = check_claim_t1diff(k33, 3);
    CHECK_FALSE(three.holds);
    CHECK(witness_confirms(decompose(k33), three));
    const auto mono = uniform_coloring(Shape::make(3, 1, {2, 2, 2}));
    const auto res = check_claim_t1diff(mono, 1);
    CHECK_FALSE(res.holds);
    CHECK(witness_confirms(decompose(mono), res));
}

TEST_CASE("t1diff agrees with the exact solver")
{
    Rng rng(73);
    for (int i = 0; i < 200; ++i) {
        const auto table = decompose(oracle::random_coloring(oracle::random_shape(rng, 10), rng));
        const auto exact = min_cover_size(table);
        for (std::size_t b = 0; b <= 4; ++b)
            CHECK(check_claim_t1diff(table, b).holds == (exact > b));
    }
}

TEST_CASE("samepart claim")
{
    CHECK(check_claim_samepart(cyclic_biclique(3), 1).holds);
    const auto mono = uniform_coloring(Shape::make(3, 1, {2, 2, 2}));
    const auto res = check_claim_samepart(mono, 1);
    CHECK_FALSE(res.holds);
    CHECK(witness_confirms(decompose(mono), res));
}

TEST_CASE("distance claims")
{
    const auto k33 = cyclic_biclique(3);
    const auto small = check_claim_smalldist(k33, 1);
    // Every cross pair of the cyclic K33 shares exactly one matching edge.
    CHECK(oracle_max_cross_distance(k33) == 2);
    CHECK(small.holds);
    REQUIRE(small.witness.size() == 3);
    CHECK(small.witness[2] == 2);
    CHECK_FALSE(check_claim_smalldist(k33, 0).holds);
    CHECK(witness_confirms(decompose(k33), check_claim_smalldist(k33, 0)));

    const auto mono = uniform_coloring(Shape::make(3, 1, {2, 2, 2}));
    CHECK(check_claim_smalldist(mono, 0).holds);
    const auto distr = check_claim_distr(mono, 3);
    CHECK_FALSE(distr.holds);
    CHECK(witness_confirms(decompose(mono), distr));

    Rng rng(79);
    for (int i = 0; i < 50; ++i) {
        const auto c = oracle::random_coloring(oracle::random_shape(rng, 10), rng);
        const auto d = static_cast<long>(oracle_max_cross_distance(c));
        CHECK(check_claim_smalldist(c, d - 1).holds);
        CHECK_FALSE(check_claim_smalldist(c, d - 2).holds);
        CHECK(check_claim_distr(c, d).holds);
        CHECK_FALSE(check_claim_distr(c, d + 1).holds);
    }
}

TEST_CASE("distinguishing claim")
{
    CHECK(check_claim_distinguishing(uniform_coloring(Shape::make(3, 2, {2, 2, 2}))).holds);
    CHECK_THROWS_AS(check_claim_distinguishing(cyclic_biclique(3)), Error);
    Rng rng(83);
    for (int i = 0; i < 50; ++i) {
        const auto shape = Shape::make(3, 4, {2, 2, 2});
        const auto table = decompose(oracle::random_coloring(shape, rng));
        const auto res = check_claim_distinguishing(table);
        if (!res.holds)
            CHECK(witness_confirms(table, res));
    }
}

TEST_CASE("forensics applies only where the claims do")
{
    CHECK_FALSE(forensics(decompose(cyclic_biclique(3))).applicable);
    CHECK_FALSE(forensics(decompose(uniform_coloring(Shape::make(3, 3, {2, 2, 2})))).applicable);
    const auto f = forensics(decompose(random_spanning_coloring(Shape::make(3, 4, {2, 2, 2}), 1, 1'000'000).coloring));
    CHECK(f.applicable);
    std::set<ClaimKind> kinds;
    for (const auto &r : f.report)
        kinds.insert(r.kind);
    CHECK(kinds == std::set<ClaimKind>{ClaimKind::t1diff, ClaimKind::samepart, ClaimKind::smalldist,
                                       ClaimKind::distinguishing});
    CHECK(check_all_claims(decompose(cyclic_biclique(3)), 2).size() >= 4);
}

TEST_CASE("union of bicliques")
{
    for (const auto &check : is_union_of_bicliques(cyclic_biclique(3)))
        CHECK(check.union_of_bicliques);
    const auto path = is_union_of_bicliques(k22_path());
    CHECK_FALSE(path[0].union_of_bicliques);
    REQUIRE(path[0].witness);
    CHECK(path[0].witness->actual == 2);
    CHECK(path[1].union_of_bicliques);
    for (const auto &check : is_union_of_bicliques(uniform_coloring(Shape::make(2, 1, {3, 2}))))
        CHECK(check.union_of_bicliques);
    CHECK_THROWS_AS(is_union_of_bicliques(uniform_coloring(Shape::make(3, 1, {2, 2, 2}))), Error);
}

TEST_CASE("cover_biclique_k3 examples and errors")
{
    const auto res = cover_biclique_k3(cyclic_biclique(3));
    CHECK(res.cover.size() == 3);
    CHECK(res.path == BicliqueCoverPath::biclique_union);
    CHECK_THROWS_AS(cover_biclique_k3(cyclic_biclique(2)), Error);
    CHECK_THROWS_AS(cover_biclique_k3(uniform_coloring(Shape::make(2, 3, {3, 3}))), Error);
}

TEST_CASE("cover_biclique_k3 on every spanning 3-coloring of small bicliques")
{
    std::set<BicliqueCoverPath> paths;
    for (auto parts : {std::vector<std::size_t>{3, 3}, std::vector<std::size_t>{3, 4}}) {
        const auto shape = Shape::make(2, 3, parts);
        const auto edges = shape.edge_count();
        std::uint64_t total = 1;
        for (std::uint64_t e = 0; e < edges; ++e)
            total *= 3;
        std::vector<Color> colors(edges);
        for (std::uint64_t m = 0; m < total; ++m) {
            auto x = m;
            for (auto &c : colors) {
                c = static_cast<Color>(x % 3 + 1);
                x /= 3;
            }
            const EdgeColoring coloring(shape, colors);
            if (!is_spanning(coloring).spanning)
                continue;
            const auto res = cover_biclique_k3(coloring);
            const auto instance = CoverInstance::from_table(decompose(coloring));
            CHECK(res.cover.size() <= 3);
            CHECK(res.cover.size() >= min_cover_exact(instance).cover->size());
            CHECK(validate_cover(instance, res.cover).valid);
            paths.insert(res.path);
        }
    }
    // Sides of size 3 force every class to be a union of stars.
    CHECK(paths == std::set<BicliqueCoverPath>{BicliqueCoverPath::biclique_union});
}

TEST_CASE("cover_biclique_k3 on random colorings of larger bicliques")
{
    std::map<BicliqueCoverPath, int> paths;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto m = 4 + seed % 2, n = 4 + (seed / 2) % 2;
        const auto coloring = random_spanning_coloring(Shape::make(2, 3, {m, n}), seed, 1'000'000).coloring;
        const auto res = cover_biclique_k3(coloring);
        const auto instance = CoverInstance::from_table(decompose(coloring));
        CHECK(res.cover.size() <= 3);
        CHECK(res.cover.size() >= min_cover_exact(instance).cover->size());
        CHECK(validate_cover(instance, res.cover).valid);
        ++paths[res.path];
    }
    for (auto [path, count] : paths)
        MESSAGE(path_name(path) << ": " << count);
    CHECK(paths.size() == 5);
}
