#include "covnum/claims.hpp"

#include <algorithm>
#include <string>

#include "covnum/cover.hpp"
#include "covnum/error.hpp"

namespace covnum {

std::string_view claim_name(ClaimKind kind)
{
    switch (kind) {
    case ClaimKind::rsame: return "rsame";
    case ClaimKind::t1diff: return "t1diff";
    case ClaimKind::samepart: return "samepart";
    case ClaimKind::smalldist: return "smalldist";
    case ClaimKind::distr: return "distr";
    case ClaimKind::distinguishing: return "distinguishing";
    }
    return "unknown";
}

namespace {

void check_tuple_guard(const Shape &shape, ClaimGuard guard)
{
    if (shape.edge_count() > guard.max_tuples)
        throw GuardExceeded("claim check would visit " + std::to_string(shape.edge_count())
                            + " tuples, limit is " + std::to_string(guard.max_tuples));
}

/// Number of colors in which the distance between u and v is counted.
std::size_t distance(const ComponentTable &table, std::size_t u, std::size_t v)
{
    std::size_t d = 0;
    for (int c = 1; c <= table.shape().k(); ++c)
        d += table.id(static_cast<Color>(c), u) != table.id(static_cast<Color>(c), v);
    return d;
}

struct FarPair {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t distance = 0;
};

/// Farthest cross-part pair, first in (u, v) order among ties.
FarPair farthest_cross_pair(const ComponentTable &table)
{
    const Shape &shape = table.shape();
    FarPair best;
    bool any = false;
    for (std::size_t u = 0; u < shape.vertex_count(); ++u)
        for (auto v = shape.part_offset(shape.part_of(u)) + shape.part_size(shape.part_of(u));
             v < shape.vertex_count(); ++v) {
            const auto d = distance(table, u, v);
            if (!any || d > best.distance) {
                best = {u, v, d};
                any = true;
            }
        }
    return best;
}

std::size_t distinct_in_part(const ComponentTable &table, Color color, int part)
{
    const Shape &shape = table.shape();
    std::vector<std::uint32_t> ids;
    for (std::size_t i = 0; i < shape.part_size(part); ++i)
        ids.push_back(table.id(color, shape.part_offset(part) + i));
    std::sort(ids.begin(), ids.end());
    return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

bool shares_color(const ComponentTable &table, std::span<const std::size_t> tuple)
{
    for (int c = 1; c <= table.shape().k(); ++c) {
        const auto color = static_cast<Color>(c);
        const auto id = table.id(color, tuple[0]);
        bool same = true;
        for (std::size_t i = 1; i < tuple.size() && same; ++i)
            same = table.id(color, tuple[i]) == id;
        if (same)
            return true;
    }
    return false;
}

bool distinguishes(const ComponentTable &table, Color color, std::size_t a, std::size_t b,
                   std::size_t c)
{
    const auto x = table.id(color, a), y = table.id(color, b), z = table.id(color, c);
    return x != y && y != z && x != z;
}

} // namespace

ClaimResult check_claim_rsame(const ComponentTable &table, ClaimGuard guard)
{
    const Shape &shape = table.shape();
    check_tuple_guard(shape, guard);
    ClaimResult res{ClaimKind::rsame, true, shape.r(), {}, {}};
    std::vector<std::size_t> tuple(static_cast<std::size_t>(shape.r()));
    for (std::uint64_t e = 0; e < shape.edge_count(); ++e) {
        shape.edge_vertices(e, tuple);
        if (!shares_color(table, tuple)) {
            res.holds = false;
            res.witness = tuple;
            res.detail = "transversal tuple shares no component in any color";
            return res;
        }
    }
    return res;
}

ClaimResult check_claim_t1diff(const ComponentTable &table, std::size_t budget)
{
    ClaimResult res{ClaimKind::t1diff, true, static_cast<long>(budget), {}, {}};
    const auto solved = min_cover_exact(CoverInstance::from_table(table), budget);
    if (solved.cover) {
        res.holds = false;
        for (const auto &ref : solved.cover->members) {
            res.witness.push_back(ref.color);
            res.witness.push_back(ref.id);
        }
        res.detail = "cover of size " + std::to_string(solved.cover->size()) + " within budget";
    }
    return res;
}

ClaimResult check_claim_samepart(const ComponentTable &table, std::size_t budget)
{
    const Shape &shape = table.shape();
    ClaimResult res{ClaimKind::samepart, true, static_cast<long>(budget), {}, {}};
    for (int c = 1; c <= shape.k(); ++c)
        for (int p = 0; p < shape.r(); ++p) {
            const auto distinct = distinct_in_part(table, static_cast<Color>(c), p);
            if (distinct < budget + 2) {
                res.holds = false;
                res.witness = {static_cast<std::size_t>(c), static_cast<std::size_t>(p), distinct};
                res.detail = "part meets " + std::to_string(distinct) + " components, needs "
                             + std::to_string(budget + 2);
                return res;
            }
        }
    return res;
}

ClaimResult check_claim_smalldist(const ComponentTable &table, long t)
{
    const auto far = farthest_cross_pair(table);
    ClaimResult res{ClaimKind::smalldist, true, t, {far.u, far.v, far.distance}, {}};
    res.holds = static_cast<long>(far.distance) <= t + 1;
    res.detail = "max cross-part distance " + std::to_string(far.distance);
    return res;
}

ClaimResult check_claim_distr(const ComponentTable &table, long r)
{
    const auto far = farthest_cross_pair(table);
    ClaimResult res{ClaimKind::distr, true, r, {far.u, far.v, far.distance}, {}};
    res.holds = static_cast<long>(far.distance) >= r;
    res.detail = "max cross-part distance " + std::to_string(far.distance);
    return res;
}

ClaimResult check_claim_distinguishing(const ComponentTable &table, ClaimGuard guard)
{
    const Shape &shape = table.shape();
    if (shape.r() != 3)
        throw Error("distinguishing check needs r = 3, got " + std::to_string(shape.r()));
    check_tuple_guard(shape, guard);
    ClaimResult res{ClaimKind::distinguishing, true, 3, {}, {}};
    std::vector<std::size_t> t(3);
    for (std::uint64_t e = 0; e < shape.edge_count(); ++e) {
        shape.edge_vertices(e, t);
        std::vector<std::size_t> colors;
        for (int c = 1; c <= shape.k() && colors.size() < 2; ++c)
            if (distinguishes(table, static_cast<Color>(c), t[0], t[1], t[2]))
                colors.push_back(static_cast<std::size_t>(c));
        if (colors.size() == 2) {
            res.holds = false;
            res.witness = {t[0], t[1], t[2], colors[0], colors[1]};
            res.detail = "triple has two distinguishing colors";
            return res;
        }
    }
    return res;
}

ClaimResult check_claim_rsame(const EdgeColoring &coloring, ClaimGuard guard)
{
    return check_claim_rsame(decompose(coloring), guard);
}
ClaimResult check_claim_t1diff(const EdgeColoring &coloring, std::size_t budget)
{
    return check_claim_t1diff(decompose(coloring), budget);
}
ClaimResult check_claim_samepart(const EdgeColoring &coloring, std::size_t budget)
{
    return check_claim_samepart(decompose(coloring), budget);
}
ClaimResult check_claim_smalldist(const EdgeColoring &coloring, long t)
{
    return check_claim_smalldist(decompose(coloring), t);
}
ClaimResult check_claim_distr(const EdgeColoring &coloring, long r)
{
    return check_claim_distr(decompose(coloring), r);
}
ClaimResult check_claim_distinguishing(const EdgeColoring &coloring, ClaimGuard guard)
{
    return check_claim_distinguishing(decompose(coloring), guard);
}

bool witness_confirms(const ComponentTable &table, const ClaimResult &result)
{
    if (result.holds)
        return false;
    const Shape &shape = table.shape();
    const auto &w = result.witness;
    auto in_range = [&](std::size_t v) { return v < shape.vertex_count(); };

    switch (result.kind) {
    case ClaimKind::rsame: {
        if (w.size() != static_cast<std::size_t>(shape.r()))
            return false;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!in_range(w[i]) || shape.part_of(w[i]) != static_cast<int>(i))
                return false;
        return !shares_color(table, w);
    }
    case ClaimKind::t1diff: {
        if (w.size() % 2 != 0 || w.size() / 2 > static_cast<std::size_t>(result.parameter))
            return false;
        Cover cover;
        for (std::size_t i = 0; i < w.size(); i += 2) {
            if (w[i] < 1 || w[i] > static_cast<std::size_t>(shape.k()) || w[i + 1] < 1
                || w[i + 1] > table.count(static_cast<Color>(w[i])))
                return false;
            cover.members.push_back({static_cast<Color>(w[i]), static_cast<std::uint32_t>(w[i + 1])});
        }
        return validate_cover(CoverInstance::from_table(table), cover).valid;
    }
    case ClaimKind::samepart: {
        if (w.size() != 3 || w[0] < 1 || w[0] > static_cast<std::size_t>(shape.k())
            || w[1] >= static_cast<std::size_t>(shape.r()))
            return false;
        const auto distinct = distinct_in_part(table, static_cast<Color>(w[0]), static_cast<int>(w[1]));
        return distinct == w[2] && static_cast<long>(distinct) < result.parameter + 2;
    }
    case ClaimKind::smalldist: {
        if (w.size() != 3 || !in_range(w[0]) || !in_range(w[1])
            || shape.part_of(w[0]) == shape.part_of(w[1]))
            return false;
        return static_cast<long>(distance(table, w[0], w[1])) > result.parameter + 1;
    }
    case ClaimKind::distr:
        return static_cast<long>(farthest_cross_pair(table).distance) < result.parameter;
    case ClaimKind::distinguishing: {
        if (shape.r() != 3 || w.size() != 5)
            return false;
        for (std::size_t i = 0; i < 3; ++i)
            if (!in_range(w[i]) || shape.part_of(w[i]) != static_cast<int>(i))
                return false;
        if (w[3] == w[4] || w[3] < 1 || w[4] < 1 || w[3] > static_cast<std::size_t>(shape.k())
            || w[4] > static_cast<std::size_t>(shape.k()))
            return false;
        return distinguishes(table, static_cast<Color>(w[3]), w[0], w[1], w[2])
               && distinguishes(table, static_cast<Color>(w[4]), w[0], w[1], w[2]);
    }
    }
    return false;
}

ClaimReport check_all_claims(const ComponentTable &table, std::size_t budget)
{
    const Shape &shape = table.shape();
    const long t = shape.k() - shape.r();
    ClaimReport report;
    report.push_back(check_claim_rsame(table));
    report.push_back(check_claim_t1diff(table, budget));
    report.push_back(check_claim_samepart(table, budget));
    report.push_back(check_claim_smalldist(table, t));
    report.push_back(check_claim_distr(table, shape.r()));
    if (shape.r() == 3)
        report.push_back(check_claim_distinguishing(table));
    return report;
}

ForensicsResult forensics(const ComponentTable &table)
{
    const Shape &shape = table.shape();
    const long t = shape.k() - shape.r();
    ForensicsResult out;
    if (shape.r() < 3 || t < 1)
        return out;
    out.applicable = true;
    const auto budget = static_cast<std::size_t>(t + 1);
    out.report.push_back(check_claim_t1diff(table, budget));
    out.report.push_back(check_claim_samepart(table, budget));
    out.report.push_back(check_claim_smalldist(table, t));
    if (t >= shape.r())
        out.report.push_back(check_claim_distr(table, shape.r()));
    if (shape.r() == 3)
        out.report.push_back(check_claim_distinguishing(table));
    out.consistent = std::all_of(out.report.begin(), out.report.end(),
                                 [](const ClaimResult &c) { return c.holds; });
    return out;
}

} // namespace covnum
