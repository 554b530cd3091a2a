#include "covnum/biclique.hpp"

#include <algorithm>
#include <string>

#include "covnum/components.hpp"
#include "covnum/error.hpp"

namespace covnum {

std::string_view path_name(BicliqueCoverPath path)
{
    switch (path) {
    case BicliqueCoverPath::biclique_union: return "biclique_union";
    case BicliqueCoverPath::shared_component: return "shared_component";
    case BicliqueCoverPath::single_subcover: return "single_subcover";
    case BicliqueCoverPath::three_components: return "three_components";
    case BicliqueCoverPath::third_color_pair: return "third_color_pair";
    }
    return "unknown";
}

namespace {

std::vector<BicliqueColorCheck> check_bicliques(const EdgeColoring &coloring,
                                                const ComponentTable &table)
{
    const Shape &shape = coloring.shape();
    const auto m = shape.part_size(0);
    const auto n = shape.part_size(1);
    std::vector<BicliqueColorCheck> out;
    for (int c = 1; c <= shape.k(); ++c) {
        const auto color = static_cast<Color>(c);
        BicliqueColorCheck check{color, true, std::nullopt};
        for (std::size_t x = 0; x < m && check.union_of_bicliques; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const auto gy = m + y;
                const auto actual = coloring.color(x * n + y);
                if (table.id(color, x) == table.id(color, gy) && actual != color) {
                    check.union_of_bicliques = false;
                    check.witness = BicliqueWitness{table.id(color, x), x, gy, actual};
                    break;
                }
            }
        out.push_back(check);
    }
    return out;
}

Cover make_cover(std::vector<ComponentRef> refs)
{
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    return Cover{std::move(refs)};
}

} // namespace

std::vector<BicliqueColorCheck> is_union_of_bicliques(const EdgeColoring &coloring)
{
    if (coloring.shape().r() != 2)
        throw Error("biclique check needs r = 2, got " + std::to_string(coloring.shape().r()));
    return check_bicliques(coloring, decompose(coloring));
}

BicliqueCoverResult cover_biclique_k3(const EdgeColoring &coloring)
{
    const Shape &shape = coloring.shape();
    if (shape.r() != 2 || shape.k() != 3)
        throw Error("cover_biclique_k3 needs r = 2 and k = 3");
    if (!is_spanning(coloring))
        throw Error("cover_biclique_k3: coloring is not spanning");

    const auto table = decompose(coloring);
    const auto instance = CoverInstance::from_table(table);
    const auto checks = check_bicliques(coloring, table);

    auto broken = std::find_if(checks.begin(), checks.end(),
                               [](const BicliqueColorCheck &c) { return !c.union_of_bicliques; });
    if (broken == checks.end()) {
        auto cover = *min_cover_exact(instance).cover;
        if (cover.size() > 3)
            throw Error("cover_biclique_k3: union-of-bicliques coloring needs "
                        + std::to_string(cover.size()) + " components");
        return {std::move(cover), BicliqueCoverPath::biclique_union, 0};
    }

    // u in X and v in Y share a component of color a, yet uv has color b.
    const Color a = broken->color;
    const Color b = broken->witness->actual;
    const auto c = static_cast<Color>(6 - a - b);
    const auto u = broken->witness->x;
    const auto v = broken->witness->y;
    auto comp = [&](Color color, std::size_t x) { return ComponentRef{color, table.id(color, x)}; };

    if (table.id(c, u) == table.id(c, v))
        return {make_cover({comp(a, u), comp(b, u), comp(c, u)}),
                BicliqueCoverPath::shared_component, 0};

    // Sub-biclique on N_c(v) x N_c(u); it has no color-c edge, otherwise
    // u and v would share their color-c component.
    const auto m = shape.part_size(0);
    const auto n = shape.part_size(1);
    std::vector<std::size_t> side_x, side_y;
    for (std::size_t x = 0; x < m; ++x)
        if (coloring.color(x * n + (v - m)) == c)
            side_x.push_back(x);
    for (std::size_t y = 0; y < n; ++y)
        if (coloring.color(u * n + y) == c)
            side_y.push_back(m + y);

    auto sub_shape = Shape::make(2, 2, {side_x.size(), side_y.size()});
    std::vector<Color> sub_colors;
    for (auto x : side_x)
        for (auto y : side_y) {
            const auto col = coloring.color(x * n + (y - m));
            if (col == c)
                throw Error("cover_biclique_k3: third color inside the sub-biclique");
            sub_colors.push_back(col == a ? 1 : 2);
        }
    const EdgeColoring sub(sub_shape, std::move(sub_colors));
    const auto sub_table = decompose(sub);
    const auto sub_cover = *min_cover_exact(CoverInstance::from_table(sub_table)).cover;
    if (sub_cover.size() > 2)
        throw Error("cover_biclique_k3: 2-colored sub-biclique needs "
                    + std::to_string(sub_cover.size()) + " components");

    auto to_global = [&](std::size_t s) {
        return s < side_x.size() ? side_x[s] : side_y[s - side_x.size()];
    };
    struct SubComponent {
        Color color;              // color in the full coloring
        std::size_t representative;
        bool has_x = false;
        bool has_y = false;
    };
    std::vector<SubComponent> parts;
    for (const auto &ref : sub_cover.members) {
        SubComponent sc{ref.color == 1 ? a : b, 0};
        bool first = true;
        for (std::size_t s = 0; s < sub_shape.vertex_count(); ++s)
            if (sub_table.id(ref.color, s) == ref.id) {
                if (first)
                    sc.representative = to_global(s);
                first = false;
                (s < side_x.size() ? sc.has_x : sc.has_y) = true;
            }
        parts.push_back(sc);
    }

    if (parts.size() == 1)
        return {make_cover({comp(a, u), comp(b, u), comp(parts[0].color, parts[0].representative)}),
                BicliqueCoverPath::single_subcover, 0};

    const auto &C = parts[0];
    const auto &D = parts[1];
    const int proof_case =
        (C.color == D.color && C.has_x && C.has_y && D.has_x && D.has_y) ? 1 : 2;

    // Either one full component swallowing the subcover joins G_a(u) and
    // G_b(u), or the two color-c components of u and v cover everything.
    std::vector<ComponentRef> extenders{comp(C.color, C.representative),
                                        comp(D.color, D.representative)};
    for (const auto *sc : {&C, &D})
        for (auto col : {a, b})
            extenders.push_back(comp(col, sc->representative));
    for (const auto &z : extenders) {
        auto cover = make_cover({comp(a, u), comp(b, u), z});
        if (validate_cover(instance, cover))
            return {std::move(cover), BicliqueCoverPath::three_components, proof_case};
    }
    auto pair = make_cover({comp(c, u), comp(c, v)});
    if (validate_cover(instance, pair))
        return {std::move(pair), BicliqueCoverPath::third_color_pair, proof_case};
    throw Error("cover_biclique_k3: case analysis produced no valid cover");
}

} // namespace covnum
