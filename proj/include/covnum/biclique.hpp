#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "covnum/coloring.hpp"
#include "covnum/cover.hpp"

namespace covnum {

struct BicliqueWitness {
    std::uint32_t component = 0;
    std::size_t x = 0; ///< global id in the first part
    std::size_t y = 0; ///< global id in the second part
    Color actual = 0;  ///< the color the pair (x, y) really has
};

struct BicliqueColorCheck {
    Color color = 0;
    bool union_of_bicliques = true;
    std::optional<BicliqueWitness> witness;
};

/// For each color of a 2-partite coloring, whether every component of that
/// color is complete bipartite in that color. Throws unless r = 2.
std::vector<BicliqueColorCheck> is_union_of_bicliques(const EdgeColoring &coloring);

enum class BicliqueCoverPath {
    biclique_union,    ///< every class is a union of bicliques; exact solver
    shared_component,  ///< u and v also share their third-color component
    single_subcover,   ///< the sub-biclique needs one component
    three_components,  ///< two u-components plus one extending the subcover
    third_color_pair,  ///< two components of the third color
};

std::string_view path_name(BicliqueCoverPath path);

struct BicliqueCoverResult {
    Cover cover;
    BicliqueCoverPath path = BicliqueCoverPath::biclique_union;
    /// 1 when the subcover is two same-color components with both sides
    /// nonempty, 2 otherwise; 0 before the case split is reached.
    int proof_case = 0;
};

/// Cover of at most three components for a spanning 3-coloring of a
/// biclique, built along the case analysis for cov(2,3) = 3. Throws
/// covnum::Error unless r = 2, k = 3 and the coloring is spanning.
BicliqueCoverResult cover_biclique_k3(const EdgeColoring &coloring);

} // namespace covnum
