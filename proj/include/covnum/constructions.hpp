#pragma once

#include <cstdint>

#include "covnum/coloring.hpp"
#include "covnum/ryser.hpp"
#include "covnum/shape.hpp"

namespace covnum {

/// Biclique K_{kk,kk} where edge (x_i, y_j) gets color ((j - i) mod kk) + 1.
/// Every color class is a perfect matching. Throws for kk < 2.
EdgeColoring cyclic_biclique(int kk);

/// Projective plane PG(2, q) over the integers mod a prime q, with the
/// first normalized point (0,0,1) deleted together with its q+1 lines.
///
/// The result is (q+1)-uniform with q^2 edges on q^2+q vertices. Parts are
/// the deleted lines minus the deleted point; vertex ids are contiguous per
/// part, and within a part ordered by homogeneous coordinates.
GeneralHypergraph truncated_projective_plane(int q);

bool is_prime(int q);

struct SampledColoring {
    EdgeColoring coloring;
    /// Rejected draws (rejection sampler) or restarts (chain sampler).
    std::uint64_t retries = 0;
};

/// Uniform i.i.d. colors, redrawn until the coloring is spanning. Throws
/// covnum::Error when k exceeds the smallest vertex degree or when
/// max_retries draws are all rejected.
SampledColoring random_spanning_coloring(const Shape &shape, std::uint64_t seed,
                                         std::uint64_t max_retries);

/// Repairs an i.i.d. draw into a spanning coloring, then runs `steps`
/// Metropolis recolorings that stay inside the spanning set. The chain's
/// stationary law is uniform on its communicating class; use this where
/// spanning colorings are too rare for rejection. Default steps: 32 per edge.
SampledColoring random_spanning_coloring_chain(const Shape &shape, std::uint64_t seed,
                                               std::uint64_t steps = 0,
                                               std::uint64_t max_retries = 1000);

} // namespace covnum
