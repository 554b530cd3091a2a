#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "covnum/coloring.hpp"
#include "covnum/shape.hpp"

namespace covnum {

enum class SweepMode { exhaustive, random };
enum class Symmetry { none, color_canonical };
enum class Sampler { rejection, chain };

/// k - r + 1 for r >= 3 (at least 1), and k for bicliques.
std::size_t default_budget(const Shape &shape);

struct SweepConfig {
    Shape shape;
    SweepMode mode = SweepMode::exhaustive;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    Symmetry symmetry = Symmetry::none;
    std::optional<std::size_t> budget{};
    Sampler sampler = Sampler::rejection;
    /// Exhaustive mode refuses shapes whose search space (after color
    /// symmetry breaking, if enabled) exceeds this.
    std::uint64_t max_enum = 100'000'000;
    std::uint64_t max_retries = 1'000'000;
    /// Chain sampler steps; 0 picks the sampler default.
    std::uint64_t chain_steps = 0;
    unsigned threads = 1;
    std::size_t max_recorded_violations = 8;

    std::size_t effective_budget() const { return budget ? *budget : default_budget(shape); }
};

struct SweepSummary {
    std::size_t budget = 0;
    /// Spanning colorings whose minimum cover was computed.
    std::uint64_t colorings = 0;
    std::uint64_t retries = 0;
    std::size_t max_min_cover = 0;
    std::size_t min_min_cover = 0;
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t violation_count = 0;
    /// First violations in enumeration order, capped.
    std::vector<EdgeColoring> violations;
    /// Colorings with no (t+1)-cover on which the claims were re-checked.
    std::uint64_t forensics_runs = 0;
    std::uint64_t forensics_failures = 0;
};

/// Upper bound on the colorings an exhaustive sweep would enumerate.
long double exhaustive_space(const Shape &shape, Symmetry symmetry);

/// Computes the exact minimum cover of every spanning coloring visited.
/// Exhaustive mode walks all colorings (or one per color permutation
/// class); random mode draws `samples` colorings with seeds seed+i. Chunks
/// run on `threads` workers and merge in chunk order, so the summary does
/// not depend on the thread count. Throws GuardExceeded in exhaustive
/// mode when the space exceeds max_enum.
SweepSummary sweep(const SweepConfig &config);

} // namespace covnum
