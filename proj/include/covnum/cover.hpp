#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "covnum/components.hpp"
#include "covnum/vertex_set.hpp"

namespace covnum {

/// A monochromatic component named by its color and its 1-based id.
struct ComponentRef {
    Color color = 0;
    std::uint32_t id = 0;

    friend auto operator<=>(const ComponentRef &, const ComponentRef &) = default;
};

struct Candidate {
    ComponentRef ref;
    VertexSet members;
};

/// A family of components claimed to cover every vertex. Members are kept
/// sorted by (color, id).
struct Cover {
    std::vector<ComponentRef> members;

    std::size_t size() const noexcept { return members.size(); }
};

/// Set-cover instance whose candidate sets are monochromatic components.
///
/// Built from a component table, every vertex belongs to exactly one
/// candidate per color. from_candidates() accepts arbitrary families for
/// property tests.
class CoverInstance {
public:
    static CoverInstance from_table(const ComponentTable &table);
    static CoverInstance from_rows(const ComponentRows &rows);
    /// Candidates are sorted by ref; duplicate refs are rejected.
    static CoverInstance from_candidates(std::size_t vertex_count, std::vector<Candidate> candidates);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Candidate> &candidates() const noexcept { return candidates_; }

    /// Throws covnum::Error for a ref that names no candidate.
    const Candidate &find(ComponentRef ref) const;

private:
    CoverInstance() = default;

    std::size_t vertex_count_ = 0;
    std::vector<Candidate> candidates_;
};

struct ExactCoverResult {
    /// Empty iff a budget was given and every cover is larger than it.
    std::optional<Cover> cover;
    /// Branch-and-bound nodes expanded.
    std::uint64_t nodes = 0;

    bool exceeds_budget() const noexcept { return !cover.has_value(); }
};

/// Minimum cover by branch and bound. With a budget b, returns either a
/// minimum cover (whose size is then <= b) or the exceeds-budget flag.
/// Throws covnum::Error on an empty vertex set or when some vertex lies in
/// no candidate.
ExactCoverResult min_cover_exact(const CoverInstance &instance,
                                 std::optional<std::size_t> budget = std::nullopt);

/// Repeated maximum-coverage choice, ties broken by ascending (color, id).
Cover min_cover_greedy(const CoverInstance &instance);

struct CoverValidation {
    bool valid = false;
    std::optional<std::size_t> uncovered; ///< first uncovered vertex

    explicit operator bool() const noexcept { return valid; }
};

/// Throws covnum::Error for a member that names no candidate.
CoverValidation validate_cover(const CoverInstance &instance, const Cover &cover);

/// Size of the minimum cover of a coloring's component table.
std::size_t min_cover_size(const ComponentTable &table);

} // namespace covnum
