#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/coloring.hpp"
#include "covnum/components.hpp"

namespace covnum {

/// The structural facts used by the upper-bound argument for
/// cov(r, r+t) = t+1. Every checker is an unconditional predicate; callers
/// decide whether the "no (t+1)-cover" hypothesis applies.
enum class ClaimKind {
    rsame,          ///< every transversal r-tuple shares a component in some color
    t1diff,         ///< no cover by `budget` components exists
    samepart,       ///< every part meets >= budget+2 components of every color
    smalldist,      ///< cross-part pairs have distance <= t+1
    distr,          ///< some cross-part pair has distance >= r
    distinguishing, ///< r = 3: each transversal triple has <= 1 distinguishing color
};

std::string_view claim_name(ClaimKind kind);

/// Witness layout by kind, all values global vertex ids unless noted:
///   rsame           the r vertices of a tuple with no shared color
///   t1diff          flattened (color, id) pairs of a cover within budget
///   samepart        (color, part, distinct component count)
///   smalldist       (u, v, distance) of the farthest cross-part pair
///   distr           (u, v, distance) of the farthest cross-part pair
///   distinguishing  (a, b, c, first color, second color)
struct ClaimResult {
    ClaimKind kind{};
    bool holds = true;
    /// budget for t1diff/samepart, t for smalldist, r for distr.
    long parameter = 0;
    std::vector<std::size_t> witness;
    std::string detail;
};

using ClaimReport = std::vector<ClaimResult>;

struct ClaimGuard {
    std::uint64_t max_tuples = 10'000'000;
};

ClaimResult check_claim_rsame(const ComponentTable &table, ClaimGuard guard = {});
ClaimResult check_claim_rsame(const EdgeColoring &coloring, ClaimGuard guard = {});

ClaimResult check_claim_t1diff(const ComponentTable &table, std::size_t budget);
ClaimResult check_claim_t1diff(const EdgeColoring &coloring, std::size_t budget);

ClaimResult check_claim_samepart(const ComponentTable &table, std::size_t budget);
ClaimResult check_claim_samepart(const EdgeColoring &coloring, std::size_t budget);

ClaimResult check_claim_smalldist(const ComponentTable &table, long t);
ClaimResult check_claim_smalldist(const EdgeColoring &coloring, long t);

ClaimResult check_claim_distr(const ComponentTable &table, long r);
ClaimResult check_claim_distr(const EdgeColoring &coloring, long r);

/// Throws covnum::Error unless r = 3.
ClaimResult check_claim_distinguishing(const ComponentTable &table, ClaimGuard guard = {});
ClaimResult check_claim_distinguishing(const EdgeColoring &coloring, ClaimGuard guard = {});

/// Re-evaluates a failing verdict's witness against the table. Returns true
/// iff the witness really demonstrates the failure.
bool witness_confirms(const ComponentTable &table, const ClaimResult &result);

/// Every claim applicable to the table's shape, with t = k - r and the
/// given cover budget.
ClaimReport check_all_claims(const ComponentTable &table, std::size_t budget);

struct ForensicsResult {
    /// False when the claims say nothing about this shape (r < 3 or t < 1).
    bool applicable = false;
    /// All applicable conclusions hold. A coloring without a (t+1)-cover
    /// must satisfy every conclusion; anything else means a solver bug.
    bool consistent = true;
    ClaimReport report;
};

/// Conclusions of the claims whose proofs apply to the shape: t1diff,
/// samepart and smalldist always, distr when t >= r, distinguishing when
/// r = 3.
ForensicsResult forensics(const ComponentTable &table);

} // namespace covnum
