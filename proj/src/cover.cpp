#include "covnum/cover.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "covnum/error.hpp"

namespace covnum {

namespace {

std::string describe(ComponentRef ref)
{
    return "(" + std::to_string(ref.color) + "," + std::to_string(ref.id) + ")";
}

/// Iterative-deepening branch and bound over flat bitset words.
class ExactSolver {
public:
    explicit ExactSolver(const CoverInstance &instance)
        : vertices_(instance.vertex_count()), words_((vertices_ + 63) / 64),
          containing_(vertices_)
    {
        // Candidates with identical member sets are interchangeable; keep the
        // smallest ref of each.
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto &cand : instance.candidates()) {
            if (cand.members.empty() || !seen.insert(cand.members.words()).second)
                continue;
            const auto index = static_cast<std::uint32_t>(refs_.size());
            refs_.push_back(cand.ref);
            masks_.insert(masks_.end(), cand.members.words().begin(), cand.members.words().end());
            for (auto v : cand.members.elements())
                containing_[v].push_back(index);
        }
        for (std::size_t v = 0; v < vertices_; ++v)
            if (containing_[v].empty())
                throw Error("cover: vertex " + std::to_string(v) + " lies in no candidate");
    }

    std::optional<Cover> solve(std::size_t lower, std::size_t upper)
    {
        stack_.assign((upper + 1) * words_, 0);
        for (std::size_t v = 0; v < vertices_; ++v)
            stack_[v / 64] |= std::uint64_t{1} << (v % 64);
        for (std::size_t limit = lower; limit <= upper; ++limit) {
            chosen_.clear();
            if (search(0, limit)) {
                Cover cover;
                for (auto i : chosen_)
                    cover.members.push_back(refs_[i]);
                std::sort(cover.members.begin(), cover.members.end());
                return cover;
            }
        }
        return std::nullopt;
    }

    std::size_t max_candidate_size() const
    {
        std::size_t best = 0;
        for (std::size_t c = 0; c < refs_.size(); ++c) {
            std::size_t n = 0;
            for (std::size_t w = 0; w < words_; ++w)
                n += static_cast<std::size_t>(std::popcount(masks_[c * words_ + w]));
            best = std::max(best, n);
        }
        return best;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool search(std::size_t depth, std::size_t limit)
    {
        ++nodes_;
        const std::uint64_t *uncovered = &stack_[depth * words_];
        std::size_t remaining = 0;
        for (std::size_t w = 0; w < words_; ++w)
            remaining += static_cast<std::size_t>(std::popcount(uncovered[w]));
        if (remaining == 0)
            return true;
        if (depth == limit)
            return false;

        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < refs_.size(); ++c) {
            std::size_t gain = 0;
            for (std::size_t w = 0; w < words_; ++w)
                gain += static_cast<std::size_t>(std::popcount(uncovered[w] & masks_[c * words_ + w]));
            best_gain = std::max(best_gain, gain);
        }
        if (depth + (remaining + best_gain - 1) / best_gain > limit)
            return false;

        // Branch on the uncovered vertex lying in the fewest candidates.
        std::size_t pivot = vertices_;
        for (std::size_t w = 0; w < words_; ++w)
            for (auto bits = uncovered[w]; bits != 0; bits &= bits - 1) {
                const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                if (pivot == vertices_ || containing_[v].size() < containing_[pivot].size())
                    pivot = v;
            }

        std::uint64_t *next = &stack_[(depth + 1) * words_];
        for (auto c : containing_[pivot]) {
            for (std::size_t w = 0; w < words_; ++w)
                next[w] = uncovered[w] & ~masks_[c * words_ + w];
            chosen_.push_back(c);
            if (search(depth + 1, limit))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t vertices_;
    std::size_t words_;
    std::vector<ComponentRef> refs_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::uint32_t>> containing_;
    std::vector<std::uint64_t> stack_;
    std::vector<std::uint32_t> chosen_;
    std::uint64_t nodes_ = 0;
};

} // namespace

CoverInstance CoverInstance::from_rows(const ComponentRows &rows)
{
    CoverInstance inst;
    inst.vertex_count_ = rows.vertex_count;
    for (int c = 1; c <= rows.colors(); ++c) {
        const auto color = static_cast<Color>(c);
        const auto first = inst.candidates_.size();
        for (std::uint32_t id = 1; id <= rows.counts[static_cast<std::size_t>(c - 1)]; ++id)
            inst.candidates_.push_back({{color, id}, VertexSet(rows.vertex_count)});
        const auto row = rows.row(color);
        for (std::size_t v = 0; v < rows.vertex_count; ++v)
            inst.candidates_[first + row[v] - 1].members.insert(v);
    }
    return inst;
}

CoverInstance CoverInstance::from_table(const ComponentTable &table)
{
    return from_rows(table.rows());
}

CoverInstance CoverInstance::from_candidates(std::size_t vertex_count,
                                             std::vector<Candidate> candidates)
{
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate &a, const Candidate &b) { return a.ref < b.ref; });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].members.universe() != vertex_count)
            throw Error("cover instance: candidate " + describe(candidates[i].ref)
                        + " has the wrong universe");
        if (i > 0 && candidates[i].ref == candidates[i - 1].ref)
            throw Error("cover instance: duplicate candidate " + describe(candidates[i].ref));
    }
    CoverInstance inst;
    inst.vertex_count_ = vertex_count;
    inst.candidates_ = std::move(candidates);
    return inst;
}

const Candidate &CoverInstance::find(ComponentRef ref) const
{
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), ref,
                               [](const Candidate &c, ComponentRef r) { return c.ref < r; });
    if (it == candidates_.end() || it->ref != ref)
        throw Error("cover: no component " + describe(ref));
    return *it;
}

Cover min_cover_greedy(const CoverInstance &instance)
{
    VertexSet uncovered = VertexSet::full(instance.vertex_count());
    Cover cover;
    while (!uncovered.empty()) {
        const Candidate *best = nullptr;
        std::size_t best_gain = 0;
        for (const auto &cand : instance.candidates()) {
            std::size_t gain = 0;
            for (std::size_t w = 0; w < uncovered.word_count(); ++w)
                gain += static_cast<std::size_t>(
                    std::popcount(uncovered.words()[w] & cand.members.words()[w]));
            if (gain > best_gain) {
                best_gain = gain;
                best = &cand;
            }
        }
        if (best == nullptr)
            throw Error("cover: vertex " + std::to_string(*uncovered.first())
                        + " lies in no candidate");
        cover.members.push_back(best->ref);
        uncovered -= best->members;
    }
    std::sort(cover.members.begin(), cover.members.end());
    return cover;
}

ExactCoverResult min_cover_exact(const CoverInstance &instance, std::optional<std::size_t> budget)
{
    if (instance.vertex_count() == 0)
        throw Error("cover: empty vertex set");
    ExactSolver solver(instance);
    const Cover greedy = min_cover_greedy(instance);
    const auto biggest = solver.max_candidate_size();
    const std::size_t lower = (instance.vertex_count() + biggest - 1) / biggest;

    std::size_t upper = greedy.size() - 1;
    if (budget)
        upper = std::min(upper, *budget);

    ExactCoverResult result;
    if (lower <= upper)
        result.cover = solver.solve(lower, upper);
    result.nodes = solver.nodes();
    if (!result.cover && (!budget || greedy.size() <= *budget))
        result.cover = greedy;
    return result;
}

CoverValidation validate_cover(const CoverInstance &instance, const Cover &cover)
{
    VertexSet covered(instance.vertex_count());
    for (const auto &ref : cover.members)
        covered |= instance.find(ref).members;
    for (std::size_t v = 0; v < instance.vertex_count(); ++v)
        if (!covered.contains(v))
            return {false, v};
    return {true, std::nullopt};
}

std::size_t min_cover_size(const ComponentTable &table)
{
    return min_cover_exact(CoverInstance::from_table(table)).cover->size();
}

} // namespace covnum
