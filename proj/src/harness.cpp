#include "covnum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "covnum/claims.hpp"
#include "covnum/components.hpp"
#include "covnum/constructions.hpp"
#include "covnum/cover.hpp"
#include "covnum/error.hpp"

namespace covnum {

std::size_t default_budget(const Shape &shape)
{
    if (shape.r() == 2)
        return static_cast<std::size_t>(shape.k());
    return static_cast<std::size_t>(std::max(1, shape.k() - shape.r() + 1));
}

long double exhaustive_space(const Shape &shape, Symmetry symmetry)
{
    long double space = std::pow(static_cast<long double>(shape.k()),
                                 static_cast<long double>(shape.edge_count()));
    if (symmetry == Symmetry::color_canonical)
        for (int i = 2; i <= shape.k(); ++i)
            space /= i;
    return space;
}

namespace {

struct ChunkResult {
    std::uint64_t colorings = 0;
    std::uint64_t retries = 0;
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t violation_count = 0;
    std::vector<EdgeColoring> violations;
    std::uint64_t forensics_runs = 0;
    std::uint64_t forensics_failures = 0;
};

class Evaluator {
public:
    explicit Evaluator(const SweepConfig &config) : config_(config), budget_(config.effective_budget()) {}

    void visit(EdgeColoring coloring, ChunkResult &out) const
    {
        const Shape &shape = coloring.shape();
        const auto table = decompose(coloring);
        const auto size = min_cover_exact(CoverInstance::from_table(table)).cover->size();
        ++out.colorings;
        ++out.histogram[size];

        // Without a (t+1)-cover every claim conclusion must hold.
        const long t = shape.k() - shape.r();
        if (shape.r() >= 3 && t >= 1 && static_cast<long>(size) > t + 1) {
            ++out.forensics_runs;
            if (!forensics(table).consistent)
                ++out.forensics_failures;
        }
        if (size > budget_) {
            ++out.violation_count;
            if (out.violations.size() < config_.max_recorded_violations)
                out.violations.push_back(std::move(coloring));
        }
    }

private:
    const SweepConfig &config_;
    std::size_t budget_;
};

/// Depth-first enumeration of colorings in edge order. Branches are cut
/// when some vertex cannot see all k colors with its unassigned edges, and
/// under color-canonical symmetry only first-occurrence-ordered color
/// sequences (the lexicographic minima of their permutation classes) are
/// produced.
class Enumerator {
public:
    Enumerator(const Shape &shape, bool canonical)
        : shape_(shape), k_(static_cast<std::size_t>(shape.k())),
          r_(static_cast<std::size_t>(shape.r())), edges_(shape.edge_count()),
          canonical_(canonical), edge_vertices_(edges_ * r_), remaining_(shape.vertex_count()),
          counts_(shape.vertex_count() * k_, 0), missing_(shape.vertex_count(), k_),
          colors_(edges_, 1)
    {
        for (std::uint64_t e = 0; e < edges_; ++e)
            shape.edge_vertices(e, std::span(&edge_vertices_[e * r_], r_));
        for (int p = 0; p < shape.r(); ++p)
            for (std::size_t i = 0; i < shape.part_size(p); ++i)
                remaining_[shape.part_offset(p) + i] = shape.degree(p);
    }

    /// Assigns color c to the next edge; false if that makes some vertex
    /// unable to become spanning (the assignment is kept; call pop()).
    bool push(std::uint64_t e, Color c)
    {
        colors_[e] = c;
        bool ok = true;
        for (std::size_t i = 0; i < r_; ++i) {
            const auto v = edge_vertices_[e * r_ + i];
            --remaining_[v];
            if (counts_[v * k_ + c - 1]++ == 0)
                --missing_[v];
            ok = ok && missing_[v] <= remaining_[v];
        }
        return ok;
    }

    void pop(std::uint64_t e)
    {
        const Color c = colors_[e];
        for (std::size_t i = 0; i < r_; ++i) {
            const auto v = edge_vertices_[e * r_ + i];
            ++remaining_[v];
            if (--counts_[v * k_ + c - 1] == 0)
                ++missing_[v];
        }
    }

    /// Calls fn(colors, used) at depth `stop`, where used is the largest
    /// color assigned so far.
    template <typename Fn>
    void run(std::uint64_t e, std::size_t used, std::uint64_t stop, Fn &&fn)
    {
        if (e == stop) {
            fn(colors_, used);
            return;
        }
        // Spanning needs every color somewhere.
        if (canonical_ && edges_ - e < k_ - used)
            return;
        const std::size_t upper = canonical_ ? std::min(k_, used + 1) : k_;
        for (std::size_t c = 1; c <= upper; ++c) {
            if (push(e, static_cast<Color>(c)))
                run(e + 1, std::max(used, c), stop, fn);
            pop(e);
        }
    }

    std::uint64_t edges() const noexcept { return edges_; }

private:
    const Shape &shape_;
    std::size_t k_;
    std::size_t r_;
    std::uint64_t edges_;
    bool canonical_;
    std::vector<std::size_t> edge_vertices_;
    std::vector<std::uint64_t> remaining_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> missing_;
    std::vector<Color> colors_;
};

struct Prefix {
    std::vector<Color> colors;
    std::size_t used = 0;
};

constexpr std::size_t target_chunks = 64;

std::vector<Prefix> make_prefixes(const Shape &shape, bool canonical)
{
    std::vector<Prefix> prefixes;
    for (std::uint64_t depth = 0;; ++depth) {
        prefixes.clear();
        Enumerator en(shape, canonical);
        en.run(0, 0, depth, [&](const std::vector<Color> &colors, std::size_t used) {
            prefixes.push_back({std::vector<Color>(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(depth)), used});
        });
        if (prefixes.size() >= target_chunks || depth == shape.edge_count())
            return prefixes;
    }
}

template <typename Work>
std::vector<ChunkResult> run_chunks(std::size_t chunk_count, unsigned threads, Work &&work)
{
    std::vector<ChunkResult> results(chunk_count);
    std::vector<std::exception_ptr> errors(chunk_count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < chunk_count;) {
            try {
                work(i, results[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunk_count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();
    for (auto &err : errors)
        if (err)
            std::rethrow_exception(err);
    return results;
}

SweepSummary merge(const SweepConfig &config, std::vector<ChunkResult> &chunks)
{
    SweepSummary s;
    s.budget = config.effective_budget();
    for (auto &c : chunks) {
        s.colorings += c.colorings;
        s.retries += c.retries;
        for (auto [size, count] : c.histogram)
            s.histogram[size] += count;
        s.violation_count += c.violation_count;
        for (auto &v : c.violations)
            if (s.violations.size() < config.max_recorded_violations)
                s.violations.push_back(std::move(v));
        s.forensics_runs += c.forensics_runs;
        s.forensics_failures += c.forensics_failures;
    }
    if (!s.histogram.empty()) {
        s.min_min_cover = s.histogram.begin()->first;
        s.max_min_cover = s.histogram.rbegin()->first;
    }
    return s;
}

} // namespace

SweepSummary sweep(const SweepConfig &config)
{
    const Shape &shape = config.shape;
    const Evaluator eval(config);
    std::vector<ChunkResult> chunks;

    if (config.mode == SweepMode::exhaustive) {
        const auto space = exhaustive_space(shape, config.symmetry);
        if (space > static_cast<long double>(config.max_enum))
            throw GuardExceeded("exhaustive sweep space ~" + std::to_string(static_cast<double>(space))
                                + " exceeds limit " + std::to_string(config.max_enum));
        const bool canonical = config.symmetry == Symmetry::color_canonical;
        const auto prefixes = make_prefixes(shape, canonical);
        chunks = run_chunks(prefixes.size(), config.threads, [&](std::size_t i, ChunkResult &out) {
            Enumerator en(shape, canonical);
            const auto &prefix = prefixes[i];
            for (std::size_t e = 0; e < prefix.colors.size(); ++e)
                en.push(e, prefix.colors[e]);
            en.run(prefix.colors.size(), prefix.used, en.edges(),
                   [&](const std::vector<Color> &colors, std::size_t) {
                       eval.visit(EdgeColoring(shape, colors), out);
                   });
        });
    } else {
        const std::uint64_t total = config.samples;
        const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(total, target_chunks));
        chunks = run_chunks(count, config.threads, [&](std::size_t i, ChunkResult &out) {
            const std::uint64_t begin = total * i / count;
            const std::uint64_t end = total * (i + 1) / count;
            for (auto s = begin; s < end; ++s) {
                auto sampled = config.sampler == Sampler::chain
                                   ? random_spanning_coloring_chain(shape, config.seed + s,
                                                                    config.chain_steps,
                                                                    config.max_retries)
                                   : random_spanning_coloring(shape, config.seed + s,
                                                              config.max_retries);
                out.retries += sampled.retries;
                eval.visit(std::move(sampled.coloring), out);
            }
        });
    }
    return merge(config, chunks);
}

} // namespace covnum
