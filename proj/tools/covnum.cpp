// covnum: command-line front end for the monochromatic component cover
// library. Every analysis command prints one record
//   {"command", "input_digest", "result", "wall_ms"}
// rendered as a table (default), JSON or CSV.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "covnum/biclique.hpp"
#include "covnum/claims.hpp"
#include "covnum/components.hpp"
#include "covnum/constructions.hpp"
#include "covnum/cover.hpp"
#include "covnum/error.hpp"
#include "covnum/harness.hpp"
#include "covnum/io.hpp"
#include "covnum/ryser.hpp"

using nlohmann::json;
using namespace covnum;

namespace {

std::string digest(const std::string &data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string scalar_text(const json &v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

bool is_flat_array(const json &v)
{
    if (!v.is_array())
        return false;
    for (const auto &x : v)
        if (x.is_structured())
            return false;
    return true;
}

void render_table(std::ostream &out, const json &record)
{
    out << "command: " << scalar_text(record["command"]) << '\n';
    out << "input_digest: " << scalar_text(record["input_digest"]) << '\n';
    for (const auto &[key, value] : record["result"].items()) {
        if (!value.is_structured()) {
            out << key << ": " << scalar_text(value) << '\n';
        } else if (is_flat_array(value)) {
            out << key << ":";
            for (const auto &x : value)
                out << ' ' << scalar_text(x);
            out << '\n';
        } else if (value.is_array()) {
            out << key << ":\n";
            for (const auto &row : value) {
                out << "  ";
                if (is_flat_array(row)) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        out << (i ? " " : "") << scalar_text(row[i]);
                } else {
                    out << row.dump();
                }
                out << '\n';
            }
        } else {
            out << key << ": " << value.dump() << '\n';
        }
    }
    out << "wall_ms: " << record["wall_ms"].dump() << '\n';
}

void render_csv(std::ostream &out, const json &record)
{
    std::vector<std::string> keys{"command", "input_digest"};
    std::vector<std::string> values{scalar_text(record["command"]),
                                    scalar_text(record["input_digest"])};
    for (const auto &[key, value] : record["result"].items()) {
        keys.push_back(key);
        std::string cell = value.is_structured() ? value.dump() : scalar_text(value);
        if (cell.find_first_of(",\"") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : cell)
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            cell = quoted + "\"";
        }
        values.push_back(cell);
    }
    keys.push_back("wall_ms");
    values.push_back(record["wall_ms"].dump());
    for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "," : "") << keys[i];
    out << '\n';
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    out << '\n';
}

struct Options {
    std::string format = "table";
    unsigned threads = 0;
};

class Runner {
public:
    explicit Runner(const Options &opts) : opts_(opts) {}

    void emit(const std::string &command, const std::string &input_digest, json result) const
    {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        json record = {{"command", command},
                       {"input_digest", input_digest},
                       {"result", std::move(result)},
                       {"wall_ms", ms}};
        if (opts_.format == "json")
            std::cout << record.dump(2) << '\n';
        else if (opts_.format == "csv")
            render_csv(std::cout, record);
        else
            render_table(std::cout, record);
    }

private:
    const Options &opts_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("COVNUM_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

json shape_json(const Shape &shape)
{
    return {{"r", shape.r()},
            {"k", shape.k()},
            {"parts", std::vector<std::size_t>(shape.part_sizes().begin(), shape.part_sizes().end())}};
}

std::vector<std::size_t> parse_parts(const std::string &text)
{
    std::vector<std::size_t> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception &) {
            throw CLI::ValidationError("--parts", "bad part size '" + item + "'");
        }
        if (pos != item.size() || v < 0)
            throw CLI::ValidationError("--parts", "bad part size '" + item + "'");
        parts.push_back(static_cast<std::size_t>(v));
    }
    return parts;
}

EdgeColoring load_coloring(const std::string &path, std::string &content)
{
    content = read_file(path);
    std::istringstream in(content);
    return read_coloring(in);
}

json claim_json(const ClaimResult &c)
{
    return {{"claim", std::string(claim_name(c.kind))},
            {"holds", c.holds},
            {"parameter", c.parameter},
            {"witness", c.witness},
            {"detail", c.detail}};
}

json summary_json(const SweepSummary &s)
{
    json hist = json::object();
    for (auto [size, count] : s.histogram)
        hist[std::to_string(size)] = count;
    json violations = json::array();
    for (const auto &v : s.violations)
        violations.push_back(coloring_to_json(v));
    return {{"budget", s.budget},
            {"colorings", s.colorings},
            {"retries", s.retries},
            {"min_min_cover", s.min_min_cover},
            {"max_min_cover", s.max_min_cover},
            {"histogram", hist},
            {"violations", s.violation_count},
            {"violation_instances", violations},
            {"forensics_runs", s.forensics_runs},
            {"forensics_failures", s.forensics_failures}};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monochromatic component covers of spanning edge colorings"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--threads", opts.threads, "Worker threads (default: COVNUM_THREADS or all cores)");
    app.fallthrough();

    // components
    std::string file = "-";
    auto *components = app.add_subcommand("components", "Monochromatic component table");
    components->add_option("file", file, "Coloring file ('-' for stdin)");

    // cover
    bool greedy = false;
    long long budget = -1;
    auto *cover = app.add_subcommand("cover", "Minimum monochromatic component cover");
    cover->add_option("file", file, "Coloring file ('-' for stdin)");
    cover->add_flag("--greedy", greedy, "Also report the greedy cover");
    cover->add_option("--budget", budget, "Stop once the minimum is known to exceed B")
        ->check(CLI::NonNegativeNumber);

    // verify
    int vr = 3, vt = 1;
    std::string vparts, vmode = "exhaustive", vsymmetry = "none", vsampler = "rejection";
    std::uint64_t vsamples = 1000, vseed = 0, vmax_enum = 100'000'000, vmax_retries = 1'000'000,
                  vsteps = 0;
    auto *verify = app.add_subcommand("verify", "Sweep spanning colorings and record minimum covers");
    verify->add_option("--r", vr, "Number of parts")->required();
    verify->add_option("--t", vt, "Colors beyond r (k = r + t)")->required();
    verify->add_option("--parts", vparts, "Part sizes N1,...,NR")->required();
    verify->add_option("--mode", vmode)->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--samples", vsamples);
    verify->add_option("--seed", vseed);
    verify->add_option("--symmetry", vsymmetry)->check(CLI::IsMember({"none", "color"}));
    verify->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    verify->add_option("--sampler", vsampler)->check(CLI::IsMember({"rejection", "chain"}));
    verify->add_option("--chain-steps", vsteps);
    verify->add_option("--max-enum", vmax_enum);
    verify->add_option("--max-retries", vmax_retries);

    // claims
    auto *claims = app.add_subcommand("claims", "Evaluate the structural claims on a coloring");
    claims->add_option("file", file)->required();
    claims->add_option("--budget", budget)->check(CLI::NonNegativeNumber);

    // construct
    auto *construct = app.add_subcommand("construct", "Emit a named instance");
    construct->require_subcommand(1);
    int kk = 0, q = 0;
    auto *c_cyclic = construct->add_subcommand("cyclic-biclique", "Cyclic matching coloring of K_{K,K}");
    c_cyclic->add_option("K", kk)->required();
    auto *c_plane = construct->add_subcommand("truncated-plane", "PG(2,Q) minus a point");
    c_plane->add_option("Q", q)->required();
    int cr = 0, ck = 0;
    std::string cparts, csampler = "rejection";
    std::uint64_t cseed = 0, cretries = 1'000'000, csteps = 0;
    auto *c_random = construct->add_subcommand("random", "Seeded random spanning coloring");
    c_random->add_option("--r", cr)->required();
    c_random->add_option("--k", ck)->required();
    c_random->add_option("--parts", cparts)->required();
    c_random->add_option("--seed", cseed);
    c_random->add_option("--sampler", csampler)->check(CLI::IsMember({"rejection", "chain"}));
    c_random->add_option("--max-retries", cretries);
    c_random->add_option("--chain-steps", csteps);

    // transform
    auto *transform = app.add_subcommand("transform", "Ryser-side equivalence constructions");
    transform->require_subcommand(1);
    auto *t_graph = transform->add_subcommand("to-graph", "Intersecting partitioned hypergraph -> colored graph");
    t_graph->add_option("file", file)->required();
    auto *t_hyper = transform->add_subcommand("to-hypergraph", "Colored complete graph -> partite hypergraph");
    t_hyper->add_option("file", file)->required();

    // cover-biclique
    auto *cover_bic = app.add_subcommand("cover-biclique", "Case-analysis cover of a spanning 3-colored biclique");
    cover_bic->add_option("file", file)->required();

    // tau-nu
    SearchGuard guard;
    auto *taunu = app.add_subcommand("tau-nu", "Exact vertex cover and matching numbers");
    taunu->add_option("file", file)->required();
    taunu->add_option("--max-edges", guard.max_edges)->check(CLI::Range(0, 64));
    taunu->add_option("--max-vertices", guard.max_vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Runner run(opts);
    try {
        if (*components) {
            std::string content;
            const auto coloring = load_coloring(file, content);
            const auto table = decompose(coloring);
            const auto span = is_spanning(coloring);
            json vectors = json::array();
            for (std::size_t v = 0; v < coloring.shape().vertex_count(); ++v)
                vectors.push_back(vector_of(table, v).entries);
            json result = shape_json(coloring.shape());
            result["spanning"] = span.spanning;
            if (span.missing)
                result["missing"] = {{"vertex", span.missing->vertex}, {"color", span.missing->color}};
            result["component_counts"] = std::vector<std::uint32_t>(table.counts().begin(), table.counts().end());
            result["vectors"] = vectors;
            run.emit("components", digest(content), result);
        } else if (*cover) {
            std::string content;
            const auto coloring = load_coloring(file, content);
            const auto instance = CoverInstance::from_table(decompose(coloring));
            std::optional<std::size_t> b;
            if (budget >= 0)
                b = static_cast<std::size_t>(budget);
            const auto solved = min_cover_exact(instance, b);
            json result = shape_json(coloring.shape());
            result["spanning"] = is_spanning(coloring).spanning;
            if (solved.cover) {
                result["min_cover"] = solved.cover->size();
                result["cover"] = cover_to_json(*solved.cover);
            } else {
                result["exceeds_budget"] = *b;
            }
            result["nodes"] = solved.nodes;
            if (greedy) {
                const auto g = min_cover_greedy(instance);
                result["greedy_cover_size"] = g.size();
                result["greedy_cover"] = cover_to_json(g);
            }
            run.emit("cover", digest(content), result);
        } else if (*verify) {
            const int k = vr + vt;
            SweepConfig config{.shape = Shape::make(vr, k, parse_parts(vparts))};
            config.mode = vmode == "random" ? SweepMode::random : SweepMode::exhaustive;
            config.samples = vsamples;
            config.seed = vseed;
            config.symmetry = vsymmetry == "color" ? Symmetry::color_canonical : Symmetry::none;
            if (budget >= 0)
                config.budget = static_cast<std::size_t>(budget);
            config.sampler = vsampler == "chain" ? Sampler::chain : Sampler::rejection;
            config.chain_steps = vsteps;
            config.max_enum = vmax_enum;
            config.max_retries = vmax_retries;
            config.threads = resolve_threads(opts.threads);
            const auto summary = sweep(config);
            json result = shape_json(config.shape);
            result["mode"] = vmode;
            result["symmetry"] = vsymmetry;
            result["seed"] = vseed;
            if (config.mode == SweepMode::random) {
                result["samples"] = vsamples;
                result["sampler"] = vsampler;
            }
            result.update(summary_json(summary));
            std::ostringstream params;
            params << "verify " << vr << ' ' << vt << ' ' << vparts << ' ' << vmode << ' ' << vsamples
                   << ' ' << vseed << ' ' << vsymmetry << ' ' << budget << ' ' << vsampler << ' ' << vsteps;
            run.emit("verify", digest(params.str()), result);
        } else if (*claims) {
            std::string content;
            const auto coloring = load_coloring(file, content);
            const auto table = decompose(coloring);
            const auto b = budget >= 0 ? static_cast<std::size_t>(budget) : default_budget(coloring.shape());
            json list = json::array();
            for (const auto &c : check_all_claims(table, b))
                list.push_back(claim_json(c));
            json result = shape_json(coloring.shape());
            result["spanning"] = is_spanning(coloring).spanning;
            result["budget"] = b;
            result["claims"] = list;
            if (coloring.shape().r() == 2) {
                json bic = json::array();
                for (const auto &check : is_union_of_bicliques(coloring)) {
                    json entry = {{"color", check.color}, {"union_of_bicliques", check.union_of_bicliques}};
                    if (check.witness)
                        entry["witness"] = {{"component", check.witness->component},
                                            {"x", check.witness->x},
                                            {"y", check.witness->y},
                                            {"actual", check.witness->actual}};
                    bic.push_back(entry);
                }
                result["bicliques"] = bic;
            }
            run.emit("claims", digest(content), result);
        } else if (*construct) {
            if (*c_cyclic || *c_random) {
                EdgeColoring coloring = *c_cyclic
                    ? cyclic_biclique(kk)
                    : [&] {
                          auto shape = Shape::make(cr, ck, parse_parts(cparts));
                          return (csampler == "chain"
                                      ? random_spanning_coloring_chain(shape, cseed, csteps, cretries)
                                      : random_spanning_coloring(shape, cseed, cretries))
                              .coloring;
                      }();
                if (opts.format == "json")
                    std::cout << coloring_to_json(coloring).dump() << '\n';
                else
                    write_coloring_text(std::cout, coloring);
            } else {
                write_hypergraph(std::cout, truncated_projective_plane(q));
            }
        } else if (*transform) {
            const auto content = read_file(file);
            std::istringstream in(content);
            if (*t_graph)
                write_graph(std::cout, to_colored_graph(read_hypergraph(in)));
            else
                write_hypergraph(std::cout, to_partite_hypergraph(read_graph(in)));
        } else if (*cover_bic) {
            std::string content;
            const auto coloring = load_coloring(file, content);
            const auto res = cover_biclique_k3(coloring);
            const bool valid = validate_cover(CoverInstance::from_table(decompose(coloring)), res.cover).valid;
            json result = shape_json(coloring.shape());
            result["cover_size"] = res.cover.size();
            result["cover"] = cover_to_json(res.cover);
            result["valid"] = valid;
            result["path"] = std::string(path_name(res.path));
            result["proof_case"] = res.proof_case;
            run.emit("cover-biclique", digest(content), result);
        } else if (*taunu) {
            const auto content = read_file(file);
            std::istringstream in(content);
            const auto h = read_hypergraph(in);
            const auto tau = min_vertex_cover(h, guard);
            const auto nu = max_matching(h, guard);
            const auto inter = is_intersecting(h);
            json result = {{"vertex_count", h.vertex_count()},
                           {"edge_count", h.edges().size()},
                           {"r", h.r()},
                           {"tau", tau.size},
                           {"vertex_cover", tau.vertices},
                           {"nu", nu.size},
                           {"matching", nu.edges},
                           {"intersecting", inter.intersecting}};
            if (h.partition())
                result["ryser_bound_holds"] = tau.size <= static_cast<std::size_t>(h.r() - 1) * nu.size;
            run.emit("tau-nu", digest(content), result);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "covnum: " << e.what() << '\n';
        return 2;
    } catch (const covnum::Error &e) {
        std::cerr << "covnum: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
