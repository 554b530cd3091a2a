#include "covnum/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "covnum/error.hpp"

namespace covnum {

namespace {

long long parse_int(const std::string &token, const char *what)
{
    long long value = 0;
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(std::string("expected integer for ") + what + ", got '" + token + "'");
    return value;
}

std::vector<std::string> tokens_of(const std::string &line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(tok);
    return out;
}

std::string next_nonblank_line(std::istream &in, const char *what)
{
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return line;
    throw ParseError(std::string("missing ") + what);
}

std::vector<long long> remaining_ints(std::istream &in, const char *what)
{
    std::vector<long long> out;
    for (std::string tok; in >> tok;)
        out.push_back(parse_int(tok, what));
    return out;
}

std::size_t to_size(long long v, const char *what)
{
    if (v < 0)
        throw ParseError(std::string("negative ") + what);
    return static_cast<std::size_t>(v);
}

Color to_color(long long v, int k)
{
    if (v < 1 || v > k)
        throw ParseError("color " + std::to_string(v) + " outside 1.." + std::to_string(k));
    return static_cast<Color>(v);
}

/// Validation failures while reading a file are reported as parse errors.
template <class F>
auto validated(const char *what, F &&build)
{
    try {
        return build();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace

EdgeColoring read_coloring_text(std::istream &in)
{
    const auto header = tokens_of(next_nonblank_line(in, "coloring header"));
    if (header.size() < 2)
        throw ParseError("coloring header needs 'r k n_1 ... n_r'");
    const auto r = parse_int(header[0], "r");
    const auto k = parse_int(header[1], "k");
    if (r < 2 || r > 64 || static_cast<long long>(header.size()) != r + 2)
        throw ParseError("coloring header: expected " + std::to_string(r) + " part sizes");
    std::vector<std::size_t> parts;
    for (std::size_t i = 2; i < header.size(); ++i)
        parts.push_back(to_size(parse_int(header[i], "part size"), "part size"));
    auto shape = validated("coloring", [&] {
        return Shape::make(static_cast<int>(r), static_cast<int>(k), std::move(parts));
    });

    const auto values = remaining_ints(in, "color");
    if (values.size() != shape.edge_count())
        throw ParseError("coloring: expected " + std::to_string(shape.edge_count())
                         + " colors, got " + std::to_string(values.size()));
    std::vector<Color> colors;
    colors.reserve(values.size());
    for (auto v : values)
        colors.push_back(to_color(v, shape.k()));
    return EdgeColoring(std::move(shape), std::move(colors));
}

EdgeColoring coloring_from_json(const nlohmann::json &j)
{
    try {
        const int r = j.at("r").get<int>();
        const int k = j.at("k").get<int>();
        auto parts = j.at("parts").get<std::vector<long long>>();
        std::vector<std::size_t> sizes;
        for (auto p : parts)
            sizes.push_back(to_size(p, "part size"));
        auto shape = validated("coloring", [&] { return Shape::make(r, k, std::move(sizes)); });
        const auto values = j.at("colors").get<std::vector<long long>>();
        if (values.size() != shape.edge_count())
            throw ParseError("coloring: expected " + std::to_string(shape.edge_count())
                             + " colors, got " + std::to_string(values.size()));
        std::vector<Color> colors;
        for (auto v : values)
            colors.push_back(to_color(v, k));
        return EdgeColoring(std::move(shape), std::move(colors));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("coloring JSON: ") + e.what());
    }
}

EdgeColoring read_coloring_json(std::istream &in)
{
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("coloring JSON: ") + e.what());
    }
    return coloring_from_json(j);
}

EdgeColoring read_coloring(std::istream &in)
{
    in >> std::ws;
    if (in.peek() == '{')
        return read_coloring_json(in);
    return read_coloring_text(in);
}

void write_coloring_text(std::ostream &out, const EdgeColoring &coloring)
{
    const Shape &shape = coloring.shape();
    out << shape.r() << ' ' << shape.k();
    for (auto n : shape.part_sizes())
        out << ' ' << n;
    out << '\n';
    bool first = true;
    for (auto c : coloring.colors()) {
        out << (first ? "" : " ") << c;
        first = false;
    }
    out << '\n';
}

nlohmann::json coloring_to_json(const EdgeColoring &coloring)
{
    const Shape &shape = coloring.shape();
    nlohmann::json j;
    j["r"] = shape.r();
    j["k"] = shape.k();
    j["parts"] = std::vector<std::size_t>(shape.part_sizes().begin(), shape.part_sizes().end());
    j["colors"] = std::vector<Color>(coloring.colors().begin(), coloring.colors().end());
    return j;
}

GeneralHypergraph read_hypergraph(std::istream &in)
{
    const auto header = tokens_of(next_nonblank_line(in, "hypergraph header"));
    if (header.size() != 3 && !(header.size() == 4 && header[3] == "partitioned"))
        throw ParseError("hypergraph header needs 'vertex_count edge_count r [partitioned]'");
    const auto n = to_size(parse_int(header[0], "vertex count"), "vertex count");
    const auto m = to_size(parse_int(header[1], "edge count"), "edge count");
    const auto r = parse_int(header[2], "r");
    if (r < 1 || r > 1024)
        throw ParseError("hypergraph: bad r");

    std::optional<GeneralHypergraph::Partition> partition;
    if (header.size() == 4) {
        const auto sizes = tokens_of(next_nonblank_line(in, "partition line"));
        if (static_cast<long long>(sizes.size()) != r)
            throw ParseError("hypergraph: partition line needs " + std::to_string(r) + " sizes");
        partition.emplace();
        std::size_t next = 0;
        for (const auto &tok : sizes) {
            auto &cls = partition->emplace_back();
            for (auto s = to_size(parse_int(tok, "class size"), "class size"); s > 0; --s)
                cls.push_back(next++);
        }
    }
    const auto values = remaining_ints(in, "vertex id");
    if (values.size() != m * static_cast<std::size_t>(r))
        throw ParseError("hypergraph: expected " + std::to_string(m) + " edges of "
                         + std::to_string(r) + " vertices");
    std::vector<GeneralHypergraph::Edge> edges(m);
    for (std::size_t i = 0; i < values.size(); ++i)
        edges[i / static_cast<std::size_t>(r)].push_back(to_size(values[i], "vertex id"));
    return validated("hypergraph", [&] {
        return GeneralHypergraph(n, static_cast<int>(r), std::move(edges), std::move(partition));
    });
}

void write_hypergraph(std::ostream &out, const GeneralHypergraph &h)
{
    out << h.vertex_count() << ' ' << h.edges().size() << ' ' << h.r();
    if (h.partition()) {
        std::size_t next = 0;
        for (const auto &cls : *h.partition())
            for (auto v : cls)
                if (v != next++)
                    throw Error("write_hypergraph: partition classes are not consecutive ranges");
        out << " partitioned\n";
        bool first = true;
        for (const auto &cls : *h.partition()) {
            out << (first ? "" : " ") << cls.size();
            first = false;
        }
    }
    out << '\n';
    for (const auto &e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

ColoredCompleteGraph read_graph(std::istream &in)
{
    const auto header = tokens_of(next_nonblank_line(in, "graph header"));
    if (header.size() != 2)
        throw ParseError("graph header needs 'n r'");
    const auto n = to_size(parse_int(header[0], "n"), "n");
    const auto r = parse_int(header[1], "r");
    if (r < 1 || r > 65535)
        throw ParseError("graph: bad r");
    const auto values = remaining_ints(in, "color");
    if (values.size() != ColoredCompleteGraph::pair_count(n))
        throw ParseError("graph: expected " + std::to_string(ColoredCompleteGraph::pair_count(n))
                         + " colors, got " + std::to_string(values.size()));
    std::vector<Color> colors;
    for (auto v : values)
        colors.push_back(to_color(v, static_cast<int>(r)));
    return validated("graph", [&] {
        return ColoredCompleteGraph(n, static_cast<int>(r), std::move(colors));
    });
}

void write_graph(std::ostream &out, const ColoredCompleteGraph &g)
{
    out << g.n() << ' ' << g.r() << '\n';
    bool first = true;
    for (auto c : g.colors()) {
        out << (first ? "" : " ") << c;
        first = false;
    }
    out << '\n';
}

nlohmann::json cover_to_json(const Cover &cover)
{
    auto j = nlohmann::json::array();
    for (const auto &ref : cover.members)
        j.push_back({{"color", ref.color}, {"component", ref.id}});
    return j;
}

std::string read_file(const std::string &path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace covnum
