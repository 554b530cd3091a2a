#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "covnum/coloring.hpp"
#include "covnum/cover.hpp"
#include "covnum/ryser.hpp"

namespace covnum {

// Coloring text format:
//   line 1: r k n_1 ... n_r
//   line 2: edge_count colors in 1..k, lexicographic edge order
// JSON: {"r": r, "k": k, "parts": [...], "colors": [...]}

EdgeColoring read_coloring_text(std::istream &in);
EdgeColoring read_coloring_json(std::istream &in);
/// Dispatches on the first non-blank character ('{' means JSON).
EdgeColoring read_coloring(std::istream &in);
void write_coloring_text(std::ostream &out, const EdgeColoring &coloring);
nlohmann::json coloring_to_json(const EdgeColoring &coloring);
EdgeColoring coloring_from_json(const nlohmann::json &j);

// Hypergraph text format:
//   line 1: vertex_count edge_count r [partitioned]
//   if partitioned, one line of r class sizes; classes are consecutive
//   vertex ranges in order
//   then one edge per line, r vertex ids

GeneralHypergraph read_hypergraph(std::istream &in);
/// Throws covnum::Error if the partition classes are not consecutive ranges.
void write_hypergraph(std::ostream &out, const GeneralHypergraph &h);

// Colored complete graph text format:
//   line 1: n r
//   then n(n-1)/2 colors in 1..r, lexicographic pair order

ColoredCompleteGraph read_graph(std::istream &in);
void write_graph(std::ostream &out, const ColoredCompleteGraph &g);

/// [{"color": c, "component": j}, ...]
nlohmann::json cover_to_json(const Cover &cover);

std::string read_file(const std::string &path);

} // namespace covnum
