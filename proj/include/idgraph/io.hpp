#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "idgraph/graph.hpp"
#include "idgraph/models.hpp"

namespace idgraph {

using AnyModel = std::variant<Graph, IntervalModel, PermutationModel, Cotree>;

// All readers throw Error(Parse) on malformed text.
Graph read_graph(std::istream& in);
IntervalModel read_intervals(std::istream& in);
PermutationModel read_permutation(std::istream& in);
Cotree parse_cotree(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
void write_intervals(std::ostream& out, const IntervalModel& m);
void write_permutation(std::ostream& out, const PermutationModel& m);
std::string cotree_to_string(const Cotree& t);

// Dispatches on the first keyword: graph, intervals, permutation, or '(' / digit for a cotree.
AnyModel read_model(std::istream& in);
AnyModel read_model_file(const std::string& path);
void write_model(std::ostream& out, const AnyModel& m);
Graph compile(const AnyModel& m);

// "1,4,7" -> {1,4,7}; empty string or "-" -> {}.
VertexSet parse_vertex_list(const std::string& s);
std::string format_vertex_list(const VertexSet& s);

}  // namespace idgraph
