#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idgraph/graph.hpp"

namespace idgraph {

enum class ProblemKind { IC, LD, OLD, RS, SEP_ID, SEP_LD, SEP_OLD };
enum class Flavor { ID, LD, OLD };

const char* kind_name(ProblemKind k);  // ic, ld, old, md, sep-id, sep-ld, sep-old
ProblemKind parse_kind(const std::string& s);  // also accepts "rs"; throws Parse

// N[v] ∩ S when closed, N(v) ∩ S otherwise.
VertexSet signature(const Graph& g, int v, const VertexSet& S, bool closed);

struct Verdict {
    bool ok = true;
    std::optional<VertexPair> collision;  // two vertices with equal signature / distances
    std::optional<int> undominated;
    std::string describe() const;
};

// Throws InvalidVertex if S leaves [0,n); Disconnected for RS on a disconnected graph.
Verdict check(const Graph& g, const VertexSet& S, ProblemKind kind);

bool is_dominating(const Graph& g, const VertexSet& S);
bool is_total_dominating(const Graph& g, const VertexSet& S);
bool is_identifying_code(const Graph& g, const VertexSet& S);
bool is_locating_dominating(const Graph& g, const VertexSet& S);
bool is_open_locating_dominating(const Graph& g, const VertexSet& S);
bool is_resolving_set(const Graph& g, const VertexSet& S);
bool is_separating(const Graph& g, const VertexSet& S, ProblemKind kind);

// Some vertex has an empty signature (closed for ID/LD, open for OLD).
bool emp_flag(const Graph& g, const VertexSet& S, Flavor f);
// ID: some v in V with S ⊆ N[v]. LD: some v outside S with S ⊆ N[v]. OLD: some v with S ⊆ N(v).
bool univ_flag(const Graph& g, const VertexSet& S, Flavor f);

}  // namespace idgraph
