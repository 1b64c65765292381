#pragma once

#include <cstddef>
#include <vector>

#include "idgraph/graph.hpp"
#include "idgraph/verify.hpp"

namespace idgraph {

struct SolveResult {
    int k = 0;
    VertexSet witness;
    ProblemKind kind = ProblemKind::IC;
};

struct ExactOptions {
    int cap = 30;                     // vertex limit, at most 63
    std::size_t max_sets = 1000000;   // all_min_sets overflow limit
};

// Smallest passing set; among those, the lexicographically first sorted member list.
// Errors: TwinsPresent (IC, SEP_ID), OpenTwinsPresent (OLD, SEP_OLD), IsolatedVertex (OLD),
// Disconnected (RS), CapExceeded.
SolveResult min_set(const Graph& g, ProblemKind kind, const ExactOptions& opt = {});

// Every minimum passing set, in lexicographic order.
std::vector<VertexSet> all_min_sets(const Graph& g, ProblemKind kind, const ExactOptions& opt = {});

struct FlagPair {
    bool emp = false;
    bool univ = false;
    friend bool operator==(const FlagPair&, const FlagPair&) = default;
};

// emp/univ evaluated over every minimum separating set of the flavor (SEP_ID / SEP_LD / SEP_OLD).
FlagPair emp_univ_oracle(const Graph& g, Flavor f, const ExactOptions& opt = {});

}  // namespace idgraph
