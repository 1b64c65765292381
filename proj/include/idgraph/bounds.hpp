#pragma once

#include <optional>
#include <string>

#include "idgraph/generators.hpp"
#include "idgraph/io.hpp"
#include "idgraph/verify.hpp"

namespace idgraph {

enum class GraphClass { INTERVAL, UNIT_INTERVAL, PERMUTATION, BIPARTITE_PERMUTATION, COGRAPH, GENERAL };
enum class BoundKind { IC, LD, OLD, MD };

const char* class_name(GraphClass c);   // interval, unit-interval, permutation, ...
GraphClass parse_class(const std::string& s);
const char* bound_kind_name(BoundKind k);  // ic, ld, old, md
BoundKind parse_bound_kind(const std::string& s);
// IC, LD, OLD, RS map to IC, LD, OLD, MD; separation kinds are UnsupportedCombination.
BoundKind bound_kind_for(ProblemKind k);

struct BoundQuery {
    GraphClass cls = GraphClass::GENERAL;
    BoundKind kind = BoundKind::IC;
    int k = 0;
    std::optional<int> D;  // required for MD
};

struct BoundReport {
    GraphClass cls = GraphClass::GENERAL;
    BoundKind kind = BoundKind::IC;
    int k = 0;
    std::optional<int> D;
    long long max_n = 0;
    std::string theorem_label;
    int n = 0;
    bool satisfied = false;
    long long slack = 0;  // max_n - n
};

// Largest order allowed for a solution of size k. Errors: UnsupportedCombination (COGRAPH+OLD),
// MissingDiameter, KTooSmall (permutation neighborhood bounds need k >= 3), BadParameter when
// the value does not fit in 64 bits.
long long max_order(const BoundQuery& q);
std::string theorem_label(GraphClass c, BoundKind k);

struct ParameterBound {
    int k = 0;            // smallest admissible k with max_order(k) >= n
    double real = 0.0;    // real root of max_order(x) = n, the closed-form lower bound
};
ParameterBound min_parameter(GraphClass c, BoundKind kind, long long n, std::optional<int> D = std::nullopt);

// The class is read off the model: interval models give INTERVAL (UNIT_INTERVAL when all
// lengths are 1), permutation models PERMUTATION (BIPARTITE_PERMUTATION when the graph is
// bipartite), cotrees COGRAPH, plain graphs GENERAL.
GraphClass attested_class(const AnyModel& m);

// Verifies S (VerifierFailed on rejection), checks the bound's hypotheses (ClassMismatch when
// they fail) and compares n with max_order. `as` selects a wider class than the attested one
// (INTERVAL for a unit model, PERMUTATION for a bipartite one, GENERAL for anything).
BoundReport certify(const AnyModel& m, const VertexSet& S, ProblemKind kind,
                    std::optional<GraphClass> as = std::nullopt);
// Uses the family's class. Cograph families carry separating sets; they are certified with
// the minimum IC / LD set built by witness_cograph.
BoundReport certify(const ExtremalInstance& inst);

// "class kind k D max_n label"
std::string format_bound_row(GraphClass c, BoundKind kind, int k, std::optional<int> D);

}  // namespace idgraph
