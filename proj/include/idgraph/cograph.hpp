#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "idgraph/exact.hpp"
#include "idgraph/models.hpp"

namespace idgraph {

struct CographSummary {
    int k = 0;
    bool emp = false;
    bool univ = false;
    friend bool operator==(const CographSummary&, const CographSummary&) = default;
};

// Twin pairs read off the canonical cotree: closed twins hang as leaves under one JOIN node,
// open twins as leaves under one UNION node.
std::optional<VertexPair> cotree_closed_twin(const Cotree& t);
std::optional<VertexPair> cotree_open_twin(const Cotree& t);

// sepID with ID-EMP / ID-UNIV. Throws TwinsPresent.
CographSummary sep_id_dp(const Cotree& t);
// sepLD with LD-EMP / LD-UNIV. Defined for every cograph.
CographSummary sep_ld_dp(const Cotree& t);

int gamma_id_cograph(const Cotree& t);
int gamma_ld_cograph(const Cotree& t);
// Throws Disconnected unless the root is a JOIN node or a single leaf.
int dim_cograph(const Cotree& t);

// One flag rule of the closed-form recurrence, as listed in flag_rules().
struct FlagRule {
    Flavor flavor;
    CotreeKind op;
    bool sets_univ;  // false: rule for emp
    const char* text;
};
const std::vector<FlagRule>& flag_rules();

// OLD analog, computed by the profile DP. Disabled until validate_old_dp() has passed.
bool old_dp_enabled();
// Exhaustive comparison with the oracle on every open-twin-free cograph up to max_n vertices
// (at least 9 to open the gate). Returns the number of graphs checked; throws VerifierFailed
// on the first disagreement.
int validate_old_dp(int max_n = 9);
CographSummary sep_old_dp(const Cotree& t);  // NotValidated, OpenTwinsPresent
int gamma_old_cograph(const Cotree& t);       // additionally IsolatedVertex

// Minimum set of the given kind (IC, LD, RS, SEP_ID, SEP_LD; OLD and SEP_OLD once validated),
// checked with the verifier before it is returned.
VertexSet witness_cograph(const Cotree& t, ProblemKind kind);

// Every canonical cotree on n leaves up to isomorphism; leaves numbered in DFS order.
std::vector<Cotree> enumerate_cotrees(int n);
// Random canonical cotree on n leaves with shuffled labels.
Cotree random_cotree(int n, std::mt19937_64& rng);
// Same, restricted to cotrees whose graph has no closed twins.
Cotree random_twin_free_cotree(int n, std::mt19937_64& rng);

}  // namespace idgraph
