#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idgraph/exact.hpp"
#include "idgraph/io.hpp"
#include "idgraph/verify.hpp"

namespace idgraph {

struct ExtremalInstance {
    AnyModel model;
    VertexSet solution;
    ProblemKind kind = ProblemKind::IC;
    int claimed_n = 0;
    int claimed_k = 0;
    std::optional<int> claimed_D;
    std::string family;
    std::optional<FlagPair> claimed_flags;  // cograph families only

    // "family kind k D n solution=<list>", with '-' for a missing D.
    std::string manifest_line() const;
};

// Every generator checks its own output (vertex count, solution size, verifier, diameter)
// and throws VerifierFailed if the construction does not hold.

ExtremalInstance ext_interval_ic(int k);
ExtremalInstance ext_interval_old(int k);  // k >= 2
ExtremalInstance ext_interval_ld(int k);
ExtremalInstance ext_interval_md(int k, int D);  // k even, D >= 2

ExtremalInstance ext_unit_ic(int k);
ExtremalInstance ext_unit_old(int k);  // solution size 2k, n = 4k-1
ExtremalInstance ext_unit_ld(int k);
ExtremalInstance ext_unit_md(int k, int D);

ExtremalInstance ext_perm_ic(int k);   // k >= 3
ExtremalInstance ext_perm_old(int k);  // k >= 4
ExtremalInstance ext_perm_ld(int k);   // k >= 3
ExtremalInstance ext_perm_md(int k, int D);  // k even, D >= 2

ExtremalInstance ext_bipperm_ld(int k);   // k >= 1
ExtremalInstance ext_bipperm_ic(int k);   // k >= 3
ExtremalInstance ext_bipperm_old(int k);  // k >= 4
ExtremalInstance ext_bipperm_md(int k, int D);  // k even, D >= 2

// Cotree families; kind SEP_ID / SEP_LD, claimed_k is the claimed separation number.
ExtremalInstance ext_cograph_id(int n, int variant);
ExtremalInstance ext_cograph_ld(int n, int variant);

struct FamilyParams {
    int k = 0;
    std::optional<int> D;
    int n = 0;        // cograph families
    int variant = 0;  // cograph families
};
const std::vector<std::string>& family_names();
ExtremalInstance generate(const std::string& family, const FamilyParams& p);

}  // namespace idgraph
