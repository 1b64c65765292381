#include "idgraph/verify.hpp"

#include <algorithm>
#include <numeric>

#include "idgraph/error.hpp"

namespace idgraph {

const char* kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::IC: return "ic";
        case ProblemKind::LD: return "ld";
        case ProblemKind::OLD: return "old";
        case ProblemKind::RS: return "md";
        case ProblemKind::SEP_ID: return "sep-id";
        case ProblemKind::SEP_LD: return "sep-ld";
        case ProblemKind::SEP_OLD: return "sep-old";
    }
    return "?";
}

ProblemKind parse_kind(const std::string& s) {
    if (s == "ic") return ProblemKind::IC;
    if (s == "ld") return ProblemKind::LD;
    if (s == "old") return ProblemKind::OLD;
    if (s == "md" || s == "rs") return ProblemKind::RS;
    if (s == "sep-id") return ProblemKind::SEP_ID;
    if (s == "sep-ld") return ProblemKind::SEP_LD;
    if (s == "sep-old") return ProblemKind::SEP_OLD;
    throw Error(ErrorCode::Parse, "unknown problem '" + s + "'");
}

VertexSet signature(const Graph& g, int v, const VertexSet& S, bool closed) {
    std::vector<int> out;
    const auto& nb = g.neighbors(v);
    std::set_intersection(nb.begin(), nb.end(), S.begin(), S.end(), std::back_inserter(out));
    if (closed && S.contains(v)) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return VertexSet(std::move(out));
}

std::string Verdict::describe() const {
    if (ok) return "ok";
    if (undominated) return "undominated=" + std::to_string(*undominated);
    if (collision)
        return "pair=(" + std::to_string(collision->first) + "," + std::to_string(collision->second) + ")";
    return "failed";
}

namespace {

void check_members(const Graph& g, const VertexSet& S) {
    for (int v : S)
        if (v < 0 || v >= g.n())
            throw Error(ErrorCode::InvalidVertex, "set member " + std::to_string(v) + " out of range");
}

// First pair (by smaller vertex, then larger) among `domain` with equal keys.
template <class Key>
std::optional<VertexPair> first_collision(const std::vector<int>& domain, const std::vector<Key>& key) {
    std::vector<int> idx(domain.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
    std::optional<VertexPair> best;
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (key[idx[i]] == key[idx[i - 1]]) {
            VertexPair p{std::min(domain[idx[i]], domain[idx[i - 1]]),
                         std::max(domain[idx[i]], domain[idx[i - 1]])};
            if (!best || p < *best) best = p;
        }
    return best;
}

std::optional<VertexPair> sig_collision(const Graph& g, const VertexSet& S, bool closed,
                                        bool outside_only) {
    std::vector<int> dom;
    std::vector<VertexSet> keys;
    for (int v = 0; v < g.n(); ++v) {
        if (outside_only && S.contains(v)) continue;
        dom.push_back(v);
        keys.push_back(signature(g, v, S, closed));
    }
    return first_collision(dom, keys);
}

std::optional<int> first_undominated(const Graph& g, const VertexSet& S, bool closed) {
    for (int v = 0; v < g.n(); ++v)
        if (signature(g, v, S, closed).empty()) return v;
    return std::nullopt;
}

}  // namespace

Verdict check(const Graph& g, const VertexSet& S, ProblemKind kind) {
    check_members(g, S);
    Verdict r;
    switch (kind) {
        case ProblemKind::IC:
            r.undominated = first_undominated(g, S, true);
            [[fallthrough]];
        case ProblemKind::SEP_ID:
            r.collision = sig_collision(g, S, true, false);
            break;
        case ProblemKind::LD:
            r.undominated = first_undominated(g, S, true);
            [[fallthrough]];
        case ProblemKind::SEP_LD:
            r.collision = sig_collision(g, S, true, true);
            break;
        case ProblemKind::OLD:
            r.undominated = first_undominated(g, S, false);
            [[fallthrough]];
        case ProblemKind::SEP_OLD:
            r.collision = sig_collision(g, S, false, false);
            break;
        case ProblemKind::RS: {
            if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "resolving sets need a connected graph");
            std::vector<DistanceVector> from;
            for (int s : S) from.push_back(bfs_distances(g, s));
            std::vector<int> dom(g.n());
            std::iota(dom.begin(), dom.end(), 0);
            std::vector<std::vector<int>> keys(g.n());
            for (int v = 0; v < g.n(); ++v)
                for (auto& d : from) keys[v].push_back(d[v]);
            r.collision = first_collision(dom, keys);
            break;
        }
    }
    r.ok = !r.collision && !r.undominated;
    return r;
}

bool is_dominating(const Graph& g, const VertexSet& S) {
    check_members(g, S);
    return !first_undominated(g, S, true);
}
bool is_total_dominating(const Graph& g, const VertexSet& S) {
    check_members(g, S);
    return !first_undominated(g, S, false);
}
bool is_identifying_code(const Graph& g, const VertexSet& S) { return check(g, S, ProblemKind::IC).ok; }
bool is_locating_dominating(const Graph& g, const VertexSet& S) { return check(g, S, ProblemKind::LD).ok; }
bool is_open_locating_dominating(const Graph& g, const VertexSet& S) {
    return check(g, S, ProblemKind::OLD).ok;
}
bool is_resolving_set(const Graph& g, const VertexSet& S) { return check(g, S, ProblemKind::RS).ok; }

bool is_separating(const Graph& g, const VertexSet& S, ProblemKind kind) {
    if (kind != ProblemKind::SEP_ID && kind != ProblemKind::SEP_LD && kind != ProblemKind::SEP_OLD)
        throw Error(ErrorCode::BadParameter, "is_separating takes a SEP_* kind");
    return check(g, S, kind).ok;
}

bool emp_flag(const Graph& g, const VertexSet& S, Flavor f) {
    check_members(g, S);
    return first_undominated(g, S, f != Flavor::OLD).has_value();
}

bool univ_flag(const Graph& g, const VertexSet& S, Flavor f) {
    check_members(g, S);
    for (int v = 0; v < g.n(); ++v) {
        if (f == Flavor::LD && S.contains(v)) continue;
        if (signature(g, v, S, f != Flavor::OLD).size() == S.size()) return true;
    }
    return false;
}

}  // namespace idgraph
