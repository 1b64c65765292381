#include "idgraph/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#include "idgraph/error.hpp"

namespace idgraph {

namespace {

using Mask = std::uint64_t;

// Every problem kind reduces to: S must intersect each constraint mask.
struct HittingSet {
    int n = 0;
    // Constraints bucketed by their highest bit.
    std::vector<std::vector<Mask>> by_top;
};

std::string pair_str(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

HittingSet build(const Graph& g, ProblemKind kind, const ExactOptions& opt) {
    const int n = g.n();
    if (opt.cap > 63) throw Error(ErrorCode::BadParameter, "exact cap must be at most 63");
    if (n > opt.cap)
        throw Error(ErrorCode::CapExceeded,
                    "n=" + std::to_string(n) + " exceeds exact cap " + std::to_string(opt.cap));
    std::vector<Mask> open(n, 0), closed(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) open[v] |= Mask{1} << w;
        closed[v] = open[v] | (Mask{1} << v);
    }
    std::vector<Mask> cons;
    const bool dom = kind == ProblemKind::IC || kind == ProblemKind::LD;
    if (dom)
        for (int v = 0; v < n; ++v) cons.push_back(closed[v]);
    if (kind == ProblemKind::OLD)
        for (int v = 0; v < n; ++v) {
            if (!open[v]) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
            cons.push_back(open[v]);
        }
    std::vector<DistanceVector> dist;
    if (kind == ProblemKind::RS) {
        if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "resolving sets need a connected graph");
        dist = all_distances(g);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Mask c = 0;
            switch (kind) {
                case ProblemKind::IC:
                case ProblemKind::SEP_ID:
                    c = closed[u] ^ closed[v];
                    if (!c) throw Error(ErrorCode::TwinsPresent, "twins " + pair_str(u, v));
                    break;
                case ProblemKind::LD:
                case ProblemKind::SEP_LD:
                    c = (closed[u] ^ closed[v]) | (Mask{1} << u) | (Mask{1} << v);
                    break;
                case ProblemKind::OLD:
                case ProblemKind::SEP_OLD:
                    c = open[u] ^ open[v];
                    if (!c) throw Error(ErrorCode::OpenTwinsPresent, "open twins " + pair_str(u, v));
                    break;
                case ProblemKind::RS:
                    for (int x = 0; x < n; ++x)
                        if (dist[x][u] != dist[x][v]) c |= Mask{1} << x;
                    break;
            }
            cons.push_back(c);
        }
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    HittingSet h;
    h.n = n;
    h.by_top.resize(std::max(n, 1));
    for (Mask c : cons) h.by_top[63 - std::countl_zero(c)].push_back(c);
    for (auto& b : h.by_top)
        std::sort(b.begin(), b.end(), [](Mask a, Mask c) { return std::popcount(a) < std::popcount(c); });
    return h;
}

bool hits(const std::vector<Mask>& cs, Mask s) {
    for (Mask c : cs)
        if (!(c & s)) return false;
    return true;
}

// Visits every passing set of exactly `size` members in lexicographic order; the visitor
// returns false to stop.
void enumerate(const HittingSet& h, int size, const std::function<bool(Mask)>& visit) {
    bool stop = false;
    // Constraints whose top bit lies strictly between the previous and current pick can only
    // be hit by members already chosen.
    std::function<void(int, int, Mask)> rec = [&](int next, int left, Mask s) {
        if (stop) return;
        if (left == 0) {
            for (int t = next; t < h.n; ++t)
                if (!hits(h.by_top[t], s)) return;
            if (!visit(s)) stop = true;
            return;
        }
        for (int v = next; v <= h.n - left && !stop; ++v) {
            Mask s2 = s | (Mask{1} << v);
            if (v > next && !hits(h.by_top[v - 1], s)) return;  // skipped bit v-1 for good
            if (!hits(h.by_top[v], s2)) continue;
            rec(v + 1, left - 1, s2);
        }
    };
    if (h.n == 0) {
        if (size == 0) visit(0);
        return;
    }
    rec(0, size, 0);
}

}  // namespace

SolveResult min_set(const Graph& g, ProblemKind kind, const ExactOptions& opt) {
    HittingSet h = build(g, kind, opt);
    for (int size = 0; size <= h.n; ++size) {
        Mask found = 0;
        bool any = false;
        enumerate(h, size, [&](Mask s) {
            found = s;
            any = true;
            return false;
        });
        if (any) return {size, VertexSet::from_mask(found), kind};
    }
    // Only reachable for kinds without a solution, which build() already rejects.
    throw Error(ErrorCode::VerifierFailed, "no passing set exists");
}

std::vector<VertexSet> all_min_sets(const Graph& g, ProblemKind kind, const ExactOptions& opt) {
    HittingSet h = build(g, kind, opt);
    for (int size = 0; size <= h.n; ++size) {
        std::vector<VertexSet> out;
        enumerate(h, size, [&](Mask s) {
            if (out.size() >= opt.max_sets)
                throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opt.max_sets) + " minimum sets");
            out.push_back(VertexSet::from_mask(s));
            return true;
        });
        if (!out.empty()) return out;
    }
    throw Error(ErrorCode::VerifierFailed, "no passing set exists");
}

FlagPair emp_univ_oracle(const Graph& g, Flavor f, const ExactOptions& opt) {
    ProblemKind kind = f == Flavor::ID ? ProblemKind::SEP_ID
                       : f == Flavor::LD ? ProblemKind::SEP_LD
                                         : ProblemKind::SEP_OLD;
    FlagPair r{true, true};
    for (const auto& s : all_min_sets(g, kind, opt)) {
        r.emp = r.emp && emp_flag(g, s, f);
        r.univ = r.univ && univ_flag(g, s, f);
    }
    return r;
}

}  // namespace idgraph
