#include "idgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "idgraph/error.hpp"

namespace idgraph {

VertexSet::VertexSet(std::initializer_list<int> xs) : VertexSet(std::vector<int>(xs)) {}

VertexSet::VertexSet(std::vector<int> xs) : m_(std::move(xs)) {
    std::sort(m_.begin(), m_.end());
    m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    VertexSet s;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s.m_.push_back(v);
    return s;
}

bool VertexSet::contains(int v) const { return std::binary_search(m_.begin(), m_.end(), v); }

std::uint64_t VertexSet::mask() const {
    std::uint64_t r = 0;
    for (int v : m_) r |= std::uint64_t{1} << v;
    return r;
}

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {}

Graph::Graph(int n, const std::vector<VertexPair>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error(ErrorCode::InvalidVertex, "self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n())
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n()) + ")");
}

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (auto& a : adj_) s += a.size();
    return s / 2;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> es;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

VertexSet open_nbhd(const Graph& g, int v) { return VertexSet(g.neighbors(v)); }

VertexSet closed_nbhd(const Graph& g, int v) {
    auto a = g.neighbors(v);
    a.push_back(v);
    return VertexSet(std::move(a));
}

DistanceVector bfs_distances(const Graph& g, int v) {
    (void)g.neighbors(v);  // range check
    DistanceVector d(g.n(), kInfinite);
    std::queue<int> q;
    d[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (d[w] == kInfinite) {
                d[w] = d[u] + 1;
                q.push(w);
            }
    }
    return d;
}

std::vector<DistanceVector> all_distances(const Graph& g) {
    std::vector<DistanceVector> r;
    r.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) r.push_back(bfs_distances(g, v));
    return r;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), kInfinite) == d.end();
}

int diameter(const Graph& g) {
    if (g.n() == 0) throw Error(ErrorCode::Disconnected, "diameter of the empty graph");
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        auto d = bfs_distances(g, v);
        for (int u = 0; u < g.n(); ++u) {
            if (d[u] == kInfinite)
                throw Error(ErrorCode::Disconnected, "vertices " + std::to_string(v) + " and " +
                                                         std::to_string(u) + " are not connected");
            best = std::max(best, d[u]);
        }
    }
    return best;
}

namespace {

std::vector<VertexPair> pairs_with_equal(const Graph& g, bool closed) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < g.n(); ++v)
        groups[(closed ? closed_nbhd(g, v) : open_nbhd(g, v)).members()].push_back(v);
    std::vector<VertexPair> out;
    for (auto& [key, vs] : groups)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) out.emplace_back(vs[i], vs[j]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<VertexPair> closed_twins(const Graph& g) { return pairs_with_equal(g, true); }
std::vector<VertexPair> open_twins(const Graph& g) { return pairs_with_equal(g, false); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    auto es = g1.edges();
    for (auto [u, v] : g2.edges()) es.emplace_back(u + g1.n(), v + g1.n());
    return Graph(g1.n() + g2.n(), es);
}

Graph complete_join(const Graph& g1, const Graph& g2) {
    auto es = disjoint_union(g1, g2).edges();
    for (int u = 0; u < g1.n(); ++u)
        for (int v = 0; v < g2.n(); ++v) es.emplace_back(u, v + g1.n());
    return Graph(g1.n() + g2.n(), es);
}

Graph complement(const Graph& g) {
    std::vector<VertexPair> es;
    for (int u = 0; u < g.n(); ++u) {
        const auto& a = g.neighbors(u);
        auto it = a.begin();
        for (int v = u + 1; v < g.n(); ++v) {
            it = std::lower_bound(it, a.end(), v);
            if (it == a.end() || *it != v) es.emplace_back(u, v);
        }
    }
    return Graph(g.n(), es);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(parts.size());
        parts.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            parts[c].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
    }
    std::vector<VertexSet> out;
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        (void)g.neighbors(vs[i]);
        pos[vs[i]] = static_cast<int>(i);
    }
    std::vector<VertexPair> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int w : g.neighbors(vs[i]))
            if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
    return Graph(static_cast<int>(vs.size()), es);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> col(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (col[w] < 0) {
                    col[w] = 1 - col[u];
                    stack.push_back(w);
                } else if (col[w] == col[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph path_graph(int n) {
    std::vector<VertexPair> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    auto es = path_graph(n).edges();
    if (n >= 3) es.emplace_back(0, n - 1);
    return Graph(n, es);
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
    std::vector<VertexPair> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

}  // namespace idgraph
