#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace idgraph {

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> xs);
    explicit VertexSet(std::vector<int> xs);
    static VertexSet from_mask(std::uint64_t mask);

    bool contains(int v) const;
    std::size_t size() const { return m_.size(); }
    bool empty() const { return m_.empty(); }
    const std::vector<int>& members() const { return m_; }
    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }

    // Only valid when every member is < 64.
    std::uint64_t mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> m_;
};

constexpr int kInfinite = std::numeric_limits<int>::max();
using DistanceVector = std::vector<int>;
using VertexPair = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws InvalidVertex on out-of-range endpoints or self-loops; duplicate edges collapse.
    Graph(int n, const std::vector<VertexPair>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    // Edges as (u,v) with u<v, sorted.
    std::vector<VertexPair> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
    void check_vertex(int v) const;
};

VertexSet open_nbhd(const Graph& g, int v);
VertexSet closed_nbhd(const Graph& g, int v);
DistanceVector bfs_distances(const Graph& g, int v);
std::vector<DistanceVector> all_distances(const Graph& g);
bool is_connected(const Graph& g);
int diameter(const Graph& g);
std::vector<VertexPair> closed_twins(const Graph& g);
std::vector<VertexPair> open_twins(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complete_join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// Vertices renumbered in the order given.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);
bool is_bipartite(const Graph& g);

// Small named graphs used all over the tests and generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);

}  // namespace idgraph
