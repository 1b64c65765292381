#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idgraph/graph.hpp"

namespace idgraph {

// Exact rational with positive denominator, always reduced.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;
    // Accepts "p", "-p" or "p/q".
    static Rational parse(const std::string& s);

private:
    std::int64_t num_, den_;
};

struct Interval {
    Rational left, right;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalModel {
    std::vector<Interval> intervals;
    int n() const { return static_cast<int>(intervals.size()); }
};

struct Segment {
    std::int64_t t, b;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct PermutationModel {
    std::vector<Segment> segments;
    int n() const { return static_cast<int>(segments.size()); }
};

// Open intervals: u ~ v iff max(left) < min(right).
Graph interval_graph(const IntervalModel& m);
bool is_unit_model(const IntervalModel& m);
// Segments cross iff (t_u - t_v)(b_u - b_v) < 0.
Graph permutation_graph(const PermutationModel& m);
// Replace rational coordinates by their ranks on each line. Ties are rejected.
PermutationModel rank_compress(const std::vector<std::pair<Rational, Rational>>& tb);

enum class CotreeKind : std::uint8_t { Leaf, Union, Join };

struct CotreeNode {
    CotreeKind kind = CotreeKind::Leaf;
    int vertex = -1;
    std::vector<int> children;
};

class Cotree {
public:
    Cotree() = default;
    static Cotree leaf(int v);
    // Unchecked; call validate() when the input is untrusted.
    static Cotree from_nodes(std::vector<CotreeNode> nodes, int root);

    int add_leaf(int v);
    int add_node(CotreeKind kind, std::vector<int> children);
    void set_root(int r) { root_ = r; }

    const std::vector<CotreeNode>& nodes() const { return nodes_; }
    const CotreeNode& node(int i) const { return nodes_[i]; }
    int root() const { return root_; }
    int leaf_count() const;

    // Throws MalformedCotree unless this is a tree whose leaves are exactly 0..n-1
    // and every internal node has at least two children.
    void validate() const;
    // Children of the same kind as their parent are spliced into it.
    Cotree canonical() const;
    // Node indices with every child before its parent.
    std::vector<int> postorder() const;

private:
    std::vector<CotreeNode> nodes_;
    int root_ = -1;
};

// Leaves of b are shifted by a.leaf_count(), matching disjoint_union/complete_join.
Cotree cotree_union(const Cotree& a, const Cotree& b);
Cotree cotree_join(const Cotree& a, const Cotree& b);
Cotree complement_cotree(const Cotree& t);
Graph cotree_to_graph(const Cotree& t);
Cotree cograph_recognize(const Graph& g);

}  // namespace idgraph
