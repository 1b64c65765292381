#include "idgraph/models.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "idgraph/error.hpp"

namespace idgraph {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw Error(ErrorCode::BadParameter, "rational overflow");
    return static_cast<std::int64_t>(x);
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
    if (den < 0) num = -num, den = -den;
    i128 a = num < 0 ? -num : num, b = den;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) num /= a, den /= a;
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
    if (den_ < 0) num_ = -num_, den_ = -den_;
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) num_ /= g, den_ /= g;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto to_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || p != part.data() + part.size())
            throw Error(ErrorCode::Parse, "bad number '" + s + "'");
        return v;
    };
    std::string_view sv(s);
    auto slash = sv.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(sv));
    std::int64_t den = to_int(sv.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    return Rational(to_int(sv.substr(0, slash)), den);
}

Graph interval_graph(const IntervalModel& m) {
    for (int i = 0; i < m.n(); ++i)
        if (!(m.intervals[i].left < m.intervals[i].right))
            throw Error(ErrorCode::DegenerateInterval,
                        "interval " + std::to_string(i) + " has left >= right");
    std::vector<VertexPair> es;
    for (int u = 0; u < m.n(); ++u)
        for (int v = u + 1; v < m.n(); ++v) {
            const auto& a = m.intervals[u];
            const auto& b = m.intervals[v];
            if (std::max(a.left, b.left) < std::min(a.right, b.right)) es.emplace_back(u, v);
        }
    return Graph(m.n(), es);
}

bool is_unit_model(const IntervalModel& m) {
    return std::all_of(m.intervals.begin(), m.intervals.end(),
                       [](const Interval& i) { return i.right - i.left == Rational(1); });
}

Graph permutation_graph(const PermutationModel& m) {
    std::set<std::int64_t> ts, bs;
    for (int i = 0; i < m.n(); ++i) {
        if (!ts.insert(m.segments[i].t).second)
            throw Error(ErrorCode::DuplicateIndex, "top index repeated at segment " + std::to_string(i));
        if (!bs.insert(m.segments[i].b).second)
            throw Error(ErrorCode::DuplicateIndex,
                        "bottom index repeated at segment " + std::to_string(i));
    }
    std::vector<VertexPair> es;
    for (int u = 0; u < m.n(); ++u)
        for (int v = u + 1; v < m.n(); ++v) {
            const auto& a = m.segments[u];
            const auto& b = m.segments[v];
            if ((a.t < b.t) != (a.b < b.b)) es.emplace_back(u, v);
        }
    return Graph(m.n(), es);
}

PermutationModel rank_compress(const std::vector<std::pair<Rational, Rational>>& tb) {
    auto ranks = [&](bool top) {
        std::vector<int> idx(tb.size());
        std::iota(idx.begin(), idx.end(), 0);
        auto key = [&](int i) { return top ? tb[i].first : tb[i].second; };
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
        std::vector<std::int64_t> r(tb.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && key(idx[i]) == key(idx[i - 1]))
                throw Error(ErrorCode::DuplicateIndex, "coinciding endpoints on one line");
            r[idx[i]] = static_cast<std::int64_t>(i);
        }
        return r;
    };
    auto t = ranks(true), b = ranks(false);
    PermutationModel m;
    for (std::size_t i = 0; i < tb.size(); ++i) m.segments.push_back({t[i], b[i]});
    return m;
}

// ---- cotrees ----

Cotree Cotree::leaf(int v) {
    Cotree t;
    t.set_root(t.add_leaf(v));
    return t;
}

Cotree Cotree::from_nodes(std::vector<CotreeNode> nodes, int root) {
    Cotree t;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    return t;
}

int Cotree::add_leaf(int v) {
    nodes_.push_back({CotreeKind::Leaf, v, {}});
    return static_cast<int>(nodes_.size()) - 1;
}

int Cotree::add_node(CotreeKind kind, std::vector<int> children) {
    nodes_.push_back({kind, -1, std::move(children)});
    return static_cast<int>(nodes_.size()) - 1;
}

int Cotree::leaf_count() const {
    int c = 0;
    for (auto& nd : nodes_) c += nd.kind == CotreeKind::Leaf;
    return c;
}

std::vector<int> Cotree::postorder() const {
    std::vector<int> order;
    if (root_ < 0) return order;
    order.reserve(nodes_.size());
    std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < nodes_[v].children.size()) {
            int c = nodes_[v].children[i++];
            stack.emplace_back(c, 0);
        } else {
            order.push_back(v);
            stack.pop_back();
        }
    }
    return order;
}

void Cotree::validate() const {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::MalformedCotree, m); };
    if (root_ < 0 || root_ >= static_cast<int>(nodes_.size())) bad("missing root");
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<int> stack{root_};
    int leaves = 0;
    std::vector<int> labels;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v < 0 || v >= static_cast<int>(nodes_.size())) bad("child index out of range");
        if (seen[v]) bad("node reached twice");
        seen[v] = 1;
        const auto& nd = nodes_[v];
        if (nd.kind == CotreeKind::Leaf) {
            if (!nd.children.empty()) bad("leaf with children");
            ++leaves;
            labels.push_back(nd.vertex);
        } else {
            if (nd.children.size() < 2) bad("internal node with fewer than two children");
            for (int c : nd.children) stack.push_back(c);
        }
    }
    std::sort(labels.begin(), labels.end());
    for (int i = 0; i < leaves; ++i)
        if (labels[i] != i) bad("leaf labels are not exactly 0..n-1");
}

Cotree Cotree::canonical() const {
    validate();
    Cotree out;
    std::vector<int> mapped(nodes_.size(), -1);
    for (int v : postorder()) {
        const auto& nd = nodes_[v];
        if (nd.kind == CotreeKind::Leaf) {
            mapped[v] = out.add_leaf(nd.vertex);
            continue;
        }
        std::vector<int> kids;
        for (int c : nd.children) {
            const auto& cn = out.nodes_[mapped[c]];
            if (cn.kind == nd.kind)
                kids.insert(kids.end(), cn.children.begin(), cn.children.end());
            else
                kids.push_back(mapped[c]);
        }
        mapped[v] = out.add_node(nd.kind, std::move(kids));
    }
    // Drop nodes orphaned by splicing.
    Cotree packed;
    std::vector<int> keep(out.nodes_.size(), -1);
    out.root_ = mapped[root_];
    for (int v : out.postorder()) {
        auto nd = out.nodes_[v];
        for (int& c : nd.children) c = keep[c];
        packed.nodes_.push_back(std::move(nd));
        keep[v] = static_cast<int>(packed.nodes_.size()) - 1;
    }
    packed.root_ = keep[out.root_];
    return packed;
}

namespace {

Cotree combine(const Cotree& a, const Cotree& b, CotreeKind kind) {
    Cotree t;
    int shift = a.leaf_count();
    auto copy = [&](const Cotree& src, int offset) {
        int base = static_cast<int>(t.nodes().size());
        for (const auto& nd : src.nodes()) {
            if (nd.kind == CotreeKind::Leaf) {
                t.add_leaf(nd.vertex + offset);
            } else {
                auto kids = nd.children;
                for (int& c : kids) c += base;
                t.add_node(nd.kind, std::move(kids));
            }
        }
        return base + src.root();
    };
    int ra = copy(a, 0);
    int rb = copy(b, shift);
    t.set_root(t.add_node(kind, {ra, rb}));
    return t.canonical();
}

}  // namespace

Cotree cotree_union(const Cotree& a, const Cotree& b) { return combine(a, b, CotreeKind::Union); }
Cotree cotree_join(const Cotree& a, const Cotree& b) { return combine(a, b, CotreeKind::Join); }

Cotree complement_cotree(const Cotree& t) {
    Cotree c;
    for (const auto& nd : t.nodes()) {
        if (nd.kind == CotreeKind::Leaf)
            c.add_leaf(nd.vertex);
        else
            c.add_node(nd.kind == CotreeKind::Union ? CotreeKind::Join : CotreeKind::Union,
                       nd.children);
    }
    c.set_root(t.root());
    return c;
}

Graph cotree_to_graph(const Cotree& t) {
    t.validate();
    int n = t.leaf_count();
    std::vector<std::vector<int>> leaves(t.nodes().size());
    std::vector<VertexPair> es;
    for (int v : t.postorder()) {
        const auto& nd = t.node(v);
        if (nd.kind == CotreeKind::Leaf) {
            leaves[v] = {nd.vertex};
            continue;
        }
        std::vector<int> acc;
        for (int c : nd.children) {
            if (nd.kind == CotreeKind::Join)
                for (int x : acc)
                    for (int y : leaves[c]) es.emplace_back(std::min(x, y), std::max(x, y));
            acc.insert(acc.end(), leaves[c].begin(), leaves[c].end());
            std::vector<int>().swap(leaves[c]);
        }
        leaves[v] = std::move(acc);
    }
    return Graph(n, es);
}

namespace {

// Components of g[ws] (complemented when co is set), each as a vertex list.
std::vector<std::vector<int>> split(const Graph& g, const std::vector<int>& ws, bool co) {
    std::vector<std::vector<int>> parts;
    std::vector<int> rest = ws;  // unvisited
    while (!rest.empty()) {
        std::vector<int> part{rest.back()};
        rest.pop_back();
        for (std::size_t i = 0; i < part.size(); ++i) {
            int u = part[i];
            std::vector<int> keep;
            for (int w : rest) {
                if (g.adjacent(u, w) != co)
                    part.push_back(w);
                else
                    keep.push_back(w);
            }
            rest.swap(keep);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

int recognize(const Graph& g, const std::vector<int>& ws, Cotree& t) {
    if (ws.size() == 1) return t.add_leaf(ws[0]);
    auto parts = split(g, ws, false);
    CotreeKind kind = CotreeKind::Union;
    if (parts.size() == 1) {
        parts = split(g, ws, true);
        kind = CotreeKind::Join;
        if (parts.size() == 1)
            throw Error(ErrorCode::NotCograph,
                        "graph contains an induced P4 (vertex set of size " +
                            std::to_string(ws.size()) + " is connected and co-connected)");
    }
    std::vector<int> kids;
    for (auto& p : parts) kids.push_back(recognize(g, p, t));
    return t.add_node(kind, std::move(kids));
}

}  // namespace

Cotree cograph_recognize(const Graph& g) {
    if (g.n() == 0) throw Error(ErrorCode::MalformedCotree, "empty graph has no cotree");
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    Cotree t;
    t.set_root(recognize(g, all, t));
    return t;
}

}  // namespace idgraph
