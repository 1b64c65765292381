#include "idgraph/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "idgraph/error.hpp"

namespace idgraph {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Non-empty, non-comment lines split into tokens, with their line numbers.
struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    explicit Lines(std::istream& in) {
        std::string s;
        int no = 0;
        while (std::getline(in, s)) {
            ++no;
            auto hash = s.find('#');
            if (hash != std::string::npos) s.resize(hash);
            std::istringstream ss(s);
            std::vector<std::string> toks;
            for (std::string t; ss >> t;) toks.push_back(t);
            if (!toks.empty()) rows.emplace_back(no, std::move(toks));
        }
    }
};

long long to_ll(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "bad integer '" + s + "'");
    }
}

int header(const Lines& ls, const std::string& keyword) {
    if (ls.rows.empty()) fail(0, "empty input");
    const auto& [line, t] = ls.rows.front();
    if (t.size() != 2 || t[0] != keyword) fail(line, "expected '" + keyword + " <n>'");
    long long n = to_ll(t[1], line);
    if (n < 0 || n > 100000000) fail(line, "bad vertex count");
    return static_cast<int>(n);
}

// Rows of "<id> a b" covering ids 0..n-1 exactly once.
template <class F>
void per_vertex_rows(const Lines& ls, int n, F&& f) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 1; i < ls.rows.size(); ++i) {
        const auto& [line, t] = ls.rows[i];
        if (t.size() != 3) fail(line, "expected '<id> <a> <b>'");
        long long id = to_ll(t[0], line);
        if (id < 0 || id >= n) fail(line, "id out of range");
        if (seen[id]) fail(line, "id repeated");
        seen[id] = 1;
        f(static_cast<int>(id), t[1], t[2], line);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) fail(0, "missing row for id " + std::to_string(v));
}

}  // namespace

Graph read_graph(std::istream& in) {
    Lines ls(in);
    int n = header(ls, "graph");
    std::set<VertexPair> es;
    for (std::size_t i = 1; i < ls.rows.size(); ++i) {
        const auto& [line, t] = ls.rows[i];
        if (t.size() != 3 || t[0] != "e") fail(line, "expected 'e <u> <v>'");
        long long u = to_ll(t[1], line), v = to_ll(t[2], line);
        if (!(0 <= u && u < v && v < n)) fail(line, "edge must satisfy 0 <= u < v < n");
        if (!es.emplace(static_cast<int>(u), static_cast<int>(v)).second) fail(line, "duplicate edge");
    }
    return Graph(n, std::vector<VertexPair>(es.begin(), es.end()));
}

IntervalModel read_intervals(std::istream& in) {
    Lines ls(in);
    int n = header(ls, "intervals");
    IntervalModel m;
    m.intervals.resize(n);
    per_vertex_rows(ls, n, [&](int id, const std::string& a, const std::string& b, int line) {
        try {
            m.intervals[id] = {Rational::parse(a), Rational::parse(b)};
        } catch (const Error& e) {
            fail(line, e.what());
        }
    });
    return m;
}

PermutationModel read_permutation(std::istream& in) {
    Lines ls(in);
    int n = header(ls, "permutation");
    PermutationModel m;
    m.segments.resize(n);
    per_vertex_rows(ls, n, [&](int id, const std::string& a, const std::string& b, int line) {
        m.segments[id] = {to_ll(a, line), to_ll(b, line)};
    });
    return m;
}

Cotree parse_cotree(const std::string& text) {
    std::size_t i = 0;
    auto bad = [&](const std::string& m) {
        throw Error(ErrorCode::Parse, "cotree: " + m + " at offset " + std::to_string(i));
    };
    auto skip = [&] {
        while (i < text.size()) {
            if (text[i] == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            } else {
                break;
            }
        }
    };
    Cotree t;
    // Explicit stack: deep cotrees must not overflow the call stack.
    struct Frame {
        CotreeKind kind;
        std::vector<int> kids;
    };
    std::vector<Frame> stack;
    int root = -1;
    auto emit = [&](int node) {
        if (stack.empty()) {
            if (root >= 0) bad("trailing content");
            root = node;
        } else {
            stack.back().kids.push_back(node);
        }
    };
    for (skip(); i < text.size(); skip()) {
        char c = text[i];
        if (c == '(') {
            ++i;
            skip();
            if (i >= text.size()) bad("unexpected end");
            char op = text[i++];
            if (op != 'U' && op != 'J') bad("expected U or J");
            stack.push_back({op == 'U' ? CotreeKind::Union : CotreeKind::Join, {}});
        } else if (c == ')') {
            ++i;
            if (stack.empty()) bad("unbalanced ')'");
            Frame f = std::move(stack.back());
            stack.pop_back();
            if (f.kids.size() < 2) throw Error(ErrorCode::MalformedCotree, "internal node with fewer than two children");
            emit(t.add_node(f.kind, std::move(f.kids)));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j - i > 9) bad("leaf label too large");
            emit(t.add_leaf(std::stoi(text.substr(i, j - i))));
            i = j;
        } else {
            bad(std::string("unexpected character '") + c + "'");
        }
    }
    if (!stack.empty()) bad("unbalanced '('");
    if (root < 0) bad("empty cotree");
    t.set_root(root);
    t.validate();
    return t;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_intervals(std::ostream& out, const IntervalModel& m) {
    out << "intervals " << m.n() << '\n';
    for (int i = 0; i < m.n(); ++i)
        out << i << ' ' << m.intervals[i].left.str() << ' ' << m.intervals[i].right.str() << '\n';
}

void write_permutation(std::ostream& out, const PermutationModel& m) {
    out << "permutation " << m.n() << '\n';
    for (int i = 0; i < m.n(); ++i) out << i << ' ' << m.segments[i].t << ' ' << m.segments[i].b << '\n';
}

std::string cotree_to_string(const Cotree& t) {
    std::vector<std::string> text(t.nodes().size());
    for (int v : t.postorder()) {
        const auto& nd = t.node(v);
        if (nd.kind == CotreeKind::Leaf) {
            text[v] = std::to_string(nd.vertex);
            continue;
        }
        std::string s = nd.kind == CotreeKind::Union ? "(U" : "(J";
        for (int c : nd.children) {
            s += ' ';
            s += text[c];
            std::string().swap(text[c]);
        }
        text[v] = s + ')';
    }
    return t.root() < 0 ? std::string() : text[t.root()];
}

AnyModel read_model(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream probe(all);
    std::string word;
    // First token that is not inside a comment.
    for (std::string line; std::getline(probe, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (ls >> word) break;
    }
    std::istringstream src(all);
    if (word == "graph") return read_graph(src);
    if (word == "intervals") return read_intervals(src);
    if (word == "permutation") return read_permutation(src);
    if (!word.empty() && (word[0] == '(' || std::isdigit(static_cast<unsigned char>(word[0]))))
        return parse_cotree(all);
    throw Error(ErrorCode::Parse, "unrecognized model header '" + word + "'");
}

AnyModel read_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    return read_model(in);
}

void write_model(std::ostream& out, const AnyModel& m) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) write_graph(out, x);
            if constexpr (std::is_same_v<T, IntervalModel>) write_intervals(out, x);
            if constexpr (std::is_same_v<T, PermutationModel>) write_permutation(out, x);
            if constexpr (std::is_same_v<T, Cotree>) out << cotree_to_string(x) << '\n';
        },
        m);
}

Graph compile(const AnyModel& m) {
    return std::visit(
        [](const auto& x) -> Graph {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) return x;
            if constexpr (std::is_same_v<T, IntervalModel>) return interval_graph(x);
            if constexpr (std::is_same_v<T, PermutationModel>) return permutation_graph(x);
            if constexpr (std::is_same_v<T, Cotree>) return cotree_to_graph(x);
        },
        m);
}

VertexSet parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty() || s == "-") return VertexSet();
    std::istringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        long long v = to_ll(tok, 0);
        if (v < 0 || v > 100000000) throw Error(ErrorCode::Parse, "bad vertex '" + tok + "'");
        out.push_back(static_cast<int>(v));
    }
    return VertexSet(std::move(out));
}

std::string format_vertex_list(const VertexSet& s) {
    std::string r;
    for (int v : s) {
        if (!r.empty()) r += ',';
        r += std::to_string(v);
    }
    return r.empty() ? "-" : r;
}

}  // namespace idgraph
