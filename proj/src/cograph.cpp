#include "idgraph/cograph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>

#include "idgraph/error.hpp"
#include "idgraph/io.hpp"

namespace idgraph {

namespace {

std::string pair_str(VertexPair p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::optional<VertexPair> leaf_pair_under(const Cotree& t, CotreeKind kind) {
    Cotree c = t.canonical();
    std::optional<VertexPair> best;
    for (const auto& nd : c.nodes()) {
        if (nd.kind != kind) continue;
        std::vector<int> leaves;
        for (int ch : nd.children)
            if (c.node(ch).kind == CotreeKind::Leaf) leaves.push_back(c.node(ch).vertex);
        if (leaves.size() < 2) continue;
        std::partial_sort(leaves.begin(), leaves.begin() + 2, leaves.end());
        VertexPair p{leaves[0], leaves[1]};
        if (!best || p < *best) best = p;
    }
    return best;
}

// ---- closed-form recurrence ----

struct Part {
    int n, k;
    bool emp, univ;
};

bool is_k1(const Part& p) { return p.n == 1; }

using Pred = bool (*)(const Part&, const Part&);

struct Rule {
    FlagRule info;
    Pred holds;
};

// The flag of a combination is the OR over the rules that apply to it.
const std::vector<Rule>& rules() {
    static const std::vector<Rule> r = {
        {{Flavor::ID, CotreeKind::Union, false, "emp iff emp1 or emp2"},
         [](const Part& a, const Part& b) { return a.emp || b.emp; }},
        {{Flavor::ID, CotreeKind::Union, true,
          "univ if one side is K1 and the other is univ and not emp"},
         [](const Part& a, const Part& b) {
             return (is_k1(a) && b.univ && !b.emp) || (is_k1(b) && a.univ && !a.emp);
         }},
        // Amendment: for K1 + K1 the only minimum sets are the singletons, and the chosen
        // vertex is dominated by all of S.
        {{Flavor::ID, CotreeKind::Union, true, "univ if both sides are K1 (amended base)"},
         [](const Part& a, const Part& b) { return is_k1(a) && is_k1(b); }},
        {{Flavor::ID, CotreeKind::Join, false,
          "emp if one side is K1 and the other is emp and not univ"},
         [](const Part& a, const Part& b) {
             return (is_k1(a) && b.emp && !b.univ) || (is_k1(b) && a.emp && !a.univ);
         }},
        {{Flavor::ID, CotreeKind::Join, true, "univ iff univ1 or univ2"},
         [](const Part& a, const Part& b) { return a.univ || b.univ; }},

        {{Flavor::LD, CotreeKind::Union, false, "emp iff emp1 or emp2"},
         [](const Part& a, const Part& b) { return a.emp || b.emp; }},
        {{Flavor::LD, CotreeKind::Union, true,
          "univ if one side is K1 and the other is univ and not emp"},
         [](const Part& a, const Part& b) {
             return (is_k1(a) && b.univ && !b.emp) || (is_k1(b) && a.univ && !a.emp);
         }},
        {{Flavor::LD, CotreeKind::Join, false,
          "emp if one side is K1 and the other is emp and not univ"},
         [](const Part& a, const Part& b) {
             return (is_k1(a) && b.emp && !b.univ) || (is_k1(b) && a.emp && !a.univ);
         }},
        {{Flavor::LD, CotreeKind::Join, true, "univ iff univ1 or univ2"},
         [](const Part& a, const Part& b) { return a.univ || b.univ; }},
    };
    return r;
}

Part combine(const Part& a, const Part& b, CotreeKind op, Flavor f) {
    Part c{a.n + b.n, a.k + b.k, false, false};
    if (op == CotreeKind::Union)
        c.k += a.emp && b.emp;
    else
        c.k += a.univ && b.univ;
    for (const auto& r : rules()) {
        if (r.info.flavor != f || r.info.op != op || !r.holds(a, b)) continue;
        (r.info.sets_univ ? c.univ : c.emp) = true;
    }
    return c;
}

CographSummary fold(const Cotree& t, Flavor f) {
    t.validate();
    std::vector<Part> part(t.nodes().size());
    for (int v : t.postorder()) {
        const auto& nd = t.node(v);
        if (nd.kind == CotreeKind::Leaf) {
            part[v] = {1, 0, true, true};
            continue;
        }
        Part acc = part[nd.children[0]];
        for (std::size_t i = 1; i < nd.children.size(); ++i)
            acc = combine(acc, part[nd.children[i]], nd.kind, f);
        part[v] = acc;
    }
    const Part& r = part[t.root()];
    return {r.k, r.emp, r.univ};
}

// ---- profile DP ----
// Profile bits: 1 = some vertex in the flavor's domain has an empty signature,
// 2 = some vertex's signature equals S, 4 = S is empty.

constexpr int kInf = INT_MAX / 4;
using Table = std::array<int, 8>;
using Back = std::array<std::uint8_t, 8>;

struct LeafBase {
    int empty_set, singleton;  // profiles of S = {} and S = {x}
};

LeafBase leaf_base(Flavor f) {
    switch (f) {
        case Flavor::ID: return {7, 2};
        case Flavor::LD: return {7, 0};
        case Flavor::OLD: return {7, 1};
    }
    return {7, 0};
}

int combine_profile(int a, int b, CotreeKind op) {
    bool e1 = a & 1, u1 = a & 2, z1 = a & 4, e2 = b & 1, u2 = b & 2, z2 = b & 4;
    bool e, u;
    if (op == CotreeKind::Union) {
        if (e1 && e2) return -1;
        e = e1 || e2;
        u = (u1 && z2) || (u2 && z1);
    } else {
        if (u1 && u2) return -1;
        e = (e1 && z2) || (e2 && z1);
        u = u1 || u2;
    }
    return int(e) | (int(u) << 1) | (int(z1 && z2) << 2);
}

struct ProfileRun {
    const Cotree* t = nullptr;
    LeafBase base{};
    std::vector<Table> table;
    // For every internal node, one (prev, child) backpointer pair per fold step.
    std::vector<std::vector<std::pair<Back, Back>>> steps;
};

ProfileRun run_profiles(const Cotree& t, Flavor f) {
    t.validate();
    ProfileRun r;
    r.t = &t;
    r.base = leaf_base(f);
    r.table.assign(t.nodes().size(), Table{});
    r.steps.resize(t.nodes().size());
    for (int v : t.postorder()) {
        const auto& nd = t.node(v);
        if (nd.kind == CotreeKind::Leaf) {
            Table leaf;
            leaf.fill(kInf);
            leaf[r.base.empty_set] = 0;
            leaf[r.base.singleton] = 1;
            r.table[v] = leaf;
            continue;
        }
        Table acc = r.table[nd.children[0]];
        for (std::size_t i = 1; i < nd.children.size(); ++i) {
            const Table& ch = r.table[nd.children[i]];
            Table out;
            out.fill(kInf);
            Back prev{}, child{};
            for (int a = 0; a < 8; ++a) {
                if (acc[a] >= kInf) continue;
                for (int b = 0; b < 8; ++b) {
                    if (ch[b] >= kInf) continue;
                    int c = combine_profile(a, b, nd.kind);
                    if (c < 0 || acc[a] + ch[b] >= out[c]) continue;
                    out[c] = acc[a] + ch[b];
                    prev[c] = static_cast<std::uint8_t>(a);
                    child[c] = static_cast<std::uint8_t>(b);
                }
            }
            r.steps[v].emplace_back(prev, child);
            acc = out;
        }
        r.table[v] = acc;
    }
    return r;
}

// Best root profile among those accepted by `ok`; -1 when none is reachable.
template <class Ok>
int best_profile(const ProfileRun& r, Ok ok) {
    const Table& root = r.table[r.t->root()];
    int best = -1;
    for (int p = 0; p < 8; ++p)
        if (ok(p) && root[p] < kInf && (best < 0 || root[p] < root[best])) best = p;
    return best;
}

VertexSet reconstruct(const ProfileRun& r, int profile) {
    const Cotree& t = *r.t;
    std::vector<int> members;
    std::vector<std::pair<int, int>> stack{{t.root(), profile}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        const auto& nd = t.node(v);
        if (nd.kind == CotreeKind::Leaf) {
            if (p == r.base.singleton) members.push_back(nd.vertex);
            continue;
        }
        for (std::size_t i = nd.children.size() - 1; i >= 1; --i) {
            const auto& [prev, child] = r.steps[v][i - 1];
            stack.emplace_back(nd.children[i], child[p]);
            p = prev[p];
        }
        stack.emplace_back(nd.children[0], p);
    }
    return VertexSet(std::move(members));
}

CographSummary summary_from_profiles(const ProfileRun& r) {
    const Table& root = r.table[r.t->root()];
    int sep = *std::min_element(root.begin(), root.end());
    if (sep >= kInf) throw Error(ErrorCode::VerifierFailed, "no separating set exists");
    bool some_not_emp = false, some_not_univ = false;
    for (int p = 0; p < 8; ++p) {
        if (root[p] != sep) continue;
        some_not_emp |= !(p & 1);
        some_not_univ |= !(p & 2);
    }
    return {sep, !some_not_emp, !some_not_univ};
}

std::atomic<bool> g_old_gate{false};

void require_old_gate() {
    if (!g_old_gate.load())
        throw Error(ErrorCode::NotValidated,
                    "the OLD cograph recurrence is disabled until validate_old_dp() passes");
}

void require_twin_free(const Cotree& t) {
    if (auto p = cotree_closed_twin(t)) throw Error(ErrorCode::TwinsPresent, "twins " + pair_str(*p));
}

void require_open_twin_free(const Cotree& t) {
    if (auto p = cotree_open_twin(t)) throw Error(ErrorCode::OpenTwinsPresent, "open twins " + pair_str(*p));
}

bool connected_root(const Cotree& t) { return t.node(t.root()).kind != CotreeKind::Union; }

}  // namespace

std::optional<VertexPair> cotree_closed_twin(const Cotree& t) { return leaf_pair_under(t, CotreeKind::Join); }
std::optional<VertexPair> cotree_open_twin(const Cotree& t) { return leaf_pair_under(t, CotreeKind::Union); }

const std::vector<FlagRule>& flag_rules() {
    static const std::vector<FlagRule> out = [] {
        std::vector<FlagRule> v;
        for (const auto& r : rules()) v.push_back(r.info);
        return v;
    }();
    return out;
}

CographSummary sep_id_dp(const Cotree& t) {
    Cotree c = t.canonical();
    require_twin_free(c);
    return fold(c, Flavor::ID);
}

CographSummary sep_ld_dp(const Cotree& t) { return fold(t, Flavor::LD); }

int gamma_id_cograph(const Cotree& t) {
    auto s = sep_id_dp(t);
    return s.k + (s.emp ? 1 : 0);
}

int gamma_ld_cograph(const Cotree& t) {
    auto s = sep_ld_dp(t);
    return s.k + (s.emp ? 1 : 0);
}

int dim_cograph(const Cotree& t) {
    t.validate();
    if (!connected_root(t)) throw Error(ErrorCode::Disconnected, "cotree root is a UNION node");
    return sep_ld_dp(t).k;
}

bool old_dp_enabled() { return g_old_gate.load(); }

CographSummary sep_old_dp(const Cotree& t) {
    require_old_gate();
    require_open_twin_free(t);
    return summary_from_profiles(run_profiles(t, Flavor::OLD));
}

int gamma_old_cograph(const Cotree& t) {
    require_old_gate();
    require_open_twin_free(t);
    auto r = run_profiles(t, Flavor::OLD);
    int p = best_profile(r, [](int q) { return !(q & 1); });
    if (p < 0) throw Error(ErrorCode::IsolatedVertex, "graph has an isolated vertex");
    return r.table[t.root()][p];
}

int validate_old_dp(int max_n) {
    int checked = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& t : enumerate_cotrees(n)) {
            if (cotree_open_twin(t)) continue;
            Graph g = cotree_to_graph(t);
            auto r = run_profiles(t, Flavor::OLD);
            CographSummary dp = summary_from_profiles(r);
            auto fl = emp_univ_oracle(g, Flavor::OLD);
            int sep = min_set(g, ProblemKind::SEP_OLD).k;
            bool ok = dp == CographSummary{sep, fl.emp, fl.univ};
            int p = best_profile(r, [](int q) { return !(q & 1); });
            bool isolated = false;
            for (int v = 0; v < g.n(); ++v) isolated |= g.neighbors(v).empty();
            if (isolated)
                ok = ok && p < 0;
            else
                ok = ok && p >= 0 && r.table[t.root()][p] == min_set(g, ProblemKind::OLD).k;
            if (!ok)
                throw Error(ErrorCode::VerifierFailed, "OLD recurrence disagrees with the oracle on " +
                                                           cotree_to_string(t));
            ++checked;
        }
    if (max_n >= 9) g_old_gate.store(true);
    return checked;
}

VertexSet witness_cograph(const Cotree& t, ProblemKind kind) {
    t.validate();
    Flavor f = Flavor::LD;
    bool need_dom = false;
    switch (kind) {
        case ProblemKind::IC: need_dom = true; [[fallthrough]];
        case ProblemKind::SEP_ID:
            require_twin_free(t);
            f = Flavor::ID;
            break;
        case ProblemKind::LD: need_dom = true; break;
        case ProblemKind::SEP_LD: break;
        case ProblemKind::RS:
            if (!connected_root(t)) throw Error(ErrorCode::Disconnected, "cotree root is a UNION node");
            break;
        case ProblemKind::OLD: need_dom = true; [[fallthrough]];
        case ProblemKind::SEP_OLD:
            require_old_gate();
            require_open_twin_free(t);
            f = Flavor::OLD;
            break;
    }
    auto r = run_profiles(t, f);
    int p = best_profile(r, [&](int q) { return !need_dom || !(q & 1); });
    if (p < 0) throw Error(ErrorCode::IsolatedVertex, "graph has an isolated vertex");
    VertexSet s = reconstruct(r, p);
    Graph g = cotree_to_graph(t);
    Verdict v = check(g, s, kind);
    if (!v.ok || static_cast<int>(s.size()) != r.table[t.root()][p])
        throw Error(ErrorCode::VerifierFailed, "reconstructed witness rejected: " + v.describe());
    return s;
}

// ---- enumeration ----

namespace {

// Shapes are s-expressions with 'x' for every leaf; shapes[n][kind] lists the canonical
// trees with n leaves and root kind (0 = U, 1 = J); shapes[1] holds the lone leaf.
struct ShapeBook {
    std::vector<std::array<std::vector<std::string>, 2>> s;

    const std::vector<std::string>& get(int n, int kind) {
        while (static_cast<int>(s.size()) <= n) grow();
        return n == 1 ? s[1][0] : s[n][kind];
    }

    void grow() {
        int n = static_cast<int>(s.size());
        s.emplace_back();
        if (n == 0) return;
        if (n == 1) {
            s[1][0] = {"x"};
            s[1][1] = {"x"};
            return;
        }
        for (int kind = 0; kind < 2; ++kind) {
            std::vector<std::string> out;
            std::vector<std::string> picked;
            // Children in nonincreasing (size, index) order so each multiset appears once.
            std::function<void(int, int, int)> rec = [&](int left, int max_m, int max_i) {
                if (left == 0) {
                    if (picked.size() < 2) return;
                    std::string e = kind == 0 ? "(U" : "(J";
                    for (auto& c : picked) e += " " + c;
                    out.push_back(e + ")");
                    return;
                }
                for (int m = std::min(left, max_m); m >= 1; --m) {
                    const auto& opts = m == 1 ? s[1][0] : s[m][1 - kind];
                    int top = static_cast<int>(opts.size()) - 1;
                    if (m == max_m) top = std::min(top, max_i);
                    for (int i = top; i >= 0; --i) {
                        picked.push_back(opts[i]);
                        rec(left - m, m, i);
                        picked.pop_back();
                    }
                }
            };
            rec(n, n - 1, INT_MAX / 2);
            s[n][kind] = std::move(out);
        }
    }
};

Cotree shape_to_cotree(const std::string& shape) {
    std::string text;
    int next = 0;
    for (char c : shape) {
        if (c == 'x')
            text += std::to_string(next++);
        else
            text += c;
    }
    return parse_cotree(text);
}

}  // namespace

std::vector<Cotree> enumerate_cotrees(int n) {
    if (n < 1) return {};
    static ShapeBook book;
    static std::mutex mu;
    std::vector<std::string> shapes;
    {
        std::lock_guard lock(mu);
        if (n == 1) {
            shapes = book.get(1, 0);
        } else {
            shapes = book.get(n, 0);
            const auto& j = book.get(n, 1);
            shapes.insert(shapes.end(), j.begin(), j.end());
        }
    }
    std::vector<Cotree> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) out.push_back(shape_to_cotree(s));
    return out;
}

namespace {

// Composition of `leaves` into 2..4 parts. With twin_free set, parts below a JOIN node may
// contain at most one 1 (one leaf child), and parts below a UNION node must avoid 2 (a JOIN
// child on two leaves is a pair of twins).
std::vector<int> random_parts(int leaves, CotreeKind kind, bool twin_free, std::mt19937_64& rng) {
    auto acceptable = [&](const std::vector<int>& parts) {
        if (!twin_free) return true;
        if (kind == CotreeKind::Join) return std::count(parts.begin(), parts.end(), 1) <= 1;
        return std::count(parts.begin(), parts.end(), 2) == 0;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        int r = std::uniform_int_distribution<int>(2, std::min(leaves, 4))(rng);
        std::vector<int> cuts;
        std::uniform_int_distribution<int> cut(1, leaves - 1);
        while (static_cast<int>(cuts.size()) < r - 1) {
            int c = cut(rng);
            if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(leaves);
        std::vector<int> parts;
        int prev = 0;
        for (int c : cuts) parts.push_back(c - prev), prev = c;
        if (acceptable(parts)) return parts;
    }
    // Always valid fallbacks (a JOIN node here has at least three leaves).
    if (kind == CotreeKind::Union) return std::vector<int>(leaves, 1);
    return {1, leaves - 1};
}

Cotree build_random(int n, bool twin_free, std::mt19937_64& rng) {
    if (n < 1) throw Error(ErrorCode::BadParameter, "cotree needs at least one leaf");
    std::vector<CotreeNode> nodes;
    struct Job {
        int node, leaves;
        CotreeKind kind;
    };
    auto make = [&](int leaves, CotreeKind kind) {
        nodes.push_back({leaves == 1 ? CotreeKind::Leaf : kind, -1, {}});
        return static_cast<int>(nodes.size()) - 1;
    };
    CotreeKind root_kind = std::uniform_int_distribution<int>(0, 1)(rng) ? CotreeKind::Union : CotreeKind::Join;
    if (twin_free && n == 2) root_kind = CotreeKind::Union;
    std::vector<Job> jobs{{make(n, root_kind), n, root_kind}};
    int label = 0;
    while (!jobs.empty()) {
        Job j = jobs.back();
        jobs.pop_back();
        if (j.leaves == 1) {
            nodes[j.node].vertex = label++;
            continue;
        }
        CotreeKind child_kind = j.kind == CotreeKind::Union ? CotreeKind::Join : CotreeKind::Union;
        for (int part : random_parts(j.leaves, j.kind, twin_free, rng)) {
            int id = make(part, child_kind);
            nodes[j.node].children.push_back(id);
            jobs.push_back({id, part, child_kind});
        }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& nd : nodes)
        if (nd.kind == CotreeKind::Leaf) nd.vertex = perm[nd.vertex];
    return Cotree::from_nodes(std::move(nodes), 0);
}

}  // namespace

Cotree random_cotree(int n, std::mt19937_64& rng) { return build_random(n, false, rng); }
Cotree random_twin_free_cotree(int n, std::mt19937_64& rng) { return build_random(n, true, rng); }

}  // namespace idgraph
