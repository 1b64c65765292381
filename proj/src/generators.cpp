#include "idgraph/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "idgraph/cograph.hpp"
#include "idgraph/error.hpp"

namespace idgraph {

std::string ExtremalInstance::manifest_line() const {
    return family + " " + kind_name(kind) + " " + std::to_string(claimed_k) + " " +
           (claimed_D ? std::to_string(*claimed_D) : std::string("-")) + " " +
           std::to_string(claimed_n) + " solution=" + format_vertex_list(solution);
}

namespace {

[[noreturn]] void broken(const std::string& family, const std::string& what) {
    throw Error(ErrorCode::VerifierFailed, family + ": construction check failed: " + what);
}

ExtremalInstance finish(ExtremalInstance inst) {
    Graph g = compile(inst.model);
    if (g.n() != inst.claimed_n)
        broken(inst.family, "n=" + std::to_string(g.n()) + ", expected " + std::to_string(inst.claimed_n));
    if (static_cast<int>(inst.solution.size()) != inst.claimed_k)
        broken(inst.family, "solution size " + std::to_string(inst.solution.size()));
    Verdict v = check(g, inst.solution, inst.kind);
    if (!v.ok) broken(inst.family, v.describe());
    if (inst.claimed_D && diameter(g) != *inst.claimed_D)
        broken(inst.family, "diameter " + std::to_string(diameter(g)));
    return inst;
}

void need(bool ok, ErrorCode code, const std::string& msg) {
    if (!ok) throw Error(code, msg);
}

ExtremalInstance make(AnyModel m, std::vector<int> sol, ProblemKind kind, int n, std::string family,
                      std::optional<int> D = std::nullopt) {
    ExtremalInstance e;
    e.model = std::move(m);
    e.solution = VertexSet(std::move(sol));
    e.kind = kind;
    e.claimed_n = n;
    e.claimed_k = static_cast<int>(e.solution.size());
    e.claimed_D = D;
    e.family = std::move(family);
    return e;
}

// ---- interval families ----

// ]i,j[ for 1 <= i < j <= k+1; codes are ]i,i+1[.
IntervalModel full_family(int k, std::vector<int>& codes) {
    IntervalModel m;
    for (int i = 1; i <= k + 1; ++i)
        for (int j = i + 1; j <= k + 1; ++j) {
            if (j == i + 1) codes.push_back(m.n());
            m.intervals.push_back({Rational(i), Rational(j)});
        }
    return m;
}

}  // namespace

ExtremalInstance ext_interval_ic(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "interval-ic needs k >= 1");
    std::vector<int> codes;
    auto m = full_family(k, codes);
    return finish(make(m, codes, ProblemKind::IC, k * (k + 1) / 2, "interval-ic"));
}

ExtremalInstance ext_interval_ld(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "interval-ld needs k >= 1");
    std::vector<int> codes;
    auto m = full_family(k, codes);
    for (int c : codes) m.intervals.push_back(m.intervals[c]);
    return finish(make(m, codes, ProblemKind::LD, k * (k + 3) / 2, "interval-ld"));
}

ExtremalInstance ext_interval_old(int k) {
    need(k >= 2, ErrorCode::KTooSmall, "interval-old needs k >= 2");
    // Codes in blocks of two (]A,A+2[, ]A+1,A+3[), plus one block of three when k is odd.
    std::vector<Interval> code;
    int blocks2 = k % 2 == 0 ? k / 2 : (k - 3) / 2;
    for (int t = 0; t < blocks2; ++t) {
        int a = 4 * t;
        code.push_back({Rational(a), Rational(a + 2)});
        code.push_back({Rational(a + 1), Rational(a + 3)});
    }
    if (k % 2 == 1) {
        int a = 4 * blocks2;
        for (int d = 0; d < 3; ++d) code.push_back({Rational(a + d), Rational(a + d + 3)});
    }
    auto overlaps = [](const Interval& x, const Interval& y) {
        return std::max(x.left, y.left) < std::min(x.right, y.right);
    };
    auto sig_of = [&](const Interval& x, int skip) {
        std::vector<int> s;
        for (int c = 0; c < k; ++c)
            if (c != skip && overlaps(x, code[c])) s.push_back(c);
        return s;
    };
    std::set<std::vector<int>> used;
    for (int c = 0; c < k; ++c) used.insert(sig_of(code[c], c));
    IntervalModel m;
    m.intervals = code;
    std::vector<int> sol(k);
    for (int c = 0; c < k; ++c) sol[c] = c;
    // One non-code interval per range of consecutive codes, as wide as the range allows.
    for (int p = 0; p < k; ++p)
        for (int q = p; q < k; ++q) {
            Rational a = p == 0 ? code[0].left - Rational(1) : code[p - 1].right;
            Rational b = q == k - 1 ? code[k - 1].right + Rational(1) : code[q + 1].left;
            if (!(a < b)) continue;
            Interval x{a, b};
            auto s = sig_of(x, -1);
            std::vector<int> want;
            for (int c = p; c <= q; ++c) want.push_back(c);
            if (s != want || !used.insert(s).second) continue;
            m.intervals.push_back(x);
        }
    return finish(make(m, sol, ProblemKind::OLD, k * (k + 1) / 2, "interval-old"));
}

ExtremalInstance ext_interval_md(int k, int D) {
    need(k >= 2 && k % 2 == 0, ErrorCode::BadParameter, "interval-md needs even k >= 2");
    need(D >= 2, ErrorCode::BadParameter, "interval-md needs D >= 2");
    const int h = k / 2, L = h + 1;
    // With a single row the columns alone fall one short of diameter D.
    const int cols = k >= 4 ? D : D + 1;
    IntervalModel m;
    std::map<std::pair<int, int>, int> id;
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i <= h; ++i) {
            id[{i, j}] = m.n();
            m.intervals.push_back({Rational((j - 1) * L + i), Rational(j * L + i) + Rational(1, 2)});
        }
    std::vector<int> sol;
    for (int i = 1; i <= h; ++i) sol.push_back(id[{i, 1}]), sol.push_back(id[{i, cols}]);
    std::vector<Interval> base = m.intervals;
    std::sort(base.begin(), base.end(), [](const Interval& x, const Interval& y) { return x.left < y.left; });
    const Rational eighth(1, 8);
    for (int j = 1; j <= cols - 1; ++j)
        for (int i = 1; i <= h; ++i) {
            Rational e = m.intervals[id[{i, j}]].right;
            int taken = 0;
            for (const auto& s : base) {
                if (!(e < s.left) || taken == h + 1) continue;
                m.intervals.push_back({e + eighth, s.left - eighth});
                ++taken;
            }
        }
    return finish(make(m, sol, ProblemKind::RS, m.n(), "interval-md", D));
}

// ---- unit interval families ----

namespace {

Interval unit_at(Rational left) { return {left, left + Rational(1)}; }

}  // namespace

ExtremalInstance ext_unit_ic(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "unit-ic needs k >= 1");
    IntervalModel m;
    std::vector<int> sol;
    for (int i = 0; i <= 2 * k - 2; ++i) {
        if (i % 2 == 0) sol.push_back(i);
        m.intervals.push_back(unit_at(Rational(i, 2)));
    }
    return finish(make(m, sol, ProblemKind::IC, 2 * k - 1, "unit-ic"));
}

ExtremalInstance ext_unit_ld(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "unit-ld needs k >= 1");
    IntervalModel m;
    std::vector<int> sol;
    for (int i = 0; i <= 2 * k - 2; ++i) {
        if (i % 2 == 0) sol.push_back(i);
        m.intervals.push_back(unit_at(Rational(i, 2)));
    }
    for (int c : sol) m.intervals.push_back(m.intervals[c]);
    return finish(make(m, sol, ProblemKind::LD, 3 * k - 1, "unit-ld"));
}

ExtremalInstance ext_unit_old(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "unit-old needs k >= 1");
    IntervalModel m;
    std::vector<int> sol;
    // Path I_1..I_{3k-1} with spacing 2/3; J_i touches exactly I_{3i-2} and I_{3i-1}.
    for (int j = 1; j <= 3 * k - 1; ++j) {
        if (j % 3 != 0) sol.push_back(m.n());
        m.intervals.push_back(unit_at(Rational(2 * j, 3)));
    }
    for (int i = 1; i <= k; ++i) m.intervals.push_back(unit_at(Rational(2 * i - 1)));
    return finish(make(m, sol, ProblemKind::OLD, 4 * k - 1, "unit-old"));
}

ExtremalInstance ext_unit_md(int k, int D) {
    need(k >= 1, ErrorCode::KTooSmall, "unit-md needs k >= 1");
    need(D >= 1, ErrorCode::BadParameter, "unit-md needs D >= 1");
    IntervalModel m;
    std::vector<int> sol;
    for (int i = 0; i <= k * D; ++i) {
        if (i < k) sol.push_back(i);
        m.intervals.push_back(unit_at(Rational(i, k + 1)));
    }
    return finish(make(m, sol, ProblemKind::RS, k * D + 1, "unit-md", D));
}

// ---- permutation families ----

namespace {

// Codes 0..k-1 form a path; a non-code segment in top gap a and bottom gap b crosses code x
// iff exactly one of its endpoints lies past x's endpoint.
ExtremalInstance perm_neighborhood(int k, ProblemKind kind, int n, const std::string& family) {
    std::vector<int> tau(k), beta(k);
    for (int x = 0; x < k; ++x) tau[x] = beta[x] = x + 1;
    for (int x = 0; x + 1 < k; x += 2) std::swap(tau[x], tau[x + 1]);
    for (int x = 1; x + 1 < k; x += 2) std::swap(beta[x], beta[x + 1]);
    std::vector<std::pair<Rational, Rational>> tb;
    for (int x = 0; x < k; ++x) tb.emplace_back(Rational(2 * tau[x]), Rational(2 * beta[x]));
    // Code signatures on the code path.
    std::set<std::vector<int>> blocked;
    for (int x = 0; x < k; ++x) {
        std::vector<int> s;
        for (int y = 0; y < k; ++y) {
            bool adj = std::abs(x - y) == 1;
            if (adj || (x == y && kind == ProblemKind::IC)) s.push_back(y);
        }
        if (kind != ProblemKind::LD) blocked.insert(s);
    }
    std::set<std::vector<int>> seen;
    std::vector<int> top_count(k + 1, 0), bottom_count(k + 1, 0);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
            std::vector<int> s;
            for (int x = 0; x < k; ++x)
                if ((tau[x] <= a) != (beta[x] <= b)) s.push_back(x);
            if (s.empty() || blocked.count(s) || !seen.insert(s).second) continue;
            // Several segments may share a gap; offsets keep endpoints distinct.
            Rational t = Rational(2 * a + 1) + Rational(++top_count[a], 4 * k * k + 4);
            Rational bo = Rational(2 * b + 1) + Rational(++bottom_count[b], 4 * k * k + 4);
            tb.emplace_back(t, bo);
        }
    std::vector<int> sol(k);
    for (int x = 0; x < k; ++x) sol[x] = x;
    return finish(make(rank_compress(tb), sol, kind, n, family));
}

using Coords = std::vector<std::pair<Rational, Rational>>;

Graph coords_graph(const Coords& tb) {
    std::vector<VertexPair> es;
    for (int u = 0; u < static_cast<int>(tb.size()); ++u)
        for (int v = u + 1; v < static_cast<int>(tb.size()); ++v)
            if ((tb[u].first < tb[v].first) != (tb[u].second < tb[v].second)) es.emplace_back(u, v);
    return Graph(static_cast<int>(tb.size()), es);
}

struct ZigzagPaths {
    Coords tb;
    std::vector<int> solution;
    std::map<std::pair<int, int>, int> id;  // (path, position) -> vertex
    int h = 0, m = 0;
    std::int64_t len = 0;
};

// k/2 zigzag paths of m segments each, path i+1 shifted right by 2.
ZigzagPaths zigzag(int k, int m) {
    ZigzagPaths z;
    z.h = k / 2;
    z.m = m;
    const std::int64_t sigma = z.h + 1, step = 2 * sigma;
    z.len = 2 * sigma + 1;
    for (int i = 1; i <= z.h; ++i)
        for (int j = 1; j <= m; ++j) {
            std::int64_t p = step * (j - 1) + 2 * (i - 1);
            z.id[{i, j}] = static_cast<int>(z.tb.size());
            if (j % 2 == 1)
                z.tb.emplace_back(Rational(p + z.len), Rational(p));
            else
                z.tb.emplace_back(Rational(p), Rational(p + z.len));
        }
    for (int i = 1; i <= z.h; ++i) z.solution.push_back(z.id[{i, 1}]), z.solution.push_back(z.id[{i, m}]);
    return z;
}

// K_{2,k}: two parallel segments crossing k parallel segments.
Coords complete_bipartite_2k(int k, std::vector<int>& sol) {
    Coords tb;
    for (int i = 0; i < 2; ++i) tb.emplace_back(Rational(i), Rational(k + i));
    for (int j = 0; j < k; ++j) tb.emplace_back(Rational(2 + j), Rational(j));
    sol = {0};
    for (int j = 0; j + 1 < k; ++j) sol.push_back(2 + j);
    return tb;
}

int md_path_length(int k, int D) { return k == 2 ? D + 1 : D - 1; }

}  // namespace

ExtremalInstance ext_perm_ic(int k) {
    need(k >= 3, ErrorCode::KTooSmall, "perm-ic needs k >= 3");
    return perm_neighborhood(k, ProblemKind::IC, k * k - 2, "perm-ic");
}

ExtremalInstance ext_perm_ld(int k) {
    need(k >= 3, ErrorCode::KTooSmall, "perm-ld needs k >= 3");
    return perm_neighborhood(k, ProblemKind::LD, k * k + k - 2, "perm-ld");
}

ExtremalInstance ext_perm_old(int k) {
    need(k >= 4, ErrorCode::KTooSmall, "perm-old needs k >= 4");
    return perm_neighborhood(k, ProblemKind::OLD, k * k - 2, "perm-old");
}

ExtremalInstance ext_perm_md(int k, int D) {
    need(k >= 2 && k % 2 == 0, ErrorCode::BadParameter, "perm-md needs even k >= 2");
    need(D >= 2, ErrorCode::BadParameter, "perm-md needs D >= 2");
    if (k >= 4 && D == 2) {
        std::vector<int> sol;
        auto tb = complete_bipartite_2k(k, sol);
        return finish(make(rank_compress(tb), sol, ProblemKind::RS, k + 2, "perm-md", D));
    }
    ZigzagPaths z = zigzag(k, md_path_length(k, D));
    Coords tb = z.tb;
    std::vector<Rational> tops;
    for (auto& [t, b] : z.tb) tops.push_back(t);
    std::sort(tops.begin(), tops.end());
    VertexSet S(z.solution);
    std::set<Rational> used_t(tops.begin(), tops.end()), used_b;
    for (auto& [t, b] : tb) used_b.insert(b);
    // Greedy fillers between consecutive segments of each path; a candidate stays only if
    // the diameter and the resolving set survive.
    for (int i = 1; i <= z.h; ++i)
        for (int j = 2; j < z.m; j += 2) {
            Rational lo = z.tb[z.id[{i, j}]].second, hi = z.tb[z.id[{i, j + 1}]].second;
            if (hi < lo) std::swap(lo, hi);
            std::vector<Rational> cand;
            Rational reach(3 * z.len);
            for (std::size_t x = 0; x + 1 < tops.size(); ++x) {
                Rational mid = (tops[x] + tops[x + 1]) / Rational(2);
                if (lo - reach < mid && mid < hi + reach) cand.push_back(mid);
            }
            const int nb = static_cast<int>(cand.size());
            for (int c = 0; c < nb; ++c) {
                Rational b = lo + (hi - lo) * Rational(c + 1, nb + 1);
                if (used_t.count(cand[c]) || used_b.count(b)) continue;
                tb.emplace_back(cand[c], b);
                Graph g = coords_graph(tb);
                if (is_connected(g) && diameter(g) == D && is_resolving_set(g, S)) {
                    used_t.insert(cand[c]);
                    used_b.insert(b);
                } else {
                    tb.pop_back();
                }
            }
        }
    return finish(make(rank_compress(tb), z.solution, ProblemKind::RS, static_cast<int>(tb.size()),
                       "perm-md", D));
}

// ---- bipartite permutation families ----

namespace {

struct BSide {
    int vertex, x, y;  // neighbors are the A vertices at positions x..y
};

// A in its order, B sorted so that x and y are both nondecreasing. Each a is followed on top
// by the b's ending at it; on the bottom each a is preceded by the b's starting at it.
PermutationModel bipartite_model(int n, const std::vector<int>& a, const std::vector<BSide>& b) {
    std::vector<std::int64_t> top(n, -1), bottom(n, -1);
    std::int64_t tpos = 0, bpos = 0;
    for (int p = 0; p < static_cast<int>(a.size()); ++p) {
        top[a[p]] = tpos++;
        for (const auto& s : b)
            if (s.y == p) top[s.vertex] = tpos++;
        for (const auto& s : b)
            if (s.x == p) bottom[s.vertex] = bpos++;
        bottom[a[p]] = bpos++;
    }
    PermutationModel m;
    for (int v = 0; v < n; ++v) m.segments.push_back({top[v], bottom[v]});
    return m;
}

ExtremalInstance check_bipartite(ExtremalInstance inst, const Graph& intended) {
    Graph g = compile(inst.model);
    if (!(g == intended)) broken(inst.family, "segment model does not realize the intended graph");
    if (!is_bipartite(g)) broken(inst.family, "graph is not bipartite");
    return finish(std::move(inst));
}

}  // namespace

ExtremalInstance ext_bipperm_ld(int k) {
    need(k >= 1, ErrorCode::KTooSmall, "bipperm-ld needs k >= 1");
    // Path v_0..v_{2k-2}, pendant q_j on v_{2j}.
    const int len = 2 * k - 1, n = 3 * k - 1;
    std::vector<VertexPair> es;
    for (int i = 0; i + 1 < len; ++i) es.emplace_back(i, i + 1);
    std::vector<int> a, sol;
    std::vector<BSide> b;
    for (int j = 0; j < k; ++j) {
        a.push_back(2 * j);
        sol.push_back(2 * j);
        es.emplace_back(2 * j, len + j);
        b.push_back({len + j, j, j});
        if (j + 1 < k) b.push_back({2 * j + 1, j, j + 1});
    }
    return check_bipartite(make(bipartite_model(n, a, b), sol, ProblemKind::LD, n, "bipperm-ld"), Graph(n, es));
}

ExtremalInstance ext_bipperm_ic(int k) {
    need(k >= 3, ErrorCode::KTooSmall, "bipperm-ic needs k >= 3");
    // Path v_0..v_{2k-2}; w_c adjacent to v_{c-2}, v_c, v_{c+2} for even c in 2..2k-4.
    const int len = 2 * k - 1, n = 3 * k - 3;
    std::vector<VertexPair> es;
    for (int i = 0; i + 1 < len; ++i) es.emplace_back(i, i + 1);
    std::vector<int> a, sol;
    std::vector<BSide> b;
    for (int j = 0; j < k; ++j) a.push_back(2 * j), sol.push_back(2 * j);
    int next = len;
    for (int j = 0; j + 1 < k; ++j) {
        b.push_back({2 * j + 1, j, j + 1});
        int c = 2 * j + 2;
        if (c <= 2 * k - 4) {
            for (int d : {c - 2, c, c + 2}) es.emplace_back(d, next);
            b.push_back({next++, j, j + 2});
        }
    }
    return check_bipartite(make(bipartite_model(n, a, b), sol, ProblemKind::IC, n, "bipperm-ic"), Graph(n, es));
}

ExtremalInstance ext_bipperm_old(int k) {
    need(k >= 4, ErrorCode::KTooSmall, "bipperm-old needs k >= 4");
    // Path v_0..v_{k-1}, pendant p_i on every v_i except v_1 and v_{k-2}.
    const int n = 2 * k - 2;
    std::vector<int> pend(k, -1);
    int next = k;
    for (int i = 0; i < k; ++i)
        if (i != 1 && i != k - 2) pend[i] = next++;
    std::vector<VertexPair> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    for (int i = 0; i < k; ++i)
        if (pend[i] >= 0) es.emplace_back(i, pend[i]);
    // A: even path vertices and pendants of odd ones, in path order.
    std::vector<int> a, pos(n, -1);
    for (int i = 0; i < k; ++i) {
        int v = i % 2 == 0 ? i : pend[i];
        if (v < 0) continue;
        pos[v] = static_cast<int>(a.size());
        a.push_back(v);
    }
    std::vector<BSide> b;
    for (int i = 0; i < k; ++i) {
        if (i % 2 == 0) {
            if (pend[i] >= 0) b.push_back({pend[i], pos[i], pos[i]});
            continue;
        }
        int lo = pos[i - 1];
        int hi = i + 1 < k ? pos[i + 1] : (pend[i] >= 0 ? pos[pend[i]] : lo);
        if (pend[i] >= 0) hi = std::max(hi, pos[pend[i]]);
        b.push_back({i, lo, hi});
    }
    std::vector<int> sol(k);
    for (int i = 0; i < k; ++i) sol[i] = i;
    return check_bipartite(make(bipartite_model(n, a, b), sol, ProblemKind::OLD, n, "bipperm-old"), Graph(n, es));
}

ExtremalInstance ext_bipperm_md(int k, int D) {
    need(k >= 2 && k % 2 == 0, ErrorCode::BadParameter, "bipperm-md needs even k >= 2");
    need(D >= 2, ErrorCode::BadParameter, "bipperm-md needs D >= 2");
    ExtremalInstance inst;
    if (k >= 4 && D == 2) {
        std::vector<int> sol;
        auto tb = complete_bipartite_2k(k, sol);
        inst = make(rank_compress(tb), sol, ProblemKind::RS, k + 2, "bipperm-md", D);
    } else {
        ZigzagPaths z = zigzag(k, md_path_length(k, D));
        inst = make(rank_compress(z.tb), z.solution, ProblemKind::RS, static_cast<int>(z.tb.size()),
                    "bipperm-md", D);
    }
    if (!is_bipartite(compile(inst.model))) broken("bipperm-md", "graph is not bipartite");
    return finish(std::move(inst));
}

// ---- cograph families ----

namespace {

Cotree parse(const char* s) { return parse_cotree(s); }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct FamilyBook {
    using Rule = std::optional<Cotree> (*)(FamilyBook&, int, int);
    std::map<std::pair<int, int>, Cotree> known;  // bases, then memoized results
    Rule rule = nullptr;

    std::optional<Cotree> get(int n, int v) {
        if (auto it = known.find({n, v}); it != known.end()) return it->second;
        auto t = rule(*this, n, v);
        if (t) known[{n, v}] = *t;
        return t;
    }
};

ExtremalInstance cograph_instance(const Cotree& t, int n, int variant, bool ld) {
    static const FlagPair profile[5] = {{}, {false, false}, {true, false}, {false, true}, {true, true}};
    int den = ld ? 3 : 2;
    int num[5] = {0, n + 2, n + 1, n + 1, n};
    ExtremalInstance e;
    e.model = t;
    e.kind = ld ? ProblemKind::SEP_LD : ProblemKind::SEP_ID;
    e.claimed_n = n;
    e.claimed_k = ceil_div(num[variant], den);
    e.claimed_flags = profile[variant];
    e.family = ld ? "cograph-ld" : "cograph-id";
    e.solution = witness_cograph(t, e.kind);
    CographSummary s = ld ? sep_ld_dp(t) : sep_id_dp(t);
    if (s != CographSummary{e.claimed_k, e.claimed_flags->emp, e.claimed_flags->univ})
        broken(e.family, "recurrence value differs from the claimed profile");
    return finish(std::move(e));
}


std::optional<Cotree> id_rule(FamilyBook& book, int m, int v) {
    const Cotree k1 = Cotree::leaf(0);
    std::optional<Cotree> g;
    switch (v) {
        case 1:  // K3-bar join G2(m-3)
            if (m >= 6 && (g = book.get(m - 3, 2))) return cotree_join(parse("(U 0 1 2)"), *g);
            break;
        case 2:  // K1 + G4(m-1)
            if (m >= 5 && (g = book.get(m - 1, 4))) return cotree_union(k1, *g);
            break;
        case 3:  // K1 join G4(m-1)
            if (m >= 5 && (g = book.get(m - 1, 4))) return cotree_join(k1, *g);
            break;
        default:  // K1 + G3(m-1)
            if (m >= 4 && (g = book.get(m - 1, 3))) return cotree_union(k1, *g);
            break;
    }
    return std::nullopt;
}

std::optional<Cotree> ld_rule(FamilyBook& book, int m, int v) {
    const Cotree k1 = Cotree::leaf(0);
    std::optional<Cotree> g;
    switch (v) {
        case 1:  // K2 + G3(m-2)
            if (m >= 4 && (g = book.get(m - 2, 3))) return cotree_union(parse("(J 0 1)"), *g);
            break;
        case 2:  // K1 + G1(m-1)
            if (m >= 5 && (g = book.get(m - 1, 1))) return cotree_union(k1, *g);
            break;
        case 3:  // K1 join G1(m-1)
            if (m >= 5 && (g = book.get(m - 1, 1))) return cotree_join(k1, *g);
            break;
        default:  // K1 + G3(m-1)
            if (m >= 3 && (g = book.get(m - 1, 3))) return cotree_union(k1, *g);
            break;
    }
    return std::nullopt;
}

ExtremalInstance cograph_family(FamilyBook& book, std::mutex& mu, int n, int variant, bool ld) {
    need(variant >= 1 && variant <= 4, ErrorCode::BadParameter, "variant must be 1..4");
    std::optional<Cotree> t;
    {
        std::lock_guard lock(mu);
        t = book.get(n, variant);
    }
    if (!t)
        throw Error(ErrorCode::Unreachable, std::string(ld ? "cograph-ld" : "cograph-id") + ": (n=" +
                                                std::to_string(n) + ", variant=" + std::to_string(variant) +
                                                ") is not reachable");
    return cograph_instance(*t, n, variant, ld);
}

}  // namespace

ExtremalInstance ext_cograph_id(int n, int variant) {
    static std::mutex mu;
    static FamilyBook book = [] {
        FamilyBook b;
        b.rule = id_rule;
        b.known[{3, 2}] = parse("(U 0 1 2)");
        b.known[{3, 3}] = parse("(J 0 (U 1 2))");
        b.known[{4, 2}] = parse("(U 0 1 2 3)");
        b.known[{4, 3}] = parse("(J (U 0 1) (U 2 3))");
        return b;
    }();
    return cograph_family(book, mu, n, variant, false);
}

ExtremalInstance ext_cograph_ld(int n, int variant) {
    static std::mutex mu;
    static FamilyBook book = [] {
        FamilyBook b;
        b.rule = ld_rule;
        b.known[{2, 2}] = parse("(U 0 1)");
        b.known[{2, 3}] = parse("(J 0 1)");
        b.known[{3, 2}] = parse("(U 0 1 2)");
        b.known[{3, 3}] = parse("(J 0 1 2)");
        b.known[{4, 2}] = parse("(U 0 1 (J 2 3))");
        b.known[{4, 3}] = parse("(J 0 (U 1 (J 2 3)))");
        return b;
    }();
    return cograph_family(book, mu, n, variant, true);
}

// ---- dispatch ----

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "interval-ic", "interval-old", "interval-ld", "interval-md", "unit-ic",     "unit-old",
        "unit-ld",     "unit-md",      "perm-ic",     "perm-old",    "perm-ld",     "perm-md",
        "bipperm-ld",  "bipperm-ic",   "bipperm-old", "bipperm-md",  "cograph-id",  "cograph-ld"};
    return names;
}

ExtremalInstance generate(const std::string& family, const FamilyParams& p) {
    auto needD = [&] {
        if (!p.D) throw Error(ErrorCode::MissingDiameter, family + " needs a diameter");
        return *p.D;
    };
    if (family == "interval-ic") return ext_interval_ic(p.k);
    if (family == "interval-old") return ext_interval_old(p.k);
    if (family == "interval-ld") return ext_interval_ld(p.k);
    if (family == "interval-md") return ext_interval_md(p.k, needD());
    if (family == "unit-ic") return ext_unit_ic(p.k);
    if (family == "unit-old") return ext_unit_old(p.k);
    if (family == "unit-ld") return ext_unit_ld(p.k);
    if (family == "unit-md") return ext_unit_md(p.k, needD());
    if (family == "perm-ic") return ext_perm_ic(p.k);
    if (family == "perm-old") return ext_perm_old(p.k);
    if (family == "perm-ld") return ext_perm_ld(p.k);
    if (family == "perm-md") return ext_perm_md(p.k, needD());
    if (family == "bipperm-ld") return ext_bipperm_ld(p.k);
    if (family == "bipperm-ic") return ext_bipperm_ic(p.k);
    if (family == "bipperm-old") return ext_bipperm_old(p.k);
    if (family == "bipperm-md") return ext_bipperm_md(p.k, needD());
    if (family == "cograph-id") return ext_cograph_id(p.n, p.variant);
    if (family == "cograph-ld") return ext_cograph_ld(p.n, p.variant);
    throw Error(ErrorCode::BadParameter, "unknown family '" + family + "'");
}

}  // namespace idgraph
