#include "idgraph/bounds.hpp"

#include <cmath>
#include <limits>

#include "idgraph/cograph.hpp"
#include "idgraph/error.hpp"

namespace idgraph {

const char* class_name(GraphClass c) {
    switch (c) {
        case GraphClass::INTERVAL: return "interval";
        case GraphClass::UNIT_INTERVAL: return "unit-interval";
        case GraphClass::PERMUTATION: return "permutation";
        case GraphClass::BIPARTITE_PERMUTATION: return "bipartite-permutation";
        case GraphClass::COGRAPH: return "cograph";
        case GraphClass::GENERAL: return "general";
    }
    return "?";
}

GraphClass parse_class(const std::string& s) {
    for (auto c : {GraphClass::INTERVAL, GraphClass::UNIT_INTERVAL, GraphClass::PERMUTATION,
                   GraphClass::BIPARTITE_PERMUTATION, GraphClass::COGRAPH, GraphClass::GENERAL})
        if (s == class_name(c)) return c;
    throw Error(ErrorCode::Parse, "unknown class '" + s + "'");
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::IC: return "ic";
        case BoundKind::LD: return "ld";
        case BoundKind::OLD: return "old";
        case BoundKind::MD: return "md";
    }
    return "?";
}

BoundKind parse_bound_kind(const std::string& s) {
    for (auto k : {BoundKind::IC, BoundKind::LD, BoundKind::OLD, BoundKind::MD})
        if (s == bound_kind_name(k)) return k;
    throw Error(ErrorCode::Parse, "unknown bound kind '" + s + "'");
}

BoundKind bound_kind_for(ProblemKind k) {
    switch (k) {
        case ProblemKind::IC: return BoundKind::IC;
        case ProblemKind::LD: return BoundKind::LD;
        case ProblemKind::OLD: return BoundKind::OLD;
        case ProblemKind::RS: return BoundKind::MD;
        default: break;
    }
    throw Error(ErrorCode::UnsupportedCombination, std::string("no bound for ") + kind_name(k));
}

namespace {

// Formula value at real x; used both for the exact integer table and for the real root.
long double formula(GraphClass c, BoundKind kind, long double k, long double D) {
    switch (c) {
        case GraphClass::INTERVAL:
            if (kind == BoundKind::LD) return k * (k + 3) / 2;
            if (kind == BoundKind::MD) return 2 * k * k * D + 4 * k * k + k * D + 5 * k + 1;
            return k * (k + 1) / 2;
        case GraphClass::UNIT_INTERVAL:
            if (kind == BoundKind::LD) return 3 * k - 1;
            if (kind == BoundKind::MD) return k * (D + 2) - 2;
            return 2 * k - 1;
        case GraphClass::PERMUTATION:
            if (kind == BoundKind::LD) return k * k + k - 2;
            if (kind == BoundKind::MD) return 2 * k * k * (D + 3) + 3 * k;
            return k * k - 2;
        case GraphClass::BIPARTITE_PERMUTATION:
            if (kind == BoundKind::OLD) return 2 * k + 2;
            if (kind == BoundKind::MD) return k * (2 * D - 1) + 2;
            return 3 * k + 2;
        case GraphClass::COGRAPH:
            if (kind == BoundKind::IC) return 2 * k - 2;
            return 3 * k;
        case GraphClass::GENERAL:
            if (kind == BoundKind::LD) return std::pow(2.0L, k) + k - 1;
            if (kind == BoundKind::MD) return std::pow(D, k) + k;
            return std::pow(2.0L, k) - 1;
    }
    return 0;
}

void check_query(GraphClass c, BoundKind kind, std::optional<int> D) {
    if (c == GraphClass::COGRAPH && kind == BoundKind::OLD)
        throw Error(ErrorCode::UnsupportedCombination, "no open locating-dominating bound for cographs");
    if (kind == BoundKind::MD && !D) throw Error(ErrorCode::MissingDiameter, "metric dimension bounds need D");
    if (D && *D < 1) throw Error(ErrorCode::BadParameter, "D must be positive");
}

int min_k(GraphClass c, BoundKind kind) {
    return c == GraphClass::PERMUTATION && kind != BoundKind::MD ? 3 : 1;
}

long long exact_value(GraphClass c, BoundKind kind, long long k, long long D) {
    auto checked = [](__int128 v) {
        if (v > std::numeric_limits<long long>::max())
            throw Error(ErrorCode::BadParameter, "bound value exceeds 64 bits");
        return static_cast<long long>(v);
    };
    __int128 K = k, d = D;
    switch (c) {
        case GraphClass::INTERVAL:
            if (kind == BoundKind::LD) return checked(K * (K + 3) / 2);
            if (kind == BoundKind::MD) return checked(2 * K * K * d + 4 * K * K + K * d + 5 * K + 1);
            return checked(K * (K + 1) / 2);
        case GraphClass::GENERAL: {
            __int128 base = kind == BoundKind::MD ? d : 2, p = 1;
            for (long long i = 0; i < k; ++i) {
                p *= base;
                if (p > std::numeric_limits<long long>::max())
                    throw Error(ErrorCode::BadParameter, "bound value exceeds 64 bits");
            }
            if (kind == BoundKind::LD) return checked(p + K - 1);
            if (kind == BoundKind::MD) return checked(p + K);
            return checked(p - 1);
        }
        default:
            return checked(static_cast<__int128>(std::llround(formula(c, kind, k, D))));
    }
}

}  // namespace

long long max_order(const BoundQuery& q) {
    check_query(q.cls, q.kind, q.D);
    if (q.k < min_k(q.cls, q.kind))
        throw Error(ErrorCode::KTooSmall, std::string(class_name(q.cls)) + " " + bound_kind_name(q.kind) +
                                              " bound needs k >= " + std::to_string(min_k(q.cls, q.kind)));
    return exact_value(q.cls, q.kind, q.k, q.D.value_or(0));
}

std::string theorem_label(GraphClass c, BoundKind kind) {
    static const char* const table[6][4] = {
        {"interval:n<=k(k+1)/2", "interval:n<=k(k+3)/2", "interval:n<=k(k+1)/2",
         "interval:n<=2k^2D+4k^2+kD+5k+1"},
        {"unit-interval:n<=2k-1", "unit-interval:n<=3k-1", "unit-interval:n<=2k-1", "unit-interval:n<=k(D+2)-2"},
        {"permutation:n<=k^2-2(k>=3)", "permutation:n<=k^2+k-2(k>=3)", "permutation:n<=k^2-2(k>=3)",
         "permutation:n<=2k^2(D+3)+3k"},
        {"bipartite-permutation:n<=3k+2", "bipartite-permutation:n<=3k+2", "bipartite-permutation:n<=2k+2",
         "bipartite-permutation:n<=k(2D-1)+2"},
        {"cograph:n<=2k-2(twin-free,n>=2)", "cograph:n<=3k(connected,n>=2)", "cograph:none",
         "cograph:n<=3k<=3d(connected,n>=2)"},
        {"general(prior-work):n<=2^k-1", "general(prior-work):n<=2^k+k-1", "general(prior-work):n<=2^k-1",
         "general(prior-work):n<=D^k+k"},
    };
    return table[static_cast<int>(c)][static_cast<int>(kind)];
}

ParameterBound min_parameter(GraphClass c, BoundKind kind, long long n, std::optional<int> D) {
    check_query(c, kind, D);
    const long double d = D.value_or(0);
    ParameterBound r;
    // Integer answer by search; every formula is increasing in k on the admissible range.
    int k = min_k(c, kind);
    while (true) {
        long long v;
        try {
            v = exact_value(c, kind, k, D.value_or(0));
        } catch (const Error&) {
            break;  // past 64 bits, certainly >= n
        }
        if (v >= n) break;
        ++k;
    }
    r.k = k;
    // Real root by bisection on [0, k].
    long double lo = 0, hi = k;
    if (formula(c, kind, lo, d) >= n) {
        r.real = 0;
        return r;
    }
    for (int it = 0; it < 200; ++it) {
        long double mid = (lo + hi) / 2;
        (formula(c, kind, mid, d) >= n ? hi : lo) = mid;
    }
    r.real = static_cast<double>(hi);
    return r;
}

GraphClass attested_class(const AnyModel& m) {
    if (auto* im = std::get_if<IntervalModel>(&m))
        return is_unit_model(*im) ? GraphClass::UNIT_INTERVAL : GraphClass::INTERVAL;
    if (auto* pm = std::get_if<PermutationModel>(&m))
        return is_bipartite(permutation_graph(*pm)) ? GraphClass::BIPARTITE_PERMUTATION : GraphClass::PERMUTATION;
    if (std::holds_alternative<Cotree>(m)) return GraphClass::COGRAPH;
    return GraphClass::GENERAL;
}

namespace {

bool widens(GraphClass attested, GraphClass as) {
    if (as == attested || as == GraphClass::GENERAL) return true;
    if (attested == GraphClass::UNIT_INTERVAL) return as == GraphClass::INTERVAL;
    if (attested == GraphClass::BIPARTITE_PERMUTATION) return as == GraphClass::PERMUTATION;
    return false;
}

}  // namespace

BoundReport certify(const AnyModel& m, const VertexSet& S, ProblemKind kind, std::optional<GraphClass> as) {
    BoundReport r;
    r.kind = bound_kind_for(kind);
    r.cls = attested_class(m);
    if (as) {
        if (!widens(r.cls, *as))
            throw Error(ErrorCode::ClassMismatch,
                        std::string("model attests ") + class_name(r.cls) + ", not " + class_name(*as));
        r.cls = *as;
    }
    Graph g = compile(m);
    r.n = g.n();
    r.k = static_cast<int>(S.size());
    Verdict v = check(g, S, kind);
    if (!v.ok) throw Error(ErrorCode::VerifierFailed, "VerifierFailed " + v.describe());
    if (r.kind == BoundKind::MD) r.D = diameter(g);
    bool extra_ok = true;
    if (r.cls == GraphClass::COGRAPH) {
        const Cotree& t = std::get<Cotree>(m);
        if (r.n < 2) throw Error(ErrorCode::ClassMismatch, "cograph bounds need n >= 2");
        if (r.kind == BoundKind::IC && !closed_twins(g).empty())
            throw Error(ErrorCode::ClassMismatch, "cograph IC bound needs a twin-free graph");
        if ((r.kind == BoundKind::LD || r.kind == BoundKind::MD) && !is_connected(g))
            throw Error(ErrorCode::ClassMismatch, "cograph LD/MD bounds need a connected graph");
        if (r.kind == BoundKind::MD) {
            // Chained form: n <= 3 dim and dim <= gamma_LD, besides n <= 3k for the given set.
            int dim = dim_cograph(t);
            extra_ok = r.n <= 3 * dim && dim <= gamma_ld_cograph(t);
        }
    }
    r.max_n = max_order({r.cls, r.kind, r.k, r.D});
    r.theorem_label = theorem_label(r.cls, r.kind);
    r.slack = r.max_n - r.n;
    r.satisfied = extra_ok && r.n <= r.max_n;
    return r;
}

BoundReport certify(const ExtremalInstance& inst) {
    if (inst.kind == ProblemKind::SEP_ID || inst.kind == ProblemKind::SEP_LD) {
        const Cotree& t = std::get<Cotree>(inst.model);
        ProblemKind k = inst.kind == ProblemKind::SEP_ID ? ProblemKind::IC : ProblemKind::LD;
        return certify(inst.model, witness_cograph(t, k), k);
    }
    GraphClass c = GraphClass::GENERAL;
    const std::string& f = inst.family;
    if (f.rfind("interval-", 0) == 0) c = GraphClass::INTERVAL;
    else if (f.rfind("unit-", 0) == 0) c = GraphClass::UNIT_INTERVAL;
    else if (f.rfind("perm-", 0) == 0) c = GraphClass::PERMUTATION;
    else if (f.rfind("bipperm-", 0) == 0) c = GraphClass::BIPARTITE_PERMUTATION;
    return certify(inst.model, inst.solution, inst.kind, c);
}

std::string format_bound_row(GraphClass c, BoundKind kind, int k, std::optional<int> D) {
    long long v = max_order({c, kind, k, D});
    return std::string(class_name(c)) + " " + bound_kind_name(kind) + " " + std::to_string(k) + " " +
           (D ? std::to_string(*D) : std::string("-")) + " " + std::to_string(v) + " " + theorem_label(c, kind);
}

}  // namespace idgraph
