#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "idgraph/bounds.hpp"
#include "idgraph/cograph.hpp"
#include "idgraph/error.hpp"
#include "idgraph/exact.hpp"
#include "idgraph/generators.hpp"
#include "idgraph/io.hpp"
#include "idgraph/verify.hpp"

using namespace idgraph;

namespace {

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse: return 3;
        case ErrorCode::CapExceeded: return 4;
        default: return 2;
    }
}

const char* flag(bool b) { return b ? "true" : "false"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + path);
    out << text;
}

Cotree read_cotree_file(const std::string& path) {
    AnyModel m = read_model_file(path);
    if (auto* t = std::get_if<Cotree>(&m)) return *t;
    throw Error(ErrorCode::Parse, path + " does not hold a cotree");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"identification problems on graphs"};
    app.require_subcommand(1, 1);
    long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized commands");

    std::string problem, input, set_text, cotree_file, family, out_prefix, cls;
    int cap = 30, k = 0, n = 0, variant = 0;
    std::optional<int> D;
    std::optional<long long> min_n;
    bool want_witness = false, validate_old = false;

    auto* solve = app.add_subcommand("solve", "exact minimum set");
    solve->add_option("--problem", problem)->required();
    solve->add_option("--input", input)->required();
    solve->add_option("--cap", cap);

    auto* verify = app.add_subcommand("verify", "check a set");
    verify->add_option("--problem", problem)->required();
    verify->add_option("--input", input)->required();
    verify->add_option("--set", set_text)->required();

    auto* cograph = app.add_subcommand("cograph", "linear-time cotree algorithms");
    cograph->add_option("--problem", problem)->required();
    cograph->add_option("--cotree", cotree_file)->required();
    cograph->add_flag("--witness", want_witness);
    cograph->add_flag("--validate-old", validate_old, "run the exhaustive OLD check first");

    auto* generate_cmd = app.add_subcommand("generate", "extremal family instance");
    generate_cmd->add_option("--family", family)->required();
    generate_cmd->add_option("--k", k);
    generate_cmd->add_option("--d", D);
    generate_cmd->add_option("--n", n);
    generate_cmd->add_option("--variant,--k-variant", variant);
    generate_cmd->add_option("--out", out_prefix)->required();

    auto* certify_cmd = app.add_subcommand("certify", "check a set against the class bound");
    certify_cmd->add_option("--input", input)->required();
    certify_cmd->add_option("--set", set_text)->required();
    certify_cmd->add_option("--problem", problem)->required();
    certify_cmd->add_option("--class", cls, "wider class than the one the model attests");

    auto* bounds = app.add_subcommand("bounds", "closed-form bound row");
    bounds->add_option("--class", cls)->required();
    bounds->add_option("--problem", problem)->required();
    bounds->add_option("--k", k);
    bounds->add_option("--d", D);
    bounds->add_option("--min-n", min_n, "print the smallest admissible k for this order instead");

    auto* compile_cmd = app.add_subcommand("compile-model", "model file to plain graph");
    compile_cmd->add_option("--input", input)->required();
    compile_cmd->add_option("--out", out_prefix, "output file (stdout when absent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            ExactOptions opt;
            opt.cap = cap;
            Graph g = compile(read_model_file(input));
            SolveResult r = min_set(g, parse_kind(problem), opt);
            std::cout << "k=" << r.k << " witness=" << format_vertex_list(r.witness) << "\n";
        } else if (*verify) {
            Graph g = compile(read_model_file(input));
            Verdict v = check(g, parse_vertex_list(set_text), parse_kind(problem));
            if (!v.ok) {
                std::cout << "VerifierFailed " << v.describe() << "\n";
                return 2;
            }
            std::cout << "ok\n";
        } else if (*cograph) {
            Cotree t = read_cotree_file(cotree_file);
            ProblemKind kind = parse_kind(problem);
            CographSummary s;
            int value = 0;
            if (kind == ProblemKind::IC) {
                s = sep_id_dp(t);
                value = gamma_id_cograph(t);
            } else if (kind == ProblemKind::LD) {
                s = sep_ld_dp(t);
                value = gamma_ld_cograph(t);
            } else if (kind == ProblemKind::RS) {
                s = sep_ld_dp(t);
                value = dim_cograph(t);
            } else if (kind == ProblemKind::OLD) {
                if (validate_old) validate_old_dp();
                s = sep_old_dp(t);
                value = gamma_old_cograph(t);
            } else {
                throw Error(ErrorCode::UnsupportedCombination, "cograph takes ic, ld, md or old");
            }
            std::cout << "k=" << value << " emp=" << flag(s.emp) << " univ=" << flag(s.univ) << " sep=" << s.k;
            if (want_witness) std::cout << " witness=" << format_vertex_list(witness_cograph(t, kind));
            std::cout << "\n";
        } else if (*generate_cmd) {
            FamilyParams p;
            p.k = k;
            p.D = D;
            p.n = n;
            p.variant = variant;
            ExtremalInstance inst = generate(family, p);
            std::ostringstream model;
            write_model(model, inst.model);
            write_file(out_prefix + ".model", model.str());
            write_file(out_prefix + ".manifest", inst.manifest_line() + "\n");
            std::cout << inst.manifest_line() << "\n";
        } else if (*certify_cmd) {
            std::optional<GraphClass> as;
            if (!cls.empty()) as = parse_class(cls);
            BoundReport r = certify(read_model_file(input), parse_vertex_list(set_text), parse_kind(problem), as);
            std::cout << (r.satisfied ? "satisfied" : "violated") << " slack=" << r.slack << " n=" << r.n
                      << " k=" << r.k << " max_n=" << r.max_n << " " << r.theorem_label << "\n";
            if (!r.satisfied) return 2;
        } else if (*bounds) {
            GraphClass c = parse_class(cls);
            BoundKind bk = parse_bound_kind(problem == "rs" ? "md" : problem);
            if (min_n) {
                ParameterBound pb = min_parameter(c, bk, *min_n, D);
                std::cout << class_name(c) << " " << bound_kind_name(bk) << " n=" << *min_n << " k>=" << pb.k
                          << " real=" << pb.real << "\n";
            } else {
                std::cout << format_bound_row(c, bk, k, D) << "\n";
            }
        } else if (*compile_cmd) {
            Graph g = compile(read_model_file(input));
            std::ostringstream os;
            write_graph(os, g);
            if (out_prefix.empty())
                std::cout << os.str();
            else
                write_file(out_prefix, os.str());
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::VerifierFailed)
            std::cout << e.what() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return 0;
}
