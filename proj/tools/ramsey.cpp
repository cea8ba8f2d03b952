// Command-line front end: construct blow-up witness colorings, verify
// colorings against monochromatic targets, search small Ramsey numbers
// exactly, evaluate the closed-form values, and export DOT drawings.
//
// Exit codes: 0 success/AVOIDS/Exact; 1 CONTAINS / lower-bound-only /
// out-of-proven-range; 2 ingredient check failed / search budget exhausted;
// 3 no built-in outer ingredient; 4 malformed input; 5 target/class count
// mismatch; 6 detector budget exhausted.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/construct.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/search.hpp"

namespace {

using namespace ramsey;

constexpr int kExitContains = 1;
constexpr int kExitIngredient = 2;
constexpr int kExitNoOuter = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitDetectBudget = 6;

struct ConstructArgs {
    int cycle = 0;
    std::vector<int> cliques;
    std::string inner_file, outer_file, targets_text, out_file, kappa_file;
};

struct VerifyArgs {
    std::string file, targets_text;
};

struct SearchArgs {
    std::string targets_text, out_file;
    int max_p = 0;
    int threads = 1;
    std::uint64_t budget_nodes = std::numeric_limits<std::uint64_t>::max();
};

struct PredictArgs {
    int cycle = 0;
    std::vector<int> cliques;
    std::string kappa_file;
};

struct DotArgs {
    std::string file, out_file;
};

KappaTable make_table(const std::string& extra_file) {
    KappaTable t = KappaTable::builtin();
    if (!extra_file.empty()) t.merge_file(extra_file);
    return t;
}

int run_construct(const ConstructArgs& a) {
    const bool builtin_mode = a.cycle > 0;
    Coloring inner, outer;
    std::vector<Target> targets;

    if (builtin_mode) {
        targets.push_back(Target::cycle(a.cycle));
        for (int k : a.cliques) targets.push_back(Target::clique(k));
        KappaTable table = make_table(a.kappa_file);
        auto kappa = known_kappa(a.cliques, table);
        if (!kappa) {
            std::cerr << "kappa = R(K_*) unknown for the given cliques; supply --outer FILE "
                         "or extend the kappa table\n";
            return kExitNoOuter;
        }
        std::vector<int> sorted = a.cliques;
        std::sort(sorted.begin(), sorted.end());
        if (*kappa == 3 && sorted.size() == 1) {
            outer = Coloring(2, 1); // a lone edge has no triangle
        } else if (*kappa == 6 && sorted == std::vector<int>{3, 3}) {
            outer = pentagon_coloring();
        } else {
            std::cerr << "no built-in outer ingredient for kappa = " << *kappa
                      << "; supply --outer FILE\n";
            return kExitNoOuter;
        }
        inner = Coloring(a.cycle - 1, 1); // K_{N-1} is too small to hold C_N
    } else {
        if (a.outer_file.empty() || a.targets_text.empty()) {
            std::cerr << "construct: custom mode needs --inner, --outer and --targets\n";
            return kExitMalformed;
        }
        inner = load_coloring(a.inner_file);
        outer = load_coloring(a.outer_file);
        TargetSpec parsed = parse_target_spec(a.targets_text);
        targets = parsed.targets;
        if (static_cast<int>(targets.size()) != inner.class_count() + outer.class_count()) {
            std::cerr << "targets: " << targets.size() << " entries for "
                      << inner.class_count() << "+" << outer.class_count()
                      << " ingredient classes\n";
            return kExitMismatch;
        }
        for (int i = inner.class_count(); i < static_cast<int>(targets.size()); ++i) {
            if (targets[i].kind != Target::Kind::Clique) {
                std::cerr << "outer-class target " << targets[i].name() << " is not a clique\n";
                return kExitMismatch;
            }
        }
    }

    TargetSpec spec(targets);
    Coloring witness;
    try {
        witness = lower_bound_witness(inner, outer, spec);
    } catch (const IngredientError& e) {
        std::cerr << "ingredient check failed: " << e.what() << '\n'
                  << format_witness(e.witness);
        return kExitIngredient;
    }
    save_coloring(a.out_file, witness);
    std::cout << "p = " << witness.vertex_count() << ", classes = " << witness.class_count()
              << '\n'
              << "bound: R(" << spec.name() << ") >= " << witness.vertex_count() + 1 << '\n'
              << "wrote: " << a.out_file << '\n';
    return 0;
}

int run_verify(const VerifyArgs& a) {
    Coloring c = load_coloring(a.file);
    TargetSpec spec = parse_target_spec(a.targets_text);
    if (spec.size() != c.class_count()) {
        std::cerr << "targets: " << spec.size() << " entries for " << c.class_count()
                  << " classes\n";
        return kExitMismatch;
    }
    auto w = verify_coloring(c, spec);
    if (!w) {
        std::cout << "AVOIDS\n";
        return 0;
    }
    std::cout << "CONTAINS " << spec[w->class_index].name() << '\n' << format_witness(*w);
    return kExitContains;
}

int run_search(const SearchArgs& a) {
    TargetSpec spec = parse_target_spec(a.targets_text);
    SearchOptions opt;
    opt.threads = std::max(1, a.threads);
    opt.budget.max_nodes = a.budget_nodes;
    const auto t0 = std::chrono::steady_clock::now();
    SearchOutcome outcome = search_ramsey(spec, a.max_p, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << format_outcome(outcome, spec);
    std::cerr << "wall time: " << secs << " s\n";
    if (!a.out_file.empty() && outcome.witness) save_coloring(a.out_file, *outcome.witness);
    switch (outcome.kind) {
    case SearchOutcome::Kind::Exact: return 0;
    case SearchOutcome::Kind::LowerBoundOnly: return 1;
    case SearchOutcome::Kind::Exhausted: return 2;
    }
    return 2;
}

int run_predict(const PredictArgs& a) {
    KappaTable table = make_table(a.kappa_file);
    Prediction pred = predicted_value(a.cycle, a.cliques, table);
    switch (pred.status) {
    case Prediction::Status::Value:
        std::cout << pred.value << " ("
                  << (pred.rule == Prediction::Rule::Cor3 ? "Cor3" : "Cor4") << ")\n";
        return 0;
    case Prediction::Status::UnknownKappa:
        std::cout << "out of proven range (" << pred.note << ")\n";
        return 1;
    case Prediction::Status::OutOfRange:
        std::cout << "out of proven range (" << pred.note << ")\n";
        return 1;
    }
    return 1;
}

int run_export_dot(const DotArgs& a) {
    Coloring c = load_coloring(a.file);
    std::ofstream out(a.out_file);
    if (!out) throw FormatError("cannot write DOT file: " + a.out_file);
    write_dot(out, c);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey-critical edge colorings: construct, verify, search, predict, export"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved; no effect today (all commands are deterministic)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand(
        "construct", "build a blow-up witness coloring and verify it avoids its targets");
    auto* opt_cycle = construct->add_option("--cycle", ca.cycle, "cycle length N (built-in mode)");
    construct->add_option("--cliques", ca.cliques, "clique sizes, comma separated")
        ->delimiter(',');
    auto* opt_inner = construct->add_option("--inner", ca.inner_file, "inner ingredient coloring file");
    construct->add_option("--outer", ca.outer_file, "outer ingredient coloring file");
    construct->add_option("--targets", ca.targets_text, "target spec (custom mode)");
    construct->add_option("-o,--output", ca.out_file, "output coloring file")->required();
    construct->add_option("--kappa-table", ca.kappa_file, "extra kappa table file");
    opt_cycle->excludes(opt_inner);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a coloring against per-class targets");
    verify->add_option("file", va.file, "coloring file")->required();
    verify->add_option("--targets", va.targets_text, "target spec, e.g. C22,K3,K3")->required();

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exact Ramsey search by exhaustive coloring");
    search->add_option("--targets", sa.targets_text, "target spec")->required();
    search->add_option("--max", sa.max_p, "largest vertex count to try")->required();
    search->add_option("--threads", sa.threads, "worker threads (default 1)");
    search->add_option("--budget-nodes", sa.budget_nodes, "node-expansion budget");
    search->add_option("-o,--output", sa.out_file, "write best witness coloring here");

    PredictArgs pa;
    auto* predict = app.add_subcommand("predict", "closed-form value of R(C_n, K_a, ...)");
    predict->add_option("--cycle", pa.cycle, "cycle length n")->required();
    predict->add_option("--cliques", pa.cliques, "clique sizes, comma separated")
        ->required()
        ->delimiter(',');
    predict->add_option("--kappa-table", pa.kappa_file, "extra kappa table file");

    DotArgs da;
    auto* dot = app.add_subcommand("export-dot", "write a coloring as Graphviz DOT");
    dot->add_option("file", da.file, "coloring file")->required();
    dot->add_option("-o,--output", da.out_file, "output DOT file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            if (ca.cycle == 0 && ca.inner_file.empty()) {
                std::cerr << "construct: need either --cycle/--cliques or --inner/--outer/--targets\n";
                return kExitMalformed;
            }
            return run_construct(ca);
        }
        if (verify->parsed()) return run_verify(va);
        if (search->parsed()) return run_search(sa);
        if (predict->parsed()) return run_predict(pa);
        if (dot->parsed()) return run_export_dot(da);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDetectBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
