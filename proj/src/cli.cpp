#include "hans/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hans/errors.hpp"
#include "hans/parser.hpp"
#include "hans/render.hpp"
#include "hans/semantics.hpp"
#include "hans/verify.hpp"

namespace hans {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerifyFailure = 3;

HansDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    HansDocument doc = parse_hans(buffer.str(), path);
    for (const std::string& warning : doc.warnings)
        std::cerr << path << ": warning: " << warning << "\n";
    return doc;
}

Lifting parse_lifting(const std::string& name) {
    if (name == "weakest")
        return Lifting::WeakestLink;
    if (name == "last")
        return Lifting::LastLink;
    throw ValidationError("unknown lifting '" + name + "'");
}

Semantics parse_semantics(const std::string& name) {
    if (name == "stable")
        return Semantics::Stable;
    if (name == "grounded")
        return Semantics::Grounded;
    if (name == "preferred")
        return Semantics::Preferred;
    if (name == "complete")
        return Semantics::Complete;
    throw ValidationError("unknown semantics '" + name + "'");
}

int run_detach(const std::string& path, const std::string& method, const std::string& format) {
    const System system = load(path).system;
    std::set<ConclusionSet> family;
    if (method == "greedy") {
        family = {greedy(system)};
    } else if (method == "greedy-preorder") {
        family = greedy_preorder(system);
    } else if (method == "reduction") {
        family = reduction(system);
    } else if (method == "optimization") {
        family = {optimization(system)};
    } else {
        throw ValidationError("unknown method '" + method + "'");
    }

    if (format == "json") {
        std::cout << render_json(method, family) << "\n";
    } else {
        for (const ConclusionSet& cs : family)
            std::cout << cs.to_string() << "\n";
    }
    return kExitOk;
}

int run_af(const std::string& path, const std::string& lift, bool expand,
           const std::string& format) {
    const System system = load(path).system;
    DefeatGraph graph = build_af(system, parse_lifting(lift));
    if (expand)
        graph = expand_af(graph);
    std::cout << (format == "json" ? render_json(graph) : render_dot(graph));
    if (format == "json")
        std::cout << "\n";
    return kExitOk;
}

int run_extensions(const std::string& path, const std::string& lift,
                   const std::string& semantics_name, bool expand, const std::string& format) {
    const System system = load(path).system;
    DefeatGraph graph = build_af(system, parse_lifting(lift));
    if (expand)
        graph = expand_af(graph);
    const Semantics semantics = parse_semantics(semantics_name);
    const std::vector<ArgumentIndexSet> family = extensions(graph, semantics);

    if (format == "json") {
        std::cout << render_json(graph, semantics, family) << "\n";
        return kExitOk;
    }
    std::cout << family.size() << (family.size() == 1 ? " extension\n" : " extensions\n");
    for (const ArgumentIndexSet& e : family) {
        std::cout << " ";
        for (int index : e)
            std::cout << " " << argument_label(graph, index);
        LiteralSet concl;
        for (int index : e)
            if (graph.argument(index).is_ordinary())
                concl.insert(*graph.argument(index).conclusion());
        std::cout << "  " << ConclusionSet(concl).to_string() << "\n";
    }
    return kExitOk;
}

void print_exploratory(const System& system) {
    for (Lifting lifting : {Lifting::WeakestLink, Lifting::LastLink}) {
        const DefeatGraph graph = build_af(system, lifting);
        for (Semantics sem :
             {Semantics::Grounded, Semantics::Complete, Semantics::Preferred}) {
            std::cout << "exploratory " << to_string(lifting) << "/" << to_string(sem) << " "
                      << to_string(outfamily(graph, sem)) << "\n";
        }
    }
}

int run_verify_file(const std::string& path, bool exploratory) {
    const System system = load(path).system;
    bool all_pass = true;
    for (const VerifyReport& report :
         {verify_greedy(system), verify_reduction(system), verify_optimization(system)}) {
        std::cout << report.to_string() << "\n";
        all_pass = all_pass && report.pass;
    }
    if (!all_pass)
        for (const std::string& note : correspondence_caveats(system))
            std::cout << "note: " << note << "\n";
    if (exploratory)
        print_exploratory(system);
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_verify_trials(int trials, std::uint64_t seed, int atoms, int norms, bool exploratory) {
    int failures = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t sub_seed = trial_seed(seed, trial);
        const System system = random_trial(atoms, norms, sub_seed);
        for (VerifyReport report :
             {verify_greedy(system), verify_reduction(system), verify_optimization(system)}) {
            report.seed = sub_seed;
            if (!report.pass) {
                ++failures;
                std::cout << "trial " << trial << " (seed " << sub_seed << ")\n"
                          << report.instance << report.to_string() << "\n";
            }
        }
        if (exploratory && trial == 0)
            print_exploratory(system);
    }
    std::cout << trials << " trials, " << 3 * trials << " checks, " << failures << " failures"
              << " (seed " << seed << ")\n";
    return failures == 0 ? kExitOk : kExitVerifyFailure;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"Detachment and argumentation toolkit for ranked normative systems"};
    app.require_subcommand(1);

    auto* detach = app.add_subcommand("detach", "Run a detachment procedure on a .hans file");
    std::string method;
    std::string detach_format = "text";
    std::string detach_file;
    detach->add_option("--method", method, "greedy|greedy-preorder|reduction|optimization")
        ->required();
    detach->add_option("--format", detach_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    detach->add_option("file", detach_file, "input .hans file")->required();

    auto* af = app.add_subcommand("af", "Build the defeat graph of a .hans file");
    std::string af_lift;
    bool af_expand = false;
    std::string af_format = "dot";
    std::string af_file;
    af->add_option("--lift", af_lift, "weakest|last")->required();
    af->add_flag("--expand", af_expand, "add the auxiliary argument and defeats");
    af->add_option("--format", af_format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    af->add_option("file", af_file, "input .hans file")->required();

    auto* ext = app.add_subcommand("extensions", "Compute argument extensions");
    std::string ext_lift;
    std::string ext_semantics;
    bool ext_expand = false;
    std::string ext_format = "text";
    std::string ext_file;
    ext->add_option("--lift", ext_lift, "weakest|last")->required();
    ext->add_option("--semantics", ext_semantics, "stable|grounded|preferred|complete")
        ->required();
    ext->add_flag("--expand", ext_expand, "add the auxiliary argument and defeats");
    ext->add_option("--format", ext_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    ext->add_option("file", ext_file, "input .hans file")->required();

    auto* verify = app.add_subcommand(
        "verify", "Check the detachment/argumentation correspondences on one file or on "
                  "generated instances");
    int trials = 200;
    std::uint64_t seed = 0;
    int atoms = 5;
    int norms = 7;
    bool exploratory = false;
    std::string verify_file;
    verify->add_option("--trials", trials, "number of generated instances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "base seed for the generator");
    verify->add_option("--atoms", atoms, "maximum atoms per instance")->check(CLI::Range(0, 8));
    verify->add_option("--norms", norms, "maximum norms per instance")->check(CLI::Range(0, 12));
    verify->add_flag("--exploratory", exploratory,
                     "also print non-stable conclusion families (informational)");
    verify->add_option("file", verify_file, "check this instance instead of generating");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    if (detach->parsed())
        return run_detach(detach_file, method, detach_format);
    if (af->parsed())
        return run_af(af_file, af_lift, af_expand, af_format);
    if (ext->parsed())
        return run_extensions(ext_file, ext_lift, ext_semantics, ext_expand, ext_format);
    if (verify->parsed())
        return verify_file.empty() ? run_verify_trials(trials, seed, atoms, norms, exploratory)
                                   : run_verify_file(verify_file, exploratory);
    return kExitValidation;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        if (e.line > 0)
            std::cerr << "validation error at " << e.line << ":" << e.col << ": " << e.what()
                      << "\n";
        else
            std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace hans
