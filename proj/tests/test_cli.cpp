#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hans/cli.hpp"
#include "helpers.hpp"

using namespace hanstest;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hans"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = hans::cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

std::string fixture(const std::string& name) { return fixture_path(name); }

struct TempFile {
    explicit TempFile(const std::string& content) : path("cli_tmp_input.hans") {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("detach text output") {
    const CliResult greedy = run({"detach", "--method", "greedy", fixture("order.hans")});
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.out == "{h, ~o}\n");

    const CliResult reduction =
        run({"detach", "--method", "reduction", fixture("two_reductions.hans")});
    CHECK(reduction.exit_code == 0);
    CHECK(reduction.out == "{b, c}\n{~b}\n");

    const CliResult optimization =
        run({"detach", "--method", "optimization", fixture("empty_optimization.hans")});
    CHECK(optimization.exit_code == 0);
    CHECK(optimization.out == "{}\n");

    const CliResult preorder =
        run({"detach", "--method", "greedy-preorder", fixture("tied_ranks.hans")});
    CHECK(preorder.exit_code == 0);
    CHECK(preorder.out == "{b, ~c}\n{c, ~b}\n");
}

TEST_CASE("detach json output") {
    const CliResult greedy =
        run({"detach", "--method", "greedy", "--format", "json", fixture("order.hans")});
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.out == "{\"method\":\"greedy\",\"extensions\":[[\"h\",\"~o\"]]}\n");
}

TEST_CASE("extensions subcommand") {
    const CliResult none = run({"extensions", "--lift", "last", "--semantics", "stable",
                                fixture("no_stable.hans")});
    CHECK(none.exit_code == 0);
    CHECK(none.out == "0 extensions\n");

    const CliResult one = run({"extensions", "--lift", "weakest", "--semantics", "stable",
                               fixture("order.hans")});
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("1 extension") == 0);
    CHECK(one.out.find("{h, ~o}") != std::string::npos);

    const CliResult json =
        run({"extensions", "--lift", "weakest", "--semantics", "stable", "--expand", "--format",
             "json", fixture("revised_order.hans")});
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"outfamily\":[[\"~o\"]]") != std::string::npos);
    CHECK(json.out.find("\"aux\"") != std::string::npos);
}

TEST_CASE("af subcommand") {
    const CliResult dot = run({"af", "--lift", "weakest", fixture("order.hans")});
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);

    const CliResult json =
        run({"af", "--lift", "last", "--format", "json", fixture("order.hans")});
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"defeats\":[[\"A3\",\"A2\"]]") != std::string::npos);

    SUBCASE("expand needs weakest link") {
        const CliResult bad = run({"af", "--lift", "last", "--expand", fixture("order.hans")});
        CHECK(bad.exit_code == 2);
    }
}

TEST_CASE("verify on a file") {
    const CliResult ok = run({"verify", fixture("order.hans")});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("greedy PASS") != std::string::npos);
    CHECK(ok.out.find("reduction PASS") != std::string::npos);
    CHECK(ok.out.find("optimization PASS") != std::string::npos);

    SUBCASE("preorder instances are a precondition error") {
        CHECK(run({"verify", fixture("tied_ranks.hans")}).exit_code == 2);
    }

    SUBCASE("exploratory adds informational lines") {
        const CliResult explored = run({"verify", "--exploratory", fixture("order.hans")});
        CHECK(explored.exit_code == 0);
        CHECK(explored.out.find("exploratory weakest/grounded") != std::string::npos);
        CHECK(explored.out.find("exploratory last/preferred") != std::string::npos);
    }
}

TEST_CASE("verify trial mode") {
    const CliResult trials = run({"verify", "--trials", "25", "--seed", "7"});
    CHECK(trials.exit_code == 0);
    CHECK(trials.out.find("25 trials, 75 checks, 0 failures") != std::string::npos);

    SUBCASE("same seed, same output") {
        CHECK(run({"verify", "--trials", "25", "--seed", "7"}).out == trials.out);
    }
}

TEST_CASE("exit codes") {
    SUBCASE("parse error is 1") {
        const TempFile bad("norm w -> rank 1\n");
        CHECK(run({"detach", "--method", "greedy", bad.path}).exit_code == 1);
    }
    SUBCASE("validation error is 2") {
        const TempFile bad("context w, ~w\n");
        CHECK(run({"detach", "--method", "greedy", bad.path}).exit_code == 2);
    }
    SUBCASE("precondition error is 2") {
        CHECK(run({"detach", "--method", "greedy", fixture("tied_ranks.hans")}).exit_code == 2);
        CHECK(run({"extensions", "--lift", "weakest", "--semantics", "stable",
                   fixture("tied_ranks.hans")})
                  .exit_code == 2);
    }
    SUBCASE("missing file is 2") {
        CHECK(run({"detach", "--method", "greedy", "does_not_exist.hans"}).exit_code == 2);
    }
    SUBCASE("bad usage is 2") {
        CHECK(run({"detach", fixture("order.hans")}).exit_code == 2);
        CHECK(run({"nonsense"}).exit_code == 2);
        CHECK(run({"detach", "--method", "sideways", fixture("order.hans")}).exit_code == 2);
    }
}
