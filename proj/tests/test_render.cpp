#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hans/render.hpp"
#include "hans/semantics.hpp"
#include "helpers.hpp"

using namespace hanstest;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("detachment JSON is schema-exact") {
    CHECK(render_json("greedy", {greedy(make_order())}) ==
          R"({"method":"greedy","extensions":[["h","~o"]]})");
    CHECK(render_json("optimization", {optimization(make_empty_optimization())}) ==
          R"({"method":"optimization","extensions":[[]]})");
    CHECK(render_json("reduction", reduction(make_two_reductions())) ==
          R"({"method":"reduction","extensions":[["b","c"],["~b"]]})");
    CHECK(render_json("reduction", reduction(make_no_stable())) ==
          R"({"method":"reduction","extensions":[]})");
}

TEST_CASE("graph JSON lists arguments, defeats, and added defeats") {
    const DefeatGraph weakest = build_af(make_order(), Lifting::WeakestLink);
    CHECK(render_json(weakest) ==
          R"({"arguments":[)"
          R"({"id":"A0","kind":"context","path":["w"]},)"
          R"({"id":"A1","kind":"ordinary","path":["w","h"]},)"
          R"({"id":"A2","kind":"ordinary","path":["w","~o"]},)"
          R"({"id":"A3","kind":"ordinary","path":["w","h","o"]}],)"
          R"("defeats":[["A2","A3"]],"auxiliary":[]})");

    SUBCASE("expansion shows up in auxiliary") {
        const DefeatGraph expanded =
            expand_af(build_af(make_empty_optimization(), Lifting::WeakestLink));
        const std::string text = render_json(expanded);
        // Added edges are listed among the defeats and annotated once more.
        CHECK(text.find(R"("auxiliary":[["aux","A1"],["aux","A2"],["aux","A3"]])") !=
              std::string::npos);
        CHECK(count_occurrences(text, R"(["aux",)") == 6);
        CHECK(text.find(R"({"id":"aux","kind":"auxiliary","path":[]})") != std::string::npos);
    }
}

TEST_CASE("extension JSON carries ids and conclusions") {
    const DefeatGraph graph = build_af(make_order(), Lifting::LastLink);
    const std::string text = render_json(graph, Semantics::Stable,
                                         extensions(graph, Semantics::Stable));
    CHECK(text ==
          R"({"semantics":"stable","lifting":"last",)"
          R"("extensions":[["A0","A1","A3"]],"outfamily":[["h","o"]]})");
}

TEST_CASE("rendering is deterministic") {
    const DefeatGraph graph = expand_af(build_af(make_revised_order(), Lifting::WeakestLink));
    CHECK(render_json(graph) == render_json(graph));
    CHECK(render_dot(graph) == render_dot(graph));
    CHECK(render_dot(make_order()) == render_dot(make_order()));
}

TEST_CASE("system DOT shape") {
    const std::string dot = render_dot(make_order());
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_occurrences(dot, "style=dashed") == 3);  // one per norm
    CHECK(count_occurrences(dot, "label=\"1\"") == 1);
    CHECK(count_occurrences(dot, "label=\"2\"") == 1);
    CHECK(count_occurrences(dot, "label=\"3\"") == 1);
    CHECK(dot.find("cluster_context") != std::string::npos);
    CHECK(dot.find("\"w\" [shape=box]") != std::string::npos);

    SUBCASE("empty system still emits the cluster") {
        const std::string empty = render_dot(System::make({}, {}));
        CHECK(empty.rfind("digraph", 0) == 0);
        CHECK(empty.find("cluster_context") != std::string::npos);
        CHECK(count_occurrences(empty, "->") == 0);
    }
}

TEST_CASE("framework DOT shape") {
    const DefeatGraph expanded =
        expand_af(build_af(make_empty_optimization(), Lifting::WeakestLink));
    const std::string dot = render_dot(expanded);
    CHECK(count_occurrences(dot, "[style=dashed]") == 3);  // the three added defeats
    CHECK(count_occurrences(dot, "\"aux\" ->") == 3);
    CHECK(dot.find("\"A0\" [label=\"A0: a\", shape=box]") != std::string::npos);

    const DefeatGraph base = build_af(make_order(), Lifting::LastLink);
    const std::string base_dot = render_dot(base);
    CHECK(count_occurrences(base_dot, "->") == 1);
    CHECK(count_occurrences(base_dot, "[style=dashed]") == 0);
}
