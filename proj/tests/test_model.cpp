#include "doctest.h"

#include "aosrm/error.hpp"
#include "aosrm/model.hpp"
#include "support.hpp"

#include <algorithm>

using namespace aosrm;
using testsupport::parse_corpus;

TEST_CASE("resolve_name resolution order") {
    auto corpus = parse_corpus({
        {"/mem/p/B.java", "package p; class B {}"},
        {"/mem/p/A.java", "package p; class A extends B {}"},
        {"/mem/q/C.java", "package q; import p.B; class C {}"},
        {"/mem/a/Log.java", "package a; class Log {}"},
        {"/mem/b/Log.java", "package b; class Log {}"},
    });
    const SourceUnit& unit_a = corpus[1];
    const SourceUnit& unit_c = corpus[2];

    SUBCASE("same package simple name") {
        Resolution r = resolve_name("B", unit_a, corpus);
        REQUIRE(r.qualified_name.has_value());
        CHECK(*r.qualified_name == "p.B");
    }
    SUBCASE("exact qualified match") {
        Resolution r = resolve_name("p.B", unit_c, corpus);
        REQUIRE(r.qualified_name.has_value());
        CHECK(*r.qualified_name == "p.B");
    }
    SUBCASE("explicit import") {
        Resolution r = resolve_name("B", unit_c, corpus);
        REQUIRE(r.qualified_name.has_value());
        CHECK(*r.qualified_name == "p.B");
    }
    SUBCASE("no corpus match is external") {
        Resolution r = resolve_name("Object", unit_a, corpus);
        CHECK_FALSE(r.qualified_name.has_value());
        CHECK_FALSE(r.ambiguous);
    }
    SUBCASE("two corpus-wide candidates are ambiguous") {
        Resolution r = resolve_name("Log", unit_a, corpus);
        CHECK_FALSE(r.qualified_name.has_value());
        CHECK(r.ambiguous);
    }
    SUBCASE("unique corpus-wide simple name resolves cross-package") {
        Resolution r = resolve_name("C", unit_a, corpus);
        REQUIRE(r.qualified_name.has_value());
        CHECK(*r.qualified_name == "q.C");
    }
}

TEST_CASE("build_graph: plain extension") {
    auto corpus = parse_corpus({
        {"/mem/A.java", "class A {}"},
        {"/mem/B.java", "class B extends A {}"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(result.graph.nodes.size() == 2);
    REQUIRE(result.graph.extends_edges.size() == 1);
    CHECK(result.graph.extends_edges[0] == std::pair<std::string, std::string>{"B", "A"});
    CHECK(result.violations.empty());
}

TEST_CASE("build_graph: extending a concrete aspect is a violation") {
    auto corpus = parse_corpus({
        {"/mem/X.aj", "aspect X { pointcut p() : call(* *.go()); }"},
        {"/mem/Y.aj", "aspect Y extends X { }"},
    });
    BuildResult result = build_graph(corpus);
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == ViolationKind::ExtendsConcreteAspect);
    CHECK(result.violations[0].subject == "Y");
    CHECK(result.graph.extends_edges.empty()); // the illegal edge is dropped
}

TEST_CASE("build_graph: extending an abstract aspect is legal") {
    auto corpus = parse_corpus({
        {"/mem/X.aj", "abstract aspect X { abstract pointcut p(); }"},
        {"/mem/Y.aj", "aspect Y extends X { pointcut p() : call(* *.go()); }"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(result.violations.empty());
    CHECK(result.graph.extends_edges.size() == 1);
}

TEST_CASE("build_graph: class or interface extending an aspect") {
    auto corpus = parse_corpus({
        {"/mem/L.aj", "abstract aspect L { abstract pointcut p(); }"},
        {"/mem/App.java", "class App extends L {}"},
        {"/mem/I.java", "interface I extends L {}"},
    });
    BuildResult result = build_graph(corpus);
    REQUIRE(result.violations.size() == 2);
    CHECK(result.violations[0].kind == ViolationKind::ClassExtendsAspect);
    CHECK(result.violations[0].subject == "App");
    CHECK(result.violations[1].kind == ViolationKind::InterfaceExtendsAspect);
    CHECK(result.graph.extends_edges.empty());
}

TEST_CASE("build_graph: aspects may extend classes and interfaces") {
    auto corpus = parse_corpus({
        {"/mem/Base.java", "class Base { void go() {} }"},
        {"/mem/W.aj", "aspect W extends Base { before() : call(* *.go()) { t(); } }"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(result.violations.empty());
    CHECK(result.graph.extends_edges.size() == 1);
}

TEST_CASE("build_graph: two-node cycle is reported once and pruned") {
    auto corpus = parse_corpus({
        {"/mem/C.java", "class C extends D {}"},
        {"/mem/D.java", "class D extends C {}"},
    });
    BuildResult result = build_graph(corpus);
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == ViolationKind::InheritanceCycle);
    CHECK(result.graph.extends_edges.empty());
    CHECK(dit(result.graph, "C") == 0); // terminates after pruning
    CHECK(dit(result.graph, "D") == 0);
}

TEST_CASE("build_graph: self-extension is a cycle") {
    auto corpus = parse_corpus({{"/mem/S.java", "class S extends S {}"}});
    BuildResult result = build_graph(corpus);
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == ViolationKind::InheritanceCycle);
    CHECK(result.graph.extends_edges.empty());
}

TEST_CASE("build_graph: duplicate qualified names drop the later declaration") {
    auto corpus = parse_corpus({
        {"/mem/1/A.java", "package p; class A { void one() {} }"},
        {"/mem/2/A.java", "package p; class A { void two() {} }"},
    });
    BuildResult result = build_graph(corpus);
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == ViolationKind::DuplicateTypeName);
    CHECK(result.violations[0].subject == "p.A");
    REQUIRE(result.graph.nodes.count("p.A") == 1);
    CHECK(result.graph.find("p.A")->methods[0].name == "one"); // earlier file kept
}

TEST_CASE("build_graph: unresolved supertypes become external refs") {
    auto corpus = parse_corpus({
        {"/mem/A.java", "class A extends ArrayList {}"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(result.graph.extends_edges.empty());
    CHECK(result.graph.external_refs.count("ArrayList") == 1);
    CHECK(dit(result.graph, "A") == 0); // external ancestry is not counted
}

TEST_CASE("build_graph output is independent of unit order") {
    std::vector<std::pair<std::string, std::string>> files = {
        {"/mem/A.java", "class A {}"},
        {"/mem/B.java", "class B extends A {}"},
        {"/mem/C.java", "class C extends B {}"},
        {"/mem/X.aj", "abstract aspect X { abstract pointcut p(); }"},
    };
    auto forward = parse_corpus(files);
    std::reverse(files.begin(), files.end());
    auto backward = parse_corpus(files);

    BuildResult a = build_graph(forward);
    BuildResult b = build_graph(backward);
    CHECK(a.graph.extends_edges == b.graph.extends_edges);
    CHECK(a.graph.implements_edges == b.graph.implements_edges);
    REQUIRE(a.graph.nodes.size() == b.graph.nodes.size());
    CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("dit over chains and aspect hierarchies") {
    auto corpus = parse_corpus({
        {"/mem/A.java", "class A {}"},
        {"/mem/B.java", "class B extends A {}"},
        {"/mem/C.java", "class C extends B {}"},
        {"/mem/L0.aj", "abstract aspect L0 { abstract pointcut p(); }"},
        {"/mem/L1.aj", "abstract aspect L1 extends L0 { abstract pointcut q(); }"},
        {"/mem/L2.aj", "aspect L2 extends L1 { pointcut p() : call(* *.a()); "
                       "pointcut q() : call(* *.b()); }"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(dit(result.graph, "A") == 0);
    CHECK(dit(result.graph, "B") == 1);
    CHECK(dit(result.graph, "C") == 2);
    CHECK(dit(result.graph, "L2") == 2);
    CHECK_THROWS_AS(dit(result.graph, "Nope"), Error);
}

TEST_CASE("noc counts immediate children only") {
    auto corpus = parse_corpus({
        {"/mem/A.java", "class A {}"},
        {"/mem/B.java", "class B extends A {}"},
        {"/mem/C.java", "class C extends A {}"},
        {"/mem/D.java", "class D extends B {}"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(noc(result.graph, "A") == 2);
    CHECK(noc(result.graph, "B") == 1);
    CHECK(noc(result.graph, "D") == 0);
    CHECK_THROWS_AS(noc(result.graph, "Nope"), Error);

    SUBCASE("sum of noc equals the extends edge count") {
        int total = 0;
        for (const auto& [name, decl] : result.graph.nodes) {
            (void)decl;
            total += noc(result.graph, name);
        }
        CHECK(total == static_cast<int>(result.graph.extends_edges.size()));
    }
}

TEST_CASE("abstract aspect fan-out matches hand count") {
    auto corpus = parse_corpus({
        {"/mem/Base.aj", "abstract aspect Base { abstract pointcut p(); }"},
        {"/mem/C1.aj", "aspect C1 extends Base { pointcut p() : call(* *.a()); }"},
        {"/mem/C2.aj", "aspect C2 extends Base { pointcut p() : call(* *.b()); }"},
        {"/mem/A1.aj", "abstract aspect A1 extends Base { }"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(noc(result.graph, "Base") == 3);
}

TEST_CASE("single-extends child sits exactly one level below an in-corpus parent") {
    auto corpus = parse_corpus({
        {"/mem/A.java", "class A {}"},
        {"/mem/B.java", "class B extends A {}"},
        {"/mem/C.java", "class C extends B {}"},
    });
    BuildResult result = build_graph(corpus);
    for (const auto& [child, parent] : result.graph.extends_edges) {
        CHECK(dit(result.graph, child) == dit(result.graph, parent) + 1);
    }
}

TEST_CASE("implements edges never contribute to dit or noc") {
    auto corpus = parse_corpus({
        {"/mem/I.java", "interface I {}"},
        {"/mem/A.java", "class A implements I {}"},
    });
    BuildResult result = build_graph(corpus);
    CHECK(result.graph.implements_edges.size() == 1);
    CHECK(dit(result.graph, "A") == 0);
    CHECK(noc(result.graph, "I") == 0);
}

TEST_CASE("aspect abstractness rule") {
    auto corpus = parse_corpus({
        {"/mem/A.aj", "aspect A {}"},
        {"/mem/B.aj", "abstract aspect B { abstract pointcut p(); }"},
        {"/mem/C.aj", "aspect C { abstract pointcut p(); }"}, // undeclared but abstract
        {"/mem/D.aj", "abstract aspect D { }"},               // modifier alone suffices
    });
    CHECK_FALSE(aspect_is_abstract(corpus[0].types[0]));
    CHECK(aspect_is_abstract(corpus[1].types[0]));
    CHECK(aspect_is_abstract(corpus[2].types[0]));
    CHECK(aspect_is_abstract(corpus[3].types[0]));
}
