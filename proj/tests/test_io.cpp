// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <cstdio>

#include "gammaq/io.hpp"
#include "gammaq/silting.hpp"

using namespace gammaq;

TEST_CASE("built-in quiver names") {
    CHECK(parse_quiver("A2").arrows().size() == 1);
    CHECK(parse_quiver("A5").arrows().size() == 4);
    CHECK(parse_quiver("D4").arrows().size() == 3);
    CHECK(parse_quiver("E6").vertices().size() == 6);
    CHECK(parse_quiver("Kronecker2").arrows().size() == 2);
    CHECK(parse_quiver("Kronecker(3)").arrows().size() == 3);
    // the degenerate one-vertex quiver is legal: no arrows at all
    CHECK(parse_quiver("A1").vertices() == std::vector<int>{1});
    CHECK(parse_quiver("A1").arrows().empty());
    CHECK_THROWS_AS(parse_quiver("B5"), ConfigError);
    CHECK_THROWS_AS(parse_quiver(""), ConfigError);
}

TEST_CASE("arrow-list quiver syntax") {
    Quiver q = parse_quiver("1->2, 2->3");
    CHECK(q.vertices() == std::vector<int>{1, 2, 3});
    REQUIRE(q.arrows().size() == 2);
    CHECK(q.arrows()[0].from == 1);
    CHECK(q.arrows()[0].to == 2);
    CHECK(q.arrows()[0].id == "a1_2");

    // chains expand segment by segment
    Quiver chain = parse_quiver("1->3->2");
    CHECK(chain.arrows().size() == 2);
    CHECK(chain.arrows()[1].from == 3);
    CHECK(chain.arrows()[1].to == 2);

    // oriented cycles are rejected up front
    CHECK_THROWS_AS(parse_quiver("1->2->3->1"), ConfigError);

    // parallel arrows get distinct identifiers
    Quiver par = parse_quiver("1->2, 1->2");
    REQUIRE(par.arrows().size() == 2);
    CHECK(par.arrows()[0].id != par.arrows()[1].id);

    CHECK_THROWS_AS(parse_quiver("1->1"), ConfigError);            // loop
    CHECK_THROWS_AS(parse_quiver("1->"), ConfigError);             // dangling
    CHECK_THROWS_AS(parse_quiver("1->2,, 2->3"), ConfigError);     // empty part
    // syntax errors carry the offending position
    try {
        parse_quiver("1->x");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("quiver JSON round trip, inline and from file") {
    Quiver d4 = parse_quiver("D4");
    ordered_json j = quiver_to_json(d4);
    Quiver back = quiver_from_json(j);
    CHECK(back.vertices() == d4.vertices());
    CHECK(back.arrows().size() == d4.arrows().size());
    for (std::size_t k = 0; k < d4.arrows().size(); ++k) {
        CHECK(back.arrows()[k].from == d4.arrows()[k].from);
        CHECK(back.arrows()[k].to == d4.arrows()[k].to);
        CHECK(back.arrows()[k].id == d4.arrows()[k].id);
    }

    // the same JSON inline and through a file
    Quiver inl = parse_quiver(j.dump());
    CHECK(inl.vertices() == d4.vertices());
    std::string path = "/tmp/gammaq_test_quiver.json";
    write_text_file(path, j.dump());
    Quiver from_file = parse_quiver(path);
    CHECK(from_file.arrows().size() == d4.arrows().size());
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_quiver("/tmp/gammaq_no_such_file.json"), ConfigError);
}

TEST_CASE("degree windows and configuration invariants") {
    CHECK(parse_degree_window("-6:6") == std::pair<int, int>{-6, 6});
    CHECK(parse_degree_window("0:3") == std::pair<int, int>{0, 3});
    CHECK_THROWS_AS(parse_degree_window("6"), ConfigError);
    CHECK_THROWS_AS(parse_degree_window("5:1"), ConfigError);
    CHECK_THROWS_AS(parse_degree_window("a:b"), ConfigError);

    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.field() == Field::rationals());
    CHECK(cfg.quiver().vertices().size() == 2);
    CHECK(cfg.twist_options().weight_bound == cfg.weight_bound);

    RunConfig narrow = cfg;
    narrow.weight_bound = 2;
    CHECK_THROWS_AS(narrow.validate(), ConfigError);
    RunConfig window = cfg;
    window.degree_max = 1;
    CHECK_THROWS_AS(window.validate(), ConfigError);
    RunConfig jobs = cfg;
    jobs.jobs = 0;
    CHECK_THROWS_AS(jobs.validate(), ConfigError);
    RunConfig field = cfg;
    field.field_text = "Fp:6";
    CHECK_THROWS_AS(field.validate(), ConfigError);

    ordered_json desc = cfg.describe();
    CHECK(desc["quiver"] == "A2");
    CHECK(desc["version"] == std::string(kVersion));
}

TEST_CASE("twisted complexes survive the JSON round trip") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    ordered_json j = complex_to_json(ps);
    TwistedComplex back = complex_from_json(dq, Q, j);
    CHECK_NOTHROW(back.validate());
    REQUIRE(back.size() == ps.size());
    for (int k = 0; k < ps.size(); ++k) CHECK(back.generator(k) == ps.generator(k));
    for (const auto& [rc, v] : ps.delta_entries())
        CHECK(back.delta(rc.first, rc.second) == v);
    // serialisation is canonical
    CHECK(complex_to_json(back).dump() == j.dump());

    ordered_json broken = j;
    broken["generators"][0]["vertex"] = 7;
    CHECK_THROWS_AS(complex_from_json(dq, Q, broken), ConfigError);
}

TEST_CASE("g-vectors of twisted complexes") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    CHECK(g_vector(gamma_complex(dq, Q)) == std::vector<long>{1, 1});
    CHECK(g_vector(gamma_complex(dq, Q).shifted(1)) == std::vector<long>{-1, -1});
    // the spherical resolution: two even copies over 1, one odd over 2
    CHECK(g_vector(resolution_of_simple(dq, Q, 1)) == std::vector<long>{2, -1});

    SiltingObject gam = initial_silting(dq, Q);
    CHECK(g_vector_str(gam) == "(1,0),(0,1)");
}

TEST_CASE("poset exports are deterministic") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistOptions opt;
    opt.weight_bound = 8;
    SiltingPoset poset = enumerate_interval(dq, Q, 1, opt);

    std::string dot = poset_dot(poset);
    CHECK(dot.rfind("digraph silting", 0) == 0);
    CHECK(dot == poset_dot(poset));
    // one node line per poset node
    std::size_t labels = 0;
    for (std::size_t pos = dot.find("label="); pos != std::string::npos;
         pos = dot.find("label=", pos + 1))
        ++labels;
    CHECK(labels == poset.nodes.size() + poset.edges.size());

    ordered_json j = poset_to_json(poset);
    CHECK(j["nodes"].size() == poset.nodes.size());
    CHECK(j["edges"].size() == poset.edges.size());
    CHECK(j.dump() == poset_to_json(poset).dump());

    // the trivial interval labels its single node as the algebra
    SiltingPoset point = enumerate_interval(dq, Q, 0, opt);
    CHECK(poset_dot(point).find("Γ") != std::string::npos);
}

TEST_CASE("cohomology of the algebra in low weights") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    auto h = algebra_cohomology(dq, Q, 4);
    // degree-0 rows are the preprojective algebra of A2: the two
    // idempotents and the two arrows, nothing in higher weights
    CHECK(h.at({0, 0}) == 2);
    CHECK(h.at({0, 1}) == 2);
    CHECK(h.count({0, 2}) == 0);
    CHECK(h.count({0, 3}) == 0);
    CHECK(h.count({0, 4}) == 0);
    for (const auto& [pw, dim] : h) {
        CHECK(dim > 0);
        CHECK(pw.second <= 4);
        CHECK(pw.first <= 0);
    }
}
