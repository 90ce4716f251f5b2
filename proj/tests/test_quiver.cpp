// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gammaq/double_quiver.hpp"
#include "gammaq/quiver.hpp"

using namespace gammaq;

TEST_CASE("built-in families have the expected shapes") {
    Quiver a3 = Quiver::type_a(3);
    CHECK(a3.vertices() == std::vector<int>{1, 2, 3});
    REQUIRE(a3.arrows().size() == 2);
    CHECK(a3.arrows()[0].from == 1);
    CHECK(a3.arrows()[0].to == 2);
    CHECK(a3.arrows()[1].from == 2);
    CHECK(a3.arrows()[1].to == 3);

    Quiver d4 = Quiver::type_d(4);
    REQUIRE(d4.arrows().size() == 3);
    CHECK(d4.arrows()[0].from == 1);
    CHECK(d4.arrows()[0].to == 3);
    CHECK(d4.arrows()[1].from == 2);
    CHECK(d4.arrows()[1].to == 3);
    CHECK(d4.arrows()[2].from == 3);
    CHECK(d4.arrows()[2].to == 4);

    Quiver e6 = Quiver::type_e(6);
    CHECK(e6.arrows().size() == 5);
    CHECK(e6.arrows().back().from == 6);
    CHECK(e6.arrows().back().to == 3);

    Quiver k2 = Quiver::kronecker(2);
    CHECK(k2.arrows().size() == 2);
    CHECK(k2.arrows_between(1, 2) == 2);
    CHECK(a3.arrows_between(1, 2) == 1);
    CHECK(a3.arrows_between(1, 3) == 0);
}

TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(Quiver({1, 1}, {}), ConfigError); // duplicate vertex
    CHECK_THROWS_AS(Quiver({1, 2}, {{"a", 1, 1}}), ConfigError); // loop
    CHECK_THROWS_AS(Quiver({1, 2}, {{"a", 1, 2}, {"a", 2, 1}}), ConfigError); // dup id
    CHECK_THROWS_AS(Quiver({1, 2}, {{"a", 1, 3}}), ConfigError); // unknown vertex
    CHECK_THROWS_AS(Quiver({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}),
                    ConfigError); // oriented cycle
    CHECK_NOTHROW(Quiver({1, 2}, {{"a", 1, 2}, {"b", 1, 2}})); // parallel arrows ok
}

TEST_CASE("doubled quiver letters and grading") {
    DoubleQuiver dq(Quiver::type_a(2));
    // one arrow, one dual, two loops
    REQUIRE(dq.letters().size() == 4);
    const Letter& a = dq.letter(dq.arrow_letter(0));
    const Letter& ad = dq.letter(dq.dual_letter(0));
    const Letter& t1 = dq.letter(dq.loop_letter(1));
    CHECK(a.kind == LetterKind::Arrow);
    CHECK(a.degree == 0);
    CHECK(a.weight == 1);
    CHECK(a.source == 1);
    CHECK(a.target == 2);
    CHECK(ad.kind == LetterKind::Dual);
    CHECK(ad.source == 2);
    CHECK(ad.target == 1);
    CHECK(ad.name == "a1_2*");
    CHECK(t1.kind == LetterKind::Loop);
    CHECK(t1.degree == -1);
    CHECK(t1.weight == 2);
    CHECK(t1.source == 1);
    CHECK(t1.target == 1);
}

TEST_CASE("path composition follows function order") {
    DoubleQuiver dq(Quiver::type_a(2));
    Path a = dq.letter_path(dq.arrow_letter(0));   // 1 -> 2
    Path ad = dq.letter_path(dq.dual_letter(0));   // 2 -> 1
    Path e1 = dq.trivial_path(1), e2 = dq.trivial_path(2);

    // e_target * p = p = p * e_source
    CHECK(path_equal(dq.compose(e2, a), a));
    CHECK(path_equal(dq.compose(a, e1), a));
    CHECK_THROWS_AS(dq.compose(e1, a), InvalidDataError);

    // a* after a: a 1->1 round trip, written a*.a
    Path round = dq.compose(ad, a);
    CHECK(round.source == 1);
    CHECK(round.target == 1);
    CHECK(round.weight == 2);
    CHECK(round.degree == 0);
    CHECK(dq.path_str(round) == "a1_2*.a1_2");
    CHECK_THROWS_AS(dq.compose(a, a), InvalidDataError);
}

TEST_CASE("A2 slices have known dimensions") {
    DoubleQuiver dq(Quiver::type_a(2));
    // weight 0: idempotents only
    CHECK(dq.slice(0, 0, 1, 1).size() == 1);
    CHECK(dq.slice(0, 0, 1, 2).size() == 0);
    // weight 4, degree 0, 1 -> 1: only (a* a)^2
    CHECK(dq.slice(0, 4, 1, 1).size() == 1);
    // weight 4, degree -1, 1 -> 1: a*.a.t1, a*.t2.a, t1.a*.a
    CHECK(dq.slice(-1, 4, 1, 1).size() == 3);
    // weight 4, degree -2, 1 -> 1: t1.t1
    CHECK(dq.slice(-2, 4, 1, 1).size() == 1);
    // odd weight cannot reach the same vertex in A2
    CHECK(dq.slice(0, 3, 1, 1).size() == 0);
    CHECK(dq.slice(0, 3, 1, 2).size() == 1); // a.a*.a
    // slices are canonically sorted and indexable
    for (const Path& p : dq.slice(-1, 4, 1, 1))
        CHECK(path_equal(dq.slice(-1, 4, 1, 1)[static_cast<std::size_t>(
                             dq.index_in_slice(p))],
                         p));
}

TEST_CASE("slice length is weight plus degree") {
    DoubleQuiver dq(Quiver::type_d(4));
    for (int w = 0; w <= 6; ++w)
        for (int d = -3; d <= 0; ++d)
            for (int s : dq.quiver().vertices())
                for (int t : dq.quiver().vertices())
                    for (const Path& p : dq.slice(d, w, s, t)) {
                        CHECK(static_cast<int>(p.length()) == w + d);
                        CHECK(p.source == s);
                        CHECK(p.target == t);
                    }
}
