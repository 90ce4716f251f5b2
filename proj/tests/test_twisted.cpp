// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gammaq/twisted.hpp"

using namespace gammaq;

namespace {

AlgebraElement el(Field f, const Path& p, long c = 1) {
    return AlgebraElement::of_path(f, p, Scalar::of(f, c));
}

} // namespace

TEST_CASE("gamma complex and projectives") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(3));
    Field Q = Field::rationals();
    TwistedComplex gam = gamma_complex(dq, Q);
    REQUIRE(gam.size() == 3);
    CHECK(gam.delta_entries().empty());
    CHECK_NOTHROW(gam.validate());
    for (int i = 0; i < 3; ++i) {
        CHECK(gam.generator(i).vertex == dq->quiver().vertices()[static_cast<std::size_t>(i)]);
        CHECK(gam.generator(i).shift == 0);
        CHECK(gam.generator(i).weight_offset == 0);
    }
    TwistedComplex p2 = projective_complex(dq, Q, 2, 1, 3);
    REQUIRE(p2.size() == 1);
    CHECK(p2.generator(0).vertex == 2);
    CHECK(p2.generator(0).shift == 1);
    CHECK(p2.generator(0).weight_offset == 3);
}

TEST_CASE("entry conventions are enforced") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    Path a = dq->letter_path(dq->arrow_letter(0)); // 1 -> 2

    TwistedComplex t(dq, Q);
    int top = t.add_generator(1, 1, 1); // e_1 Gamma [1] {1}
    int bot = t.add_generator(2, 0, 0); // e_2 Gamma
    // entry (bot <- top) must lie in e_2 Gamma e_1, degree 0, weight 1: the arrow
    CHECK_NOTHROW(t.set_delta(bot, top, el(Q, a)));
    CHECK_NOTHROW(t.validate());

    // wrong endpoints: a maps generator over 1, not over 2
    TwistedComplex bad1(dq, Q);
    bad1.add_generator(2, 1, 1);
    bad1.add_generator(2, 0, 0);
    CHECK_THROWS_AS(bad1.set_delta(1, 0, el(Q, a)), InvalidDataError);

    // wrong weight: offset difference says 2, the arrow has weight 1
    TwistedComplex bad2(dq, Q);
    bad2.add_generator(1, 1, 2);
    bad2.add_generator(2, 0, 0);
    CHECK_THROWS_AS(bad2.set_delta(1, 0, el(Q, a)), InvalidDataError);

    // degree forces shifts downward: an entry from lower to higher shift
    TwistedComplex bad3(dq, Q);
    bad3.add_generator(2, 0, 0);
    bad3.add_generator(1, 1, 1);
    CHECK_THROWS_AS(bad3.set_delta(1, 0, el(Q, a)), InvalidDataError);
}

TEST_CASE("Maurer-Cartan failures are caught by validate") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    Path a = dq->letter_path(dq->arrow_letter(0));
    Path ad = dq->letter_path(dq->dual_letter(0));
    Path t1 = dq->letter_path(dq->loop_letter(1));

    // the standard resolution shape of the simple at 1 by hand:
    //   top = e_1[2]{2},  slot = e_2[1]{1},  bot = e_1[0]{0}
    TwistedComplex t(dq, Q);
    int top = t.add_generator(1, 2, 2);
    int slot = t.add_generator(2, 1, 1);
    int bot = t.add_generator(1, 0, 0);
    t.set_delta(slot, top, el(Q, a));
    t.set_delta(bot, slot, el(Q, ad));
    t.set_delta(bot, top, el(Q, t1));
    // (-1)^0 d(t_1) + a* a = -a*a + a*a = 0
    CHECK_NOTHROW(t.validate());

    // flipping one sign breaks the Maurer-Cartan equation
    TwistedComplex broken = t;
    broken.set_delta(bot, slot, el(Q, ad, -1));
    CHECK_THROWS_AS(broken.validate(), InvalidDataError);

    // the hand-built complex coincides with the library's resolution
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    REQUIRE(ps.size() == 3);
    CHECK(ps.generator(0) == t.generator(0));
    CHECK(ps.generator(1) == t.generator(1));
    CHECK(ps.generator(2) == t.generator(2));
    CHECK(ps.delta(slot, top) == t.delta(slot, top));
    CHECK(ps.delta(bot, slot) == t.delta(bot, slot));
    CHECK(ps.delta(bot, top) == t.delta(bot, top));
}

TEST_CASE("resolution of a simple with incoming arrows") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    // vertex 2 has one incoming arrow a: slot entry out of the top is -a*
    TwistedComplex ps = resolution_of_simple(dq, Q, 2);
    REQUIRE(ps.size() == 3);
    CHECK(ps.generator(0) == Generator{2, 2, 2});
    CHECK(ps.generator(1) == Generator{1, 1, 1});
    CHECK(ps.generator(2) == Generator{2, 0, 0});
    Path a = dq->letter_path(dq->arrow_letter(0));
    Path ad = dq->letter_path(dq->dual_letter(0));
    CHECK(ps.delta(1, 0) == el(Q, ad, -1));
    CHECK(ps.delta(2, 1) == el(Q, a));
    CHECK(ps.delta(2, 0) == el(Q, dq->letter_path(dq->loop_letter(2))));
    CHECK_NOTHROW(ps.validate());
}

TEST_CASE("resolution at a branching vertex validates") {
    Field Q = Field::rationals();
    for (const Quiver& q : {Quiver::type_d(4), Quiver::kronecker(2)}) {
        auto dq = std::make_shared<DoubleQuiver>(q);
        for (int v : q.vertices()) {
            TwistedComplex ps = resolution_of_simple(dq, Q, v);
            CHECK_NOTHROW(ps.validate());
            // one top, one bottom, one slot per touching arrow
            int touching = 0;
            for (const Arrow& a : q.arrows())
                if (a.from == v || a.to == v) ++touching;
            CHECK(ps.size() == 2 + touching);
        }
    }
}

TEST_CASE("shift negates delta and adds to generator shifts") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    TwistedComplex sh = ps.shifted(1);
    CHECK_NOTHROW(sh.validate());
    for (int i = 0; i < ps.size(); ++i) {
        CHECK(sh.generator(i).shift == ps.generator(i).shift + 1);
        CHECK(sh.generator(i).weight_offset == ps.generator(i).weight_offset);
    }
    CHECK(sh.delta(2, 0) == -ps.delta(2, 0));
    TwistedComplex back = sh.shifted(-1);
    for (const auto& [rc, v] : ps.delta_entries()) CHECK(back.delta(rc.first, rc.second) == v);
}

TEST_CASE("offset shift keeps entries weight homogeneous") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    TwistedComplex moved = offset_shifted(ps, 5);
    CHECK_NOTHROW(moved.validate());
    for (int i = 0; i < ps.size(); ++i)
        CHECK(moved.generator(i).weight_offset == ps.generator(i).weight_offset + 5);
    for (const auto& [rc, v] : ps.delta_entries())
        CHECK(moved.delta(rc.first, rc.second) == v);
}

TEST_CASE("reduction eliminates scalar entries") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();

    // contractible pair: e_1[1] -> e_1 via the idempotent
    TwistedComplex c(dq, Q);
    c.add_generator(1, 1, 0);
    c.add_generator(1, 0, 0);
    c.set_delta(1, 0, el(Q, dq->trivial_path(1)));
    CHECK_NOTHROW(c.validate());
    ReduceResult r = reduce(c);
    CHECK(r.complex.empty());
    CHECK(r.kept.empty());

    // direct sum with a projective keeps exactly the projective
    TwistedComplex p2 = projective_complex(dq, Q, 2);
    TwistedComplex sum = TwistedComplex::direct_sum(dq, Q, {&c, &p2});
    ReduceResult r2 = reduce(sum);
    REQUIRE(r2.complex.size() == 1);
    CHECK(r2.complex.generator(0).vertex == 2);
    CHECK(r2.kept == std::vector<int>{2});

    // a minimal complex is untouched
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    ReduceResult r3 = reduce(ps);
    CHECK(r3.complex.size() == ps.size());
}

TEST_CASE("restriction splits direct summands") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex ps = resolution_of_simple(dq, Q, 1);
    TwistedComplex p2 = projective_complex(dq, Q, 2);
    TwistedComplex sum = TwistedComplex::direct_sum(dq, Q, {&ps, &p2});
    REQUIRE(sum.size() == 4);
    TwistedComplex left = sum.restricted({0, 1, 2});
    CHECK(left.size() == 3);
    CHECK(left.delta(2, 0) == ps.delta(2, 0));
    TwistedComplex right = sum.restricted({3});
    CHECK(right.size() == 1);
    // cutting through a delta entry is refused
    CHECK_THROWS_AS(sum.restricted({0, 3}), InvalidDataError);
}
