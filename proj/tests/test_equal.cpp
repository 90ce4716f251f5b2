// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gammaq/equal.hpp"

using namespace gammaq;

TEST_CASE("identical and contractible inputs") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex gam = gamma_complex(dq, Q);

    // the identity of the free object spans one class per vertex summand
    IsoResult same = equal_upto_iso(gam, gam);
    CHECK(same.verdict == IsoVerdict::Equal);
    CHECK(same.detail == "isomorphism witnessed by the class sum");

    // a single projective summand needs just one class
    TwistedComplex p1 = projective_complex(dq, Q, 1);
    IsoResult one = equal_upto_iso(p1, p1);
    CHECK(one.verdict == IsoVerdict::Equal);
    CHECK(one.detail == "isomorphism witnessed by a single class");

    // a contractible pair against the empty complex
    TwistedComplex pair(dq, Q);
    pair.add_generator(1, 1, 0);
    pair.add_generator(1, 0, 0);
    pair.set_delta(1, 0, AlgebraElement::of_path(Q, dq->trivial_path(1)));
    TwistedComplex none(dq, Q);
    IsoResult zero = equal_upto_iso(pair, none);
    CHECK(zero.verdict == IsoVerdict::Equal);
    CHECK(zero.detail == "both complexes reduce to zero");
}

TEST_CASE("shift and vertex mismatches are conclusive") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    TwistedComplex gam = gamma_complex(dq, Q);

    IsoResult shifted = equal_upto_iso(gam, gam.shifted(1));
    CHECK(shifted.verdict == IsoVerdict::Distinct);
    CHECK(shifted.detail.rfind("generator multisets differ", 0) == 0);

    TwistedComplex p1 = projective_complex(dq, Q, 1);
    TwistedComplex p2 = projective_complex(dq, Q, 2);
    CHECK(equal_upto_iso(p1, p2).verdict == IsoVerdict::Distinct);
}

TEST_CASE("offsets do not affect the isomorphism type") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(3));
    Field Q = Field::rationals();
    TwistedComplex ps = resolution_of_simple(dq, Q, 2);
    // the comparison must hunt for classes in nonzero map weights here
    IsoResult r = equal_upto_iso(ps, offset_shifted(ps, 4));
    CHECK(r.verdict == IsoVerdict::Equal);

    TwistedComplex gam = gamma_complex(dq, Q);
    CHECK(equal_upto_iso(gam, offset_shifted(gam, -3)).verdict == IsoVerdict::Equal);
}

TEST_CASE("scalar-free hom spaces give a conclusive distinction") {
    // two-term complexes over the Kronecker quiver attached to different
    // arrows: same generators, but closedness of a degree-0 morphism forces
    // s1 a2 = s2 a1 on the connecting entry, so both scalar corners vanish
    auto dq = std::make_shared<DoubleQuiver>(Quiver::kronecker(2));
    Field Q = Field::rationals();
    TwistedComplex x(dq, Q);
    x.add_generator(1, 1, 1);
    x.add_generator(2, 0, 0);
    x.set_delta(1, 0, AlgebraElement::of_path(Q, dq->letter_path(dq->arrow_letter(0))));
    TwistedComplex y(dq, Q);
    y.add_generator(1, 1, 1);
    y.add_generator(2, 0, 0);
    y.set_delta(1, 0, AlgebraElement::of_path(Q, dq->letter_path(dq->arrow_letter(1))));

    IsoResult r = equal_upto_iso(x, y);
    CHECK(r.verdict == IsoVerdict::Distinct);
    CHECK(r.detail == "no degree-0 cohomology class carries a scalar part");
    // multiplicity mismatches stay conclusive as well
    TwistedComplex two = TwistedComplex::direct_sum(dq, Q, {&x, &x});
    CHECK(equal_upto_iso(two, x).verdict == IsoVerdict::Distinct);
}

TEST_CASE("inconclusive pairs report unknown rather than guessing") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(3));
    Field Q = Field::rationals();
    Path a1 = dq->letter_path(dq->arrow_letter(0)); // 1 -> 2
    Path a2 = dq->letter_path(dq->arrow_letter(1)); // 2 -> 3
    Path a2a1 = dq->compose(a2, a1);                // 1 -> 3, weight 2

    // X: e_1[1]{2} -> e_3[0]{0} along a2 a1;  Y: same generators, zero delta.
    TwistedComplex x(dq, Q);
    x.add_generator(1, 1, 2);
    x.add_generator(3, 0, 0);
    x.set_delta(1, 0, AlgebraElement::of_path(Q, a2a1));
    CHECK_NOTHROW(x.validate());
    TwistedComplex y(dq, Q);
    y.add_generator(1, 1, 2);
    y.add_generator(3, 0, 0);

    // the two are not isomorphic, but closed degree-0 morphisms carry a
    // scalar part on one corner only, so no witness combination exists and
    // the checker must not claim either way
    IsoResult r = equal_upto_iso(x, y);
    CHECK(r.verdict == IsoVerdict::Unknown);
    CHECK(r.detail ==
          "scalar-carrying classes exist but no invertible combination was found");
}
