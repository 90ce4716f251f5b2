// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gammaq/field.hpp"

using namespace gammaq;

TEST_CASE("rational arithmetic is exact") {
    Field Q = Field::rationals();
    Scalar a = Scalar::parse(Q, "2/3");
    Scalar b = Scalar::parse(Q, "-1/6");
    CHECK((a + b).str() == "1/2");
    CHECK((a * b).str() == "-1/9");
    CHECK((a - a).is_zero());
    CHECK((a * a.inverse()) == Scalar::one(Q));
    CHECK(Scalar::parse(Q, "4/6") == a);
}

TEST_CASE("prime field arithmetic") {
    Field F = Field::prime(32003);
    Scalar a = Scalar::of(F, -1);
    CHECK(a.str() == "32002");
    CHECK((a * a) == Scalar::one(F));
    Scalar b = Scalar::of(F, 12345);
    CHECK((b * b.inverse()) == Scalar::one(F));
    CHECK((b - b).is_zero());
    // 2 * 16002 = 32004 = 1 mod 32003
    CHECK(Scalar::of(F, 2).inverse() == Scalar::of(F, 16002));
}

TEST_CASE("field parsing") {
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("Fp:7") == Field::prime(7));
    CHECK(Field::parse("Fp") == Field::prime(Field::kDefaultPrime));
    CHECK_THROWS_AS(Field::parse("R"), ConfigError);
    CHECK_THROWS_AS(Field::parse("Fp:4"), ConfigError);   // not prime
    CHECK_THROWS_AS(Field::parse("Fp:abc"), ConfigError);
    CHECK_THROWS_AS(Scalar::parse(Field::rationals(), "x"), ConfigError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    Scalar q = Scalar::one(Field::rationals());
    Scalar f = Scalar::one(Field::prime(7));
    CHECK_THROWS_AS(q + f, InvalidDataError);
    CHECK_THROWS_AS(q * f, InvalidDataError);
    CHECK(q != f);
}
