// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "gammaq/ideal.hpp"

using namespace gammaq;

namespace {

long slice_dim(const SliceFamily& fam, int d, int w, int s, int t) {
    return fam.slice(SliceKey{d, w, s, t}).rows();
}

} // namespace

TEST_CASE("the vertex ideal misses exactly its own idempotent") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    DgIdeal i1 = vertex_ideal(dq, Q, 1);
    CHECK(i1.name() == "I1");

    // the only gap, in every weight up to 4: the trivial path at vertex 1
    CHECK(slice_dim(i1, 0, 0, 1, 1) == 0);
    CHECK(slice_dim(i1, 0, 0, 2, 2) == 1);
    for (int w = 1; w <= 4; ++w)
        for (int s : {1, 2})
            for (int t : {1, 2})
                for (int d = -w; d <= 0; ++d) {
                    SliceKey key{d, w, s, t};
                    long full = static_cast<long>(dq->slice(d, w, s, t).size());
                    CHECK(i1.slice(key).rows() == full);
                }
}

TEST_CASE("products of ideals are computed slice by slice") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    auto i1 = std::make_shared<DgIdeal>(vertex_ideal(dq, Q, 1));
    IdealProduct sq(i1, i1);

    // e_2 * e_2 keeps the far idempotent in the square
    CHECK(slice_dim(sq, 0, 0, 2, 2) == 1);
    // but t_1 is not a product of two elements of I_1: every bidegree
    // splitting of (-1, 2) at vertex 1 hits the missing idempotent slice
    CHECK(slice_dim(sq, -1, 2, 1, 1) == 0);
    CHECK(slice_dim(*i1, -1, 2, 1, 1) == 1);
}

TEST_CASE("slice cohomology of the vertex ideal") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    DgIdeal i1 = vertex_ideal(dq, Q, 1);

    // e_2 survives in cohomology
    CHECK(slice_h_dim(i1, SliceKey{0, 0, 2, 2}) == 1);
    // t_1 is not closed (d t_1 = -a*a inside the ideal), and a*a bounds
    CHECK(slice_h_dim(i1, SliceKey{-1, 2, 1, 1}) == 0);
    CHECK(slice_h_dim(i1, SliceKey{0, 2, 1, 1}) == 0);
}

TEST_CASE("ideals must be closed under the differential") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    // t_1 alone does not generate a dg ideal: d t_1 = -a*a has degree 0,
    // but every product p t_1 q with p, q of nonpositive degree stays in
    // degree <= -1, so the slice of a*a cannot be reached
    AlgebraElement t1 = AlgebraElement::of_path(Q, dq->letter_path(dq->loop_letter(1)));
    CHECK_THROWS_AS(DgIdeal(dq, Q, {t1}, "bad"), InvalidDataError);
}

TEST_CASE("braid relations for a commuting pair") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(3));
    Field Q = Field::rationals();
    BraidRelationReport r = braid_relation_check(dq, Q, 1, 3, 6);
    CHECK(r.applicable);
    CHECK(r.arrows == 0);
    CHECK(r.pass);
    CHECK(r.cells_checked > 0);
    CHECK(r.summary().find(": ok") != std::string::npos);
}

TEST_CASE("braid relations for a pair joined by one arrow") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field Q = Field::rationals();
    BraidRelationReport r = braid_relation_check(dq, Q, 1, 2, 6);
    CHECK(r.applicable);
    CHECK(r.arrows == 1);
    CHECK(r.pass);
    CHECK(r.failures.empty());
}

TEST_CASE("pairs with multiple arrows are out of scope") {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::kronecker(2));
    Field Q = Field::rationals();
    BraidRelationReport r = braid_relation_check(dq, Q, 1, 2, 6);
    CHECK_FALSE(r.applicable);
    CHECK(r.arrows == 2);
}
