// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Two-sided dg ideals of the dg path algebra, handled through their finite
// dimensional pieces: the ideal's intersection with the span of paths of a
// fixed (degree, weight, source, target).  Each piece is stored as a row
// space in reduced echelon form over the canonical path basis, so ideals
// and their products can be compared cell by cell, and the ambient
// differential restricts to each piece.

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gammaq/element.hpp"
#include "gammaq/matrix.hpp"

namespace gammaq {

/// Coordinates of one finite-dimensional piece of the algebra.
struct SliceKey {
    int degree = 0;
    int weight = 0;
    int source = 0;
    int target = 0;
    bool operator<(const SliceKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (weight != o.weight) return weight < o.weight;
        if (source != o.source) return source < o.source;
        return target < o.target;
    }
    std::string str() const;
};

/// Anything with computable slice subspaces: ideals and products of ideals.
class SliceFamily {
public:
    virtual ~SliceFamily() = default;
    virtual const DoubleQuiver& dq() const = 0;
    virtual const Field& field() const = 0;
    virtual std::string name() const = 0;
    /// The subspace of the key's path span, as rref rows over the canonical
    /// path basis of that slice.
    virtual ExactMatrix slice(const SliceKey& key) const = 0;
};

/// Coefficient row of a homogeneous element in its slice basis.
std::vector<Scalar> row_of_element(const DoubleQuiver& dq, const SliceKey& key,
                                   const AlgebraElement& x);
AlgebraElement element_of_row(const DoubleQuiver& dq, Field f, const SliceKey& key,
                              const std::vector<Scalar>& row);
/// Matrix of the differential from the key's slice to the slice one degree
/// up (same weight and endpoints); rows index the target path basis.
ExactMatrix ambient_differential(const DoubleQuiver& dq, Field f, const SliceKey& key);

/// A two-sided dg ideal given by homogeneous generators.  Construction
/// verifies d(g) lies in the ideal for every generator g, which makes the
/// whole ideal closed under the differential.
class DgIdeal : public SliceFamily {
public:
    DgIdeal(std::shared_ptr<const DoubleQuiver> dq, Field f,
            std::vector<AlgebraElement> generators, std::string name);

    const DoubleQuiver& dq() const override { return *dq_; }
    const Field& field() const override { return field_; }
    std::string name() const override { return name_; }
    ExactMatrix slice(const SliceKey& key) const override;
    const std::vector<AlgebraElement>& generators() const { return gens_; }

private:
    std::shared_ptr<const DoubleQuiver> dq_;
    Field field_;
    std::vector<AlgebraElement> gens_;
    std::string name_;
    // held by pointer so the ideal stays movable
    mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
    mutable std::map<SliceKey, ExactMatrix> cache_;
};

/// The product of two slice families, computed slice by slice by expanding
/// products of basis elements over all bidegree splittings and middle
/// vertices.
class IdealProduct : public SliceFamily {
public:
    IdealProduct(std::shared_ptr<const SliceFamily> left,
                 std::shared_ptr<const SliceFamily> right);

    const DoubleQuiver& dq() const override { return left_->dq(); }
    const Field& field() const override { return left_->field(); }
    std::string name() const override { return left_->name() + "*" + right_->name(); }
    ExactMatrix slice(const SliceKey& key) const override;

private:
    std::shared_ptr<const SliceFamily> left_;
    std::shared_ptr<const SliceFamily> right_;
    mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
    mutable std::map<SliceKey, ExactMatrix> cache_;
};

/// Cohomology dimension of a slice family's piece at the key, using the
/// restriction of the ambient differential (the family must be d-closed).
long slice_h_dim(const SliceFamily& fam, const SliceKey& key);

/// The ideal generated by the idempotents away from vertex i together with
/// the loop t_i.  Tensoring with it realises the spherical twist at i.
DgIdeal vertex_ideal(std::shared_ptr<const DoubleQuiver> dq, Field f, int i);

/// The ideal generated by the idempotents away from {i, j}, both loops, and
/// the two-sided cycles rho* rho and rho rho* of every arrow rho between i
/// and j.  For commuting or braid-related pairs this is where products of
/// vertex ideals land.
DgIdeal pair_ideal(std::shared_ptr<const DoubleQuiver> dq, Field f, int i, int j);

/// For a pair joined by exactly one arrow: the predicted value of the
/// triple product I_i I_j I_i, with the squared loop at i, the one-sided
/// products of t_i with the two-sided cycle at i, and t_i flanked by the
/// half-cycles between i and j.
DgIdeal triple_ideal(std::shared_ptr<const DoubleQuiver> dq, Field f, int i, int j);

/// Outcome of the braid relation check for a vertex pair.
struct BraidRelationReport {
    int i = 0, j = 0;
    int arrows = 0;        ///< number of arrows between the pair
    int weight_bound = 0;
    bool applicable = true; ///< false for pairs with two or more arrows
    bool pass = false;
    long cells_checked = 0;
    std::vector<std::string> failures;
    std::string summary() const;
};

/// Verify the defining relations of the braid group action on ideals for
/// the pair {i, j}, slice by slice for all weights up to weight_bound:
///
///   * no arrow between i and j:  I_i I_j = I_j I_i = pair ideal;
///   * one arrow: I_i I_j I_i and I_j I_i I_j both equal their predicted
///     triple ideals, each triple ideal includes quasi-isomorphically into
///     the pair ideal, and the quotient is the two-dimensional contractible
///     complex spanned by the loop and the two-sided cycle at the outer
///     vertex;
///   * two or more arrows: not applicable (no braid relation holds).
BraidRelationReport braid_relation_check(std::shared_ptr<const DoubleQuiver> dq,
                                         Field f, int i, int j, int weight_bound);

} // namespace gammaq
