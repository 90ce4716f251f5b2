// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gammaq/element.hpp"

namespace gammaq {

/// A finite-dimensional right dg module over the dg path algebra, given by
/// an explicit graded basis, the right action of each letter, and the
/// differential on basis vectors.  Mapping complexes from a twisted complex
/// into such a module are computed cell by cell in hom.cpp.
class RightModule {
public:
    struct BasisVec {
        int vertex = 0; ///< the idempotent supporting the vector: v = v . e_vertex
        int degree = 0;
        int weight = 0;
        std::string name;
    };
    /// Sparse module vector: sorted (basis index, coefficient) pairs.
    using Vec = std::vector<std::pair<int, Scalar>>;

    RightModule(std::shared_ptr<const DoubleQuiver> dq, Field f);

    const DoubleQuiver& dq() const { return *dq_; }
    const Field& field() const { return field_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisVec& basis_vec(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

    int add_basis_vector(int vertex, int degree, int weight, std::string name);
    /// Right action of a letter on a basis vector; unset actions are zero.
    void set_action(int b, int letter_id, Vec image);
    void set_differential(int b, Vec image);

    Vec act_letter(int b, int letter_id) const;
    /// v . p for a path p (letters applied first-traversed first).
    Vec act_path(const Vec& v, const Path& p) const;
    Vec act_element(const Vec& v, const AlgebraElement& x) const;
    Vec differential(const Vec& v) const;

    static Vec add(const Vec& a, const Vec& b);
    static Vec scale(const Vec& a, const Scalar& c);

    /// The simple module at a vertex: one basis vector in degree 0 and
    /// weight 0, annihilated by every letter, with zero differential.
    static RightModule simple(std::shared_ptr<const DoubleQuiver> dq, Field f, int vertex);

private:
    std::shared_ptr<const DoubleQuiver> dq_;
    Field field_;
    std::vector<BasisVec> basis_;
    // action_[b] maps letter id -> image vector; absent means zero
    std::vector<std::map<int, Vec>> action_;
    std::vector<Vec> diff_;
};

} // namespace gammaq
