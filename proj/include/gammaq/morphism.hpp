// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Morphisms between twisted complexes and their cones.  A morphism of
// degree p and weight w from M to N is a matrix of left-multiplication
// operators: entry (r, c) lies in e_{w_r} Gamma e_{v_c} and has
//
//   degree  p + shift^N_r - shift^M_c,
//   weight  w + offset^M_c - offset^N_r.
//
// Composition is plain matrix composition; all signs live in the
// differential
//
//   (D u)_rc = (-1)^{shift^N_r} d(u_rc) + (delta^N u)_rc
//              - (-1)^p (u delta^M)_rc,
//
// and u is closed when D u = 0.  The cone of a closed degree-0, weight-0
// morphism phi has generators M[1] followed by N and twisting matrix
// [[-delta^M, 0], [phi, delta^N]].

#pragma once

#include <map>

#include "gammaq/twisted.hpp"

namespace gammaq {

class Morphism {
public:
    /// Source and target are copied: a morphism is self-contained.
    Morphism(TwistedComplex source, TwistedComplex target, int degree, int weight = 0);

    const TwistedComplex& source() const { return source_; }
    const TwistedComplex& target() const { return target_; }
    int degree() const { return degree_; }
    int weight() const { return weight_; }

    void set_entry(int r, int c, const AlgebraElement& value);
    void add_entry(int r, int c, const AlgebraElement& value);
    const AlgebraElement& entry(int r, int c) const;
    const std::map<std::pair<int, int>, AlgebraElement>& entries() const {
        return entries_;
    }
    bool is_zero() const { return entries_.empty(); }

    /// D u as defined in the header comment; a morphism of degree + 1.
    Morphism differential() const;
    bool is_closed() const { return differential().is_zero(); }

    Morphism operator+(const Morphism& o) const;
    Morphism operator-() const;
    Morphism scaled(const Scalar& c) const;

    std::string describe() const;

private:
    void check_entry(int r, int c, const AlgebraElement& value) const;

    TwistedComplex source_;
    TwistedComplex target_;
    int degree_;
    int weight_;
    std::map<std::pair<int, int>, AlgebraElement> entries_;
    AlgebraElement zero_;
};

/// psi after phi (phi applied first).  Degrees and weights add.
Morphism compose(const Morphism& psi, const Morphism& phi);

/// Mapping cone of a closed degree-0 weight-0 morphism.  Generators are
/// source[1] then target; the kept-generator layout is exactly that order.
/// Throws InvalidDataError when phi is not closed or has nonzero degree or
/// weight.
TwistedComplex cone(const Morphism& phi);

/// cone(phi)[-1]; used for right mutation (co-cones).
TwistedComplex co_cone(const Morphism& phi);

} // namespace gammaq
