// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>

#include "gammaq/twisted.hpp"

namespace gammaq {

enum class IsoVerdict { Equal, Distinct, Unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    std::string detail;
};

/// Decide whether two twisted complexes are isomorphic (as objects, i.e.
/// allowing weight-inhomogeneous isomorphisms).  Both inputs are reduced
/// first; minimal models are unique up to isomorphism, which makes the
/// checks below conclusive in the directions claimed.
///
///   * Distinct when the generator multisets by (vertex, shift) differ —
///     an isomorphism of reduced complexes restricts to invertible blocks
///     between generators of equal (vertex, shift).
///   * Distinct when no closed degree-0 morphism carries a nonzero
///     "scalar part" (entries that are multiples of idempotent paths):
///     every isomorphism has an invertible, hence nonzero, scalar part,
///     and the scalar part only depends on the cohomology class.
///   * Equal when some linear combination of degree-0 classes (collected
///     across all map weights that can carry scalar entries) has an
///     invertible scalar part: eliminating those scalar entries in the cone
///     consumes all generators via Schur complements, so the cone is zero
///     and the morphism is an isomorphism.
///   * Unknown when scalar-carrying classes exist but no invertible
///     combination was found within the seeded random search budget.
IsoResult equal_upto_iso(const TwistedComplex& a, const TwistedComplex& b,
                         unsigned seed = 20260823u);

} // namespace gammaq
