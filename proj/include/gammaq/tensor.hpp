// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Twist functors at a vertex i, in three computable forms:
//
//   * tensor_plus:  the exact tensor with the two-sided dg ideal I_i.  On
//     twisted complexes this is a local substitution: a generator over
//     vertex i is replaced by the standard model of e_i I_i (a top copy of
//     e_i shifted once, plus one slot per arrow touching i), every other
//     generator is kept, and the twisting matrix is rewritten through the
//     bimodule structure.  No approximation is involved.
//
//   * dual_twist_direct:  the same functor built homologically, as the
//     shifted cone over the coevaluation from the complex into copies of
//     the resolution of the simple at i, one copy per cohomology class of
//     the mapping complex.  Independent route, used to cross-check
//     tensor_plus.
//
//   * tensor_minus:  the inverse twist, built as the cone over the
//     evaluation from copies of the resolution of the simple at i.  The
//     classes are collected inside a weight window, so the result is
//     certified by applying tensor_plus and checking the round trip
//     reproduces the input up to isomorphism; on failure the window widens
//     and the construction retries, and a persistent failure raises
//     WindowError rather than returning an uncertified object.

#pragma once

#include "gammaq/equal.hpp"
#include "gammaq/twisted.hpp"

namespace gammaq {

/// Window and retry policy for the homological twist constructions.
struct TwistOptions {
    int weight_bound = 12; ///< map-weight window for collecting classes
    int widen_step = 4;    ///< how much to widen after a failed certificate
    int max_retries = 3;   ///< number of widenings before giving up
    int jobs = 1;          ///< worker threads for cell computations
};

/// T tensored with the ideal I_i, as an exact substitution.  The result is
/// returned unreduced (callers usually reduce); it is validated before
/// being returned.
TwistedComplex tensor_plus(const TwistedComplex& t, int i);

/// Outcome of a certified inverse twist.
struct TwistResult {
    TwistedComplex complex; ///< reduced
    int window_used = 0;    ///< weight window that produced the certificate
    int retries = 0;
};

/// The inverse twist at i with round-trip certificate; throws WindowError
/// when no window up to the retry budget certifies.
TwistResult tensor_minus(const TwistedComplex& t, int i, const TwistOptions& opt);

/// The coevaluation model of the twist at i (same functor as tensor_plus,
/// different construction), reduced.  Classes are collected inside the
/// window of `opt`; no certificate is attached.
TwistedComplex dual_twist_direct(const TwistedComplex& t, int i,
                                 const TwistOptions& opt);

/// One twist step: reduce(tensor_plus) for a positive letter, certified
/// tensor_minus for an inverse letter.
TwistedComplex apply_twist(const TwistedComplex& t, int i, bool inverse,
                           const TwistOptions& opt);

} // namespace gammaq
