// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Silting objects as ordered lists of reduced twisted-complex blocks, the
// action of braid words on them through the twist functors, irreducible
// mutation at a block via minimal approximations, the silting partial
// order, and breadth-first enumeration of an interval of the order.
//
// The homological computations run inside a weight window.  Everything
// windowed is either certified (inverse twists), cross-checked at two
// windows (approximation multiplicities), or reported as Unknown rather
// than silently trusted.

#pragma once

#include <string>
#include <vector>

#include "gammaq/braid.hpp"
#include "gammaq/tensor.hpp"

namespace gammaq {

/// A direct sum of indecomposable twisted complexes, kept as an ordered
/// list of blocks so mutation positions are stable.
struct SiltingObject {
    std::vector<TwistedComplex> blocks;

    const DoubleQuiver& dq() const;
    std::shared_ptr<const DoubleQuiver> dq_ptr() const;
    const Field& field() const;
    TwistedComplex total() const;
    SiltingObject shifted(int n) const;
    std::string describe() const;
};

/// The dg algebra itself: one block e_v Gamma per vertex.
SiltingObject initial_silting(std::shared_ptr<const DoubleQuiver> dq, Field f);

/// Apply the braid word to the silting object block by block, first letter
/// first.  Positive letters tensor with the vertex ideal and reduce;
/// inverse letters run the certified inverse twist.
SiltingObject braid_to_silting(std::shared_ptr<const DoubleQuiver> dq, Field f,
                               const BraidWord& w, const TwistOptions& opt);
SiltingObject apply_word(const SiltingObject& m, const BraidWord& w,
                         const TwistOptions& opt);

enum class Direction { Left, Right };

/// Irreducible mutation at one block: replace the block by the cone of a
/// minimal left approximation into the other blocks (or the shifted
/// co-cone of a minimal right approximation).  Approximation
/// multiplicities are computed from degree-0 Hom classes modulo the
/// radical of the remaining blocks' additive category; the radical of each
/// endomorphism algebra comes from the trace form of its regular
/// representation, which identifies the radical exactly in characteristic
/// zero or above the algebra's dimension.  The multiplicities are
/// recomputed at a window two smaller; a mismatch raises MutationError
/// instead of returning a window-dependent answer.
SiltingObject mutate(const SiltingObject& m, int block, Direction dir,
                     const TwistOptions& opt);

/// Outcome of a vanishing test Hom(M, N[n]) = 0 for all n >= 1 inside the
/// window; `witness` names the first nonzero cell when the test fails.
struct GeqResult {
    bool geq = false;
    std::string witness;
};

/// The silting order: M >= N when positive-shift maps from M to N vanish.
GeqResult silting_geq(const SiltingObject& m, const SiltingObject& n,
                      const TwistOptions& opt);

/// Self-test Hom(T, T[n]) = 0 for n >= 1 of the total object.
GeqResult presilting_check(const SiltingObject& m, const TwistOptions& opt);

enum class WordVerdict { Equal, Distinct, Unknown };

struct WordEqualityResult {
    WordVerdict verdict = WordVerdict::Unknown;
    std::string detail;
};

/// Decide equality of two braid words through the silting objects they
/// produce: equal words give isomorphic objects, and distinct objects
/// separate words conclusively.  Unknown is returned only when the
/// isomorphism search is inconclusive.
WordEqualityResult word_equality(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                 const BraidWord& w1, const BraidWord& w2,
                                 const TwistOptions& opt);

struct PosetNode {
    SiltingObject object;
    std::string provenance; ///< mutation path from the top, e.g. "mu_2 mu_1"
};

struct PosetEdge {
    int from = 0;
    int to = 0;
    int block = 0; ///< which block was mutated
};

struct SiltingPoset {
    std::vector<PosetNode> nodes;
    std::vector<PosetEdge> edges;
    std::string str() const;
};

/// Breadth-first search of the interval [Gamma, Gamma[n]] under iterated
/// irreducible left mutation, deduplicating nodes by invariant fingerprint
/// plus isomorphism check.  An inconclusive isomorphism check aborts with
/// an error naming the colliding objects; it never guesses.
SiltingPoset enumerate_interval(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                int n, const TwistOptions& opt,
                                int max_nodes = 500);

} // namespace gammaq
