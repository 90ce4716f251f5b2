// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Words in the braid group attached to the underlying graph of the quiver:
// one generator per vertex, written "1 2 1" with an apostrophe for an
// inverse letter, as in "1 2 1'".  Besides parsing and printing this file
// offers free reduction, inverses, seeded random words, and a rewriting
// oracle for equality of positive words that uses only the defining moves
// of the presentation (commutations across non-edges and single-edge braid
// moves), independent of everything homological.

#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gammaq/quiver.hpp"

namespace gammaq {

struct BraidLetter {
    int vertex = 0;
    bool inverse = false;
    bool operator==(const BraidLetter& o) const {
        return vertex == o.vertex && inverse == o.inverse;
    }
};

struct BraidWord {
    std::vector<BraidLetter> letters;

    bool positive() const;
    std::size_t size() const { return letters.size(); }
    std::string str() const;
    bool operator==(const BraidWord& o) const { return letters == o.letters; }
};

/// Parse "1 2 1'" into a word; throws ConfigError on malformed input.  An
/// empty or all-whitespace string is the identity word.
BraidWord parse_braid_word(const std::string& text);

/// Throws ConfigError if some letter's vertex is not in the quiver.
void validate_word(const Quiver& q, const BraidWord& w);

/// The group inverse: reversed order, flipped signs.
BraidWord inverse_word(const BraidWord& w);

/// Cancel adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Concatenation a then b (b acts after a).
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// A uniformly random word of the given length; letters are inverted with
/// probability 1/2 when signed_letters is set.
BraidWord random_word(const Quiver& q, int length, bool signed_letters,
                      std::mt19937_64& rng);

/// All positive words of exactly the given length, in lexicographic order.
std::vector<BraidWord> positive_words(const Quiver& q, int length);

/// All positive words reachable from w by single applications of the
/// defining relations: swap adjacent letters at non-adjacent vertices, and
/// replace iji by jij across a single edge.  Words are encoded as vertex
/// sequences.  Only valid for positive w.
std::set<std::vector<int>> rewriting_class(const Quiver& q, const BraidWord& w);

/// Equality of positive words in the braid monoid, decided by rewriting
/// closure.  Conclusive for equal-length positive words because the
/// defining relations preserve length.
bool positive_words_braid_equal(const Quiver& q, const BraidWord& a,
                                const BraidWord& b);

} // namespace gammaq
