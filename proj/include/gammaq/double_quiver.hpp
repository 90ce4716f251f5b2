// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// The dg path algebra of the doubled quiver.  For a quiver Q we form the
// graded quiver with the same vertices and, as generating letters,
//
//   * each arrow a of Q           (cohomological degree 0, weight 1),
//   * a reversed dual a* per arrow (degree 0, weight 1),
//   * a loop t_v at every vertex   (degree -1, weight 2).
//
// The differential vanishes on arrows and duals and sends the loop at v to
//
//   d(t_v)  =  sum_{a: t(a)=v} a a*  -  sum_{b: s(b)=v} b* b,
//
// extended to paths by the graded Leibniz rule.  Composition is written the
// function way: p * q means "first traverse q, then p", so e_{target} * p =
// p = p * e_{source}.  Paths store their letters in composition order:
// letters[0] is the letter adjacent to the target (applied last).

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gammaq/quiver.hpp"

namespace gammaq {

enum class LetterKind { Arrow, Dual, Loop };

/// One generating letter of the doubled quiver.
struct Letter {
    int id = 0; ///< index into DoubleQuiver::letters()
    LetterKind kind = LetterKind::Arrow;
    int source = 0;
    int target = 0;
    int degree = 0; ///< 0 for arrows and duals, -1 for loops
    int weight = 0; ///< 1 for arrows and duals, 2 for loops
    std::string name;
};

/// A composable word in the letters, with cached endpoints and bidegree.
/// The empty word at vertex v is the idempotent e_v (degree 0, weight 0).
/// letters[0] is applied last; letters.back() is applied first, so the
/// word's source is the source of letters.back() and its target the target
/// of letters[0].
struct Path {
    int source = 0;
    int target = 0;
    int degree = 0;
    int weight = 0;
    std::vector<std::uint16_t> letters;

    bool trivial() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
};

/// Canonical total order on paths: by weight, then degree, then source,
/// target, and finally the letter sequence.  Within one weight slice all
/// paths have equal length (length = weight + degree), so the letter
/// comparison is plain lexicographic.
bool path_less(const Path& a, const Path& b);

struct PathLess {
    bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};

bool path_equal(const Path& a, const Path& b);

/// The doubled quiver with its grading, plus memoized path enumeration.
/// All path bases handed out are canonically sorted, so matrix coordinates
/// are reproducible across runs.
class DoubleQuiver {
public:
    explicit DoubleQuiver(Quiver q);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(int id) const { return letters_.at(id); }

    int arrow_letter(int arrow_index) const;  ///< letter id of the arrow
    int dual_letter(int arrow_index) const;   ///< letter id of its dual
    int loop_letter(int vertex) const;        ///< letter id of t_vertex

    /// The idempotent path e_v.
    Path trivial_path(int v) const;
    /// The length-one path consisting of one letter.
    Path letter_path(int letter_id) const;
    /// Function-order composition: q is traversed first.  Throws
    /// InvalidDataError when source(p) != target(q).
    Path compose(const Path& p, const Path& q) const;

    /// d(t_v) as a signed sum of length-two paths: (a a*, +1) for arrows
    /// into v, (b* b, -1) for arrows out of v.
    const std::vector<std::pair<Path, int>>& loop_differential(int v) const;

    /// All paths with the given degree, weight, source and target, in
    /// canonical order.  Memoized; an empty slice is cached too.
    const std::vector<Path>& slice(int degree, int weight, int source, int target) const;
    /// Position of a path inside its slice.
    int index_in_slice(const Path& p) const;

    /// Human-readable path rendering, e.g. "a1_2*.t1" (composition order,
    /// left factor applied last) or "e3" for an idempotent.
    std::string path_str(const Path& p) const;

private:
    const std::vector<Path>& paths_from(int source, int weight) const;

    Quiver quiver_;
    std::vector<Letter> letters_;
    std::map<int, int> loop_of_vertex_;
    std::map<int, std::vector<std::pair<Path, int>>> loop_diff_;

    mutable std::mutex cache_mutex_;
    // per (source, weight): every path from that source of that weight
    mutable std::map<std::pair<int, int>, std::vector<Path>> from_cache_;
    mutable std::map<std::tuple<int, int, int, int>, std::vector<Path>> slice_cache_;
};

} // namespace gammaq
