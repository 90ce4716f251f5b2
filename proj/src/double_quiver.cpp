// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/double_quiver.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

bool path_less(const Path& a, const Path& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.letters < b.letters;
}

bool path_equal(const Path& a, const Path& b) {
    return a.weight == b.weight && a.degree == b.degree && a.source == b.source &&
           a.target == b.target && a.letters == b.letters;
}

DoubleQuiver::DoubleQuiver(Quiver q) : quiver_(std::move(q)) {
    const auto& arrows = quiver_.arrows();
    // Letters in a fixed order: arrows, then duals, then loops.  Everything
    // downstream (path bases, matrix coordinates) inherits this order.
    for (std::size_t i = 0; i < arrows.size(); ++i)
        letters_.push_back(Letter{static_cast<int>(letters_.size()), LetterKind::Arrow,
                                  arrows[i].from, arrows[i].to, 0, 1, arrows[i].id});
    for (std::size_t i = 0; i < arrows.size(); ++i)
        letters_.push_back(Letter{static_cast<int>(letters_.size()), LetterKind::Dual,
                                  arrows[i].to, arrows[i].from, 0, 1, arrows[i].id + "*"});
    for (int v : quiver_.vertices()) {
        loop_of_vertex_[v] = static_cast<int>(letters_.size());
        letters_.push_back(Letter{static_cast<int>(letters_.size()), LetterKind::Loop,
                                  v, v, -1, 2, "t" + std::to_string(v)});
    }

    // d(t_v) = sum_{t(a)=v} a a* - sum_{s(b)=v} b* b.
    for (int v : quiver_.vertices()) {
        std::vector<std::pair<Path, int>> terms;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (arrows[i].to == v)
                terms.emplace_back(
                    compose(letter_path(arrow_letter(static_cast<int>(i))),
                            letter_path(dual_letter(static_cast<int>(i)))),
                    +1);
        }
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (arrows[i].from == v)
                terms.emplace_back(
                    compose(letter_path(dual_letter(static_cast<int>(i))),
                            letter_path(arrow_letter(static_cast<int>(i)))),
                    -1);
        }
        loop_diff_[v] = std::move(terms);
    }
}

int DoubleQuiver::arrow_letter(int arrow_index) const {
    if (arrow_index < 0 || arrow_index >= static_cast<int>(quiver_.arrows().size()))
        throw InvalidDataError("arrow index out of range");
    return arrow_index;
}

int DoubleQuiver::dual_letter(int arrow_index) const {
    if (arrow_index < 0 || arrow_index >= static_cast<int>(quiver_.arrows().size()))
        throw InvalidDataError("arrow index out of range");
    return arrow_index + static_cast<int>(quiver_.arrows().size());
}

int DoubleQuiver::loop_letter(int vertex) const {
    auto it = loop_of_vertex_.find(vertex);
    if (it == loop_of_vertex_.end())
        throw InvalidDataError("no loop letter: unknown vertex " + std::to_string(vertex));
    return it->second;
}

Path DoubleQuiver::trivial_path(int v) const {
    if (!quiver_.has_vertex(v))
        throw InvalidDataError("trivial path at unknown vertex " + std::to_string(v));
    Path p;
    p.source = p.target = v;
    return p;
}

Path DoubleQuiver::letter_path(int letter_id) const {
    const Letter& l = letter(letter_id);
    Path p;
    p.source = l.source;
    p.target = l.target;
    p.degree = l.degree;
    p.weight = l.weight;
    p.letters = {static_cast<std::uint16_t>(l.id)};
    return p;
}

Path DoubleQuiver::compose(const Path& p, const Path& q) const {
    if (p.source != q.target)
        throw InvalidDataError("composing non-composable paths: " + path_str(p) +
                               " * " + path_str(q));
    Path r;
    r.source = q.source;
    r.target = p.target;
    r.degree = p.degree + q.degree;
    r.weight = p.weight + q.weight;
    r.letters = p.letters;
    r.letters.insert(r.letters.end(), q.letters.begin(), q.letters.end());
    return r;
}

const std::vector<std::pair<Path, int>>& DoubleQuiver::loop_differential(int v) const {
    auto it = loop_diff_.find(v);
    if (it == loop_diff_.end())
        throw InvalidDataError("loop differential at unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<Path>& DoubleQuiver::paths_from(int source, int weight) const {
    // cache_mutex_ is held by the caller (slice).
    auto key = std::make_pair(source, weight);
    auto it = from_cache_.find(key);
    if (it != from_cache_.end()) return it->second;

    std::vector<Path> out;
    if (weight == 0) {
        out.push_back(trivial_path(source));
    } else if (weight > 0) {
        // Extend shorter paths by one letter on the target side.
        for (const Letter& l : letters_) {
            if (l.weight > weight) continue;
            for (const Path& p : paths_from(source, weight - l.weight)) {
                if (p.target != l.source) continue;
                Path r;
                r.source = p.source;
                r.target = l.target;
                r.degree = p.degree + l.degree;
                r.weight = weight;
                r.letters.reserve(p.letters.size() + 1);
                r.letters.push_back(static_cast<std::uint16_t>(l.id));
                r.letters.insert(r.letters.end(), p.letters.begin(), p.letters.end());
                out.push_back(std::move(r));
            }
        }
        std::sort(out.begin(), out.end(), path_less);
    }
    return from_cache_.emplace(key, std::move(out)).first->second;
}

const std::vector<Path>& DoubleQuiver::slice(int degree, int weight, int source,
                                             int target) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto key = std::make_tuple(degree, weight, source, target);
    auto it = slice_cache_.find(key);
    if (it != slice_cache_.end()) return it->second;

    std::vector<Path> out;
    if (weight >= 0) {
        for (const Path& p : paths_from(source, weight))
            if (p.degree == degree && p.target == target) out.push_back(p);
    }
    // paths_from is sorted, filtering preserves order
    return slice_cache_.emplace(key, std::move(out)).first->second;
}

int DoubleQuiver::index_in_slice(const Path& p) const {
    const auto& s = slice(p.degree, p.weight, p.source, p.target);
    auto it = std::lower_bound(s.begin(), s.end(), p, path_less);
    if (it == s.end() || !path_equal(*it, p))
        throw InvalidDataError("path not found in its slice: " + path_str(p));
    return static_cast<int>(it - s.begin());
}

std::string DoubleQuiver::path_str(const Path& p) const {
    if (p.trivial()) return "e" + std::to_string(p.source);
    std::string s;
    for (std::size_t i = 0; i < p.letters.size(); ++i) {
        if (i) s += ".";
        s += letter(p.letters[i]).name;
    }
    return s;
}

} // namespace gammaq
