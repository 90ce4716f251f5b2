// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

#include "gammaq/errors.hpp"

namespace gammaq {

/// A single arrow of a quiver.  Arrows carry a textual id used in element
/// printing and in JSON files; ids must be unique within a quiver.
struct Arrow {
    std::string id;
    int from = 0;
    int to = 0;
};

/// A finite quiver without oriented cycles and without loops.  Vertices are
/// integers (any values, kept in sorted order); arrows are ordered as given,
/// which fixes the ordering of all derived data (dual arrows, loop letters,
/// path bases), making every computation deterministic.
class Quiver {
public:
    Quiver(std::vector<int> vertices, std::vector<Arrow> arrows,
           std::string name = "");

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& name() const { return name_; }

    bool has_vertex(int v) const;
    /// Number of arrows between the pair {i, j}, in either direction.
    int arrows_between(int i, int j) const;

    /// Linear orientation of an A_n diagram: 1 -> 2 -> ... -> n.
    static Quiver type_a(int n);
    /// D_n with the fork at vertex 3: 1 -> 3 <- 2, 3 -> 4 -> ... -> n.
    static Quiver type_d(int n);
    /// E_n (n = 6, 7, 8): chain 1 -> 2 -> ... -> (n-1) plus arrow n -> 3.
    static Quiver type_e(int n);
    /// Two vertices joined by m parallel arrows 1 -> 2.
    static Quiver kronecker(int m);

private:
    std::vector<int> vertices_;
    std::vector<Arrow> arrows_;
    std::string name_;
};

} // namespace gammaq
