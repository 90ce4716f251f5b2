// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

#include "gammaq/twisted.hpp"

namespace gammaq {

/// Outcome of checking the standard resolution of a simple.
struct ResolutionReport {
    int vertex = 0;
    int weight_bound = 0;
    bool pass = false;
    long cells_checked = 0;
    std::vector<std::string> failures;
    std::string summary() const;
};

/// Verify that resolution_of_simple(vertex) deserves its name, cell by cell
/// for all weights up to weight_bound:
///
///   * the twisting matrix satisfies the structural conventions and the
///     Maurer-Cartan equation;
///   * the complex has one-dimensional cohomology in bidegree (0, 0) at
///     source vertex `vertex` and none anywhere else, i.e. it is
///     quasi-isomorphic to the simple module;
///   * its mapping complex into that simple has one-dimensional cohomology
///     in degrees 0 and 2 exactly.
ResolutionReport verify_simple_resolution(std::shared_ptr<const DoubleQuiver> dq,
                                          Field f, int vertex, int weight_bound);

} // namespace gammaq
