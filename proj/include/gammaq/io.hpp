// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Configuration, parsing and serialization.  JSON is the single persistence
// format (quivers, twisted complexes, poset slices, reports); DOT output is
// export-only.  All exports are deterministic byte for byte for identical
// inputs, so golden-file tests and re-exports are stable.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammaq/field.hpp"
#include "gammaq/quiver.hpp"
#include "gammaq/silting.hpp"
#include "gammaq/tensor.hpp"
#include "gammaq/twisted.hpp"

namespace gammaq {

using ordered_json = nlohmann::ordered_json;

/// Library version, embedded in every report for reproducibility.
inline constexpr const char* kVersion = "1.0.0";

/// Run-wide options assembled from command-line flags.  `validate` enforces
/// the invariants every computation relies on: the weight window must be at
/// least 4 (below that even the defining resolutions do not fit), the degree
/// window must contain [-2, 2] (where the spherical cohomology lives), and
/// the parallelism degree must be positive.
struct RunConfig {
    std::string quiver_text = "A2";
    std::string field_text = "Q";
    int weight_bound = 10;
    int degree_min = -6;
    int degree_max = 6;
    int jobs = 1;

    void validate() const; ///< throws ConfigError on violated invariants

    Field field() const;   ///< parsed field mode
    Quiver quiver() const; ///< parsed quiver description
    TwistOptions twist_options() const;

    /// The configuration facts embedded in reports: quiver text, field
    /// mode, weight bound, degree window, parallelism and version.
    ordered_json describe() const;
};

/// Parse "lo:hi" into a degree window; throws ConfigError on bad syntax or
/// lo > hi.
std::pair<int, int> parse_degree_window(const std::string& text);

/// Parse a quiver description.  Accepted forms:
///
///   * a built-in name: "A3", "D4", "E6", "Kronecker2" (or "Kronecker(2)");
///   * an arrow list: "1->2, 2->3" (chains like "1->2->3" also work);
///   * inline JSON (first character '{') with the schema written by
///     quiver_to_json;
///   * a path ending in ".json" naming a file with that schema.
///
/// The result is validated (loop-free, acyclic, unique ids); every failure
/// throws ConfigError, with a character position for syntax errors.
Quiver parse_quiver(const std::string& input);

ordered_json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const ordered_json& j);

/// Twisted complexes as JSON: the generator list plus the nonzero delta
/// entries, each a sum of (coefficient, path) terms with paths spelled as
/// letter-name arrays in composition order (first name applied last).  The
/// inverse reconstructs and validates the complex over the given algebra.
ordered_json complex_to_json(const TwistedComplex& t);
TwistedComplex complex_from_json(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                 const ordered_json& j);

/// The class of a twisted complex in the Grothendieck group: one coordinate
/// per quiver vertex (in sorted vertex order), each generator contributing
/// (-1)^shift at its vertex.
std::vector<long> g_vector(const TwistedComplex& t);
std::string g_vector_str(const SiltingObject& m); ///< per block, e.g. "(1,0),(0,-1)"

/// Deterministic DOT rendering of an enumerated poset slice.  Nodes are
/// labeled with the provenance word from the top (the top itself is
/// labeled with the algebra's letter) and the per-block g-vectors; edges
/// carry the mutated block.
std::string poset_dot(const SiltingPoset& p);

/// Full JSON serialization of a poset slice: nodes with provenance,
/// g-vectors and complete block complexes, plus the mutation edges.
ordered_json poset_to_json(const SiltingPoset& p);

/// Bigraded cohomology dimensions of the dg path algebra itself, summed
/// over endpoint pairs, for all weights up to the bound: support of the
/// `cohomology` CLI verb.  Degree 0 rows reproduce the preprojective
/// algebra dimension by dimension.
std::map<std::pair<int, int>, long> algebra_cohomology(
    std::shared_ptr<const DoubleQuiver> dq, Field f, int weight_bound);

/// Read a whole file; throws ConfigError when it cannot be opened.
std::string read_text_file(const std::string& path);
/// Write a whole file; throws ConfigError when it cannot be written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace gammaq
