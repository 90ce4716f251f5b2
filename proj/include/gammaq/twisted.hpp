// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// One-sided twisted complexes over the dg path algebra of the doubled
// quiver.  A twisted complex is a finite list of generators, each standing
// for a shifted projective e_v Gamma [shift] with a weight offset used for
// exact bookkeeping of internal gradings, plus a strictly lower-triangular
// (in the shift filtration) matrix delta of left-multiplication operators.
//
// Conventions, fixed once and used consistently everywhere:
//
//   * delta entry (r, c) is an element of e_{v_r} Gamma e_{v_c}; it maps
//     generator c to generator r by left multiplication.
//   * degree:  deg delta_rc = shift_r - shift_c + 1   (so closedness of the
//     total object makes sense with the shift-by-one twist),
//   * weight:  wt delta_rc = offset_c - offset_r      (weight homogeneity),
//   * Maurer-Cartan:  (-1)^{shift_r} d(delta_rs) + sum_c delta_rc delta_cs
//     = 0 for all (r, s).
//
// Since the algebra lives in degrees <= 0, the degree constraint forces
// shift_r < shift_c for every nonzero entry: the filtration condition holds
// automatically and is re-checked by validate().
//
// The shift functor [n] adds n to every generator shift and multiplies
// delta by (-1)^n.  Gaussian elimination of a scalar entry ("reduce")
// produces the minimal model, which is unique up to isomorphism.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gammaq/element.hpp"

namespace gammaq {

/// A generator e_vertex Gamma [shift] with a weight offset.  The offset does
/// not change the isomorphism type of the underlying object; it shifts the
/// internal weight grading so that all structure maps become weight
/// homogeneous, keeping every cohomology computation exact cell by cell.
struct Generator {
    int vertex = 0;
    int shift = 0;
    int weight_offset = 0;
    bool operator==(const Generator& o) const {
        return vertex == o.vertex && shift == o.shift && weight_offset == o.weight_offset;
    }
};

class TwistedComplex {
public:
    TwistedComplex(std::shared_ptr<const DoubleQuiver> dq, Field f);

    const DoubleQuiver& dq() const { return *dq_; }
    std::shared_ptr<const DoubleQuiver> dq_ptr() const { return dq_; }
    const Field& field() const { return field_; }

    int size() const { return static_cast<int>(gens_.size()); }
    bool empty() const { return gens_.empty(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int i) const { return gens_.at(static_cast<std::size_t>(i)); }

    /// Append a generator, returning its index.
    int add_generator(int vertex, int shift, int weight_offset = 0);

    /// Set the delta entry mapping generator c into generator r.  The
    /// element must be homogeneous with endpoints and bidegree matching the
    /// conventions above; violations throw InvalidDataError.
    void set_delta(int r, int c, const AlgebraElement& value);
    void add_delta(int r, int c, const AlgebraElement& value);
    /// Entry (r, c); a reference to a zero element if unset.
    const AlgebraElement& delta(int r, int c) const;
    const std::map<std::pair<int, int>, AlgebraElement>& delta_entries() const {
        return delta_;
    }

    /// Full structural check: entry conventions plus the Maurer-Cartan
    /// equation for every matrix position.  Throws InvalidDataError with the
    /// offending position on failure.
    void validate() const;

    /// The shift functor [n].
    TwistedComplex shifted(int n) const;

    /// Block-diagonal direct sum in the order given.
    static TwistedComplex direct_sum(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                     const std::vector<const TwistedComplex*>& parts);

    /// Restriction to a subset of generators (delta restricted accordingly).
    /// Only valid when no delta entry connects kept and dropped generators;
    /// used to split off direct summands, e.g. blocks of a silting object.
    TwistedComplex restricted(const std::vector<int>& kept_gens) const;

    std::string describe() const; ///< short human-readable summary

private:
    void check_entry(int r, int c, const AlgebraElement& value) const;

    std::shared_ptr<const DoubleQuiver> dq_;
    Field field_;
    std::vector<Generator> gens_;
    std::map<std::pair<int, int>, AlgebraElement> delta_;
    AlgebraElement zero_;
};

/// Result of Gaussian elimination: the reduced complex plus, for each
/// surviving generator, its index in the input complex.
struct ReduceResult {
    TwistedComplex complex;
    std::vector<int> kept;
};

/// Eliminate invertible scalar delta entries until none remain.  Pivots are
/// chosen deterministically (smallest column index, then smallest row
/// index).  The result has no scalar entries, i.e. is a minimal model of
/// the input; the isomorphism class of the input is preserved.
ReduceResult reduce(const TwistedComplex& t);

/// Uniform change of all weight offsets by m.  The isomorphism type is
/// unchanged and all delta entries stay weight homogeneous; this is the
/// "{m}" adjustment used when a shifted copy must make some fixed-weight
/// morphism weight homogeneous of weight zero.
TwistedComplex offset_shifted(const TwistedComplex& t, int m);

/// The dg algebra itself as the sum of its vertex projectives e_v Gamma,
/// one generator per vertex, zero delta.
TwistedComplex gamma_complex(std::shared_ptr<const DoubleQuiver> dq, Field f);

/// A single projective e_v Gamma [shift] with the given weight offset.
TwistedComplex projective_complex(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                  int vertex, int shift = 0, int weight_offset = 0);

/// The standard resolution of the simple at vertex i:
///
///   e_i[2]{2}  --->  sum_{a: t(a)=i} e_{s(a)}[1]{1}  (+)  sum_{b: s(b)=i} e_{t(b)}[1]{1}  --->  e_i[0]{0}
///
/// with delta entries -a* and +b out of the top generator, a and b* into
/// the bottom one, and the loop t_i straight from top to bottom.  Its only
/// cohomology against the simple at i sits in degrees 0 and 2.
TwistedComplex resolution_of_simple(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                    int vertex);

} // namespace gammaq
