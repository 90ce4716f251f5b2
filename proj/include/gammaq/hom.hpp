// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Mapping complexes between twisted complexes, computed weight by weight.
// Because generators carry weight offsets, every mapping complex splits as a
// direct sum of finite-dimensional subcomplexes indexed by (degree p, map
// weight w); each cell is computed exactly, with no truncation error inside
// a cell.  A weight window only bounds which cells are looked at.

#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "gammaq/matrix.hpp"
#include "gammaq/module.hpp"
#include "gammaq/morphism.hpp"

namespace gammaq {

/// One basis element of a mapping-complex cell: a single path placed at
/// matrix position (r, c) (target generator r, source generator c).
struct HomCoord {
    int r = 0;
    int c = 0;
    Path path;
};

/// Table of cohomology dimensions of a mapping complex over a rectangle of
/// cells.  Cells with dimension zero are omitted from the map.
struct HomTable {
    int pmin = 0, pmax = -1;
    int wmin = 0, wmax = -1;
    std::map<std::pair<int, int>, long> dims; // (degree, weight) -> dim

    long at(int p, int w) const;
    std::map<int, long> totals_by_degree() const;
    bool empty_in_degrees(int p_from, int p_to) const;
    bool operator==(const HomTable& o) const { return dims == o.dims; }
    std::string str() const;
};

/// The mapping complex Hom(M, N) of two twisted complexes, with caching of
/// cell bases, differentials, ranks and representative cocycles.  All
/// methods are safe to call from multiple threads.
class HomCells {
public:
    HomCells(TwistedComplex source, TwistedComplex target);

    const TwistedComplex& source() const { return source_; }
    const TwistedComplex& target() const { return target_; }

    const std::vector<HomCoord>& cell_basis(int p, int w) const;
    long cell_dim(int p, int w) const;
    /// Matrix of the differential from cell (p, w) to cell (p+1, w); rows
    /// index the target cell basis, columns the source cell basis.
    const ExactMatrix& differential_matrix(int p, int w) const;
    long rank(int p, int w) const;
    long h_dim(int p, int w) const;

    /// Representative cocycles for a basis of the degree-p, weight-w
    /// cohomology, as dense vectors in cell coordinates.
    const std::vector<std::vector<Scalar>>& h_vectors(int p, int w) const;
    /// The same representatives packaged as closed morphisms.
    std::vector<Morphism> h_basis(int p, int w) const;

    Morphism morphism_from_vector(int p, int w, const std::vector<Scalar>& v) const;
    std::vector<Scalar> vector_of_morphism(const Morphism& u) const;
    /// Coordinates of a closed cell vector's cohomology class with respect
    /// to h_vectors(p, w).  Throws InvalidDataError if the vector is not
    /// closed.
    std::vector<Scalar> class_coordinates(int p, int w,
                                          const std::vector<Scalar>& cocycle) const;

    /// Degrees outside this range have empty cells for every map weight in
    /// [wmin, wmax]; {0, -1} when either complex is empty.
    std::pair<int, int> structural_degree_range(int wmin, int wmax) const;

    HomTable table(int pmin, int pmax, int wmin, int wmax, int jobs = 1) const;

private:
    struct ClassData {
        ExactMatrix image_rref;                  // rref of the coboundary space
        std::vector<std::vector<Scalar>> h_vecs; // chosen representatives
        ClassData(Field f, int cols) : image_rref(f, 0, cols) {}
    };
    const ClassData& class_data(int p, int w) const;
    /// Basis of the closed vectors of cell (p, w), one per row; the full
    /// cell when the next cell is empty.  Eliminates each differential once.
    const ExactMatrix& kernel_matrix(int p, int w) const;
    /// Rref of the coboundary space inside cell (p, w).
    const ExactMatrix& image_matrix(int p, int w) const;

    TwistedComplex source_;
    TwistedComplex target_;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::vector<HomCoord>> basis_cache_;
    mutable std::map<std::pair<int, int>, ExactMatrix> diff_cache_;
    mutable std::map<std::pair<int, int>, ExactMatrix> kernel_cache_;
    mutable std::map<std::pair<int, int>, ExactMatrix> image_cache_;
    mutable std::map<std::pair<int, int>, ClassData> class_cache_;
};

/// Smallest map weight whose cell can be nonempty: entries are paths of
/// weight w + offset_src - offset_tgt >= 0, so below this bound every cell
/// of Hom(source, target) is empty.  Zero when either complex is empty.
int min_hom_weight(const TwistedComplex& source, const TwistedComplex& target);

/// Cohomology table of the mapping complex from a twisted complex into an
/// explicit right module, over the same kind of cell rectangle.
HomTable module_hom_table(const TwistedComplex& source, const RightModule& target,
                          int pmin, int pmax, int wmin, int wmax);

/// Total dimensions of Hom(M, simple at j) per (vertex j, degree p), summed
/// over all map weights.  This needs no window: against a simple module the
/// cells are supported on finitely many weights determined by the generator
/// offsets.  The profile is invariant under Gaussian elimination and under
/// changing weight offsets, which makes it the workhorse invariant for
/// separating non-isomorphic complexes and certifying reductions.
std::map<std::pair<int, int>, long> simples_profile(const TwistedComplex& m);

} // namespace gammaq
