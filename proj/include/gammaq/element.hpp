// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <map>
#include <optional>
#include <string>

#include "gammaq/double_quiver.hpp"
#include "gammaq/field.hpp"

namespace gammaq {

/// Bidegree and endpoints of a homogeneous element.
struct Homogeneity {
    int degree = 0;
    int weight = 0;
    int source = 0;
    int target = 0;
    bool operator==(const Homogeneity& o) const {
        return degree == o.degree && weight == o.weight && source == o.source &&
               target == o.target;
    }
};

/// A finite K-linear combination of paths in the doubled quiver.  Terms are
/// kept in canonical path order with nonzero coefficients only, so equality
/// is term-by-term comparison.  Elements do not retain a pointer to their
/// quiver; operations that need structural data (differential, leading
/// letter splits) take the DoubleQuiver as an argument.
class AlgebraElement {
public:
    explicit AlgebraElement(Field f) : field_(f) {}

    static AlgebraElement zero(Field f) { return AlgebraElement(f); }
    static AlgebraElement of_path(Field f, const Path& p, const Scalar& c);
    static AlgebraElement of_path(Field f, const Path& p); ///< coefficient 1

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Path, Scalar, PathLess>& terms() const { return terms_; }
    Scalar coeff(const Path& p) const;

    void add_term(const Path& p, const Scalar& c); ///< accumulates, drops zeros

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& c) const;
    /// Algebra product in function order: right factor traversed first.
    /// Non-composable path pairs contribute zero.
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement& operator+=(const AlgebraElement& o) { *this = *this + o; return *this; }
    AlgebraElement& operator-=(const AlgebraElement& o) { *this = *this - o; return *this; }

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// The differential, extended from letters by the graded Leibniz rule
    /// d(x y) = d(x) y + (-1)^{deg x} x d(y).
    AlgebraElement differential(const DoubleQuiver& dq) const;

    /// Bidegree and endpoints if all terms agree; nullopt for zero or mixed
    /// elements.
    std::optional<Homogeneity> homogeneity() const;
    /// As above but throws InvalidDataError with the given context when the
    /// element is inhomogeneous (zero is allowed and returns nullopt).
    std::optional<Homogeneity> require_homogeneous(const std::string& context) const;

    std::string str(const DoubleQuiver& dq) const;

private:
    Field field_;
    std::map<Path, Scalar, PathLess> terms_;
};

/// Split of an element by its leading letter (letters[0], the one adjacent
/// to the target).  Terms that are idempotent paths land in trivial_part;
/// every other term p with leading letter l contributes its remainder (p
/// with l stripped) to by_letter[l].  So x = trivial_part +
/// sum_l letter_path(l) * by_letter[l].
struct LeadingSplit {
    AlgebraElement trivial_part;
    std::map<int, AlgebraElement> by_letter;
    explicit LeadingSplit(Field f) : trivial_part(f) {}
};

LeadingSplit split_leading(const DoubleQuiver& dq, const AlgebraElement& x);

} // namespace gammaq
