// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gammaq/errors.hpp"

namespace gammaq {

/// Coefficient fields supported by the engine.  All arithmetic is exact:
/// rationals are GMP rationals, prime fields use modular arithmetic with a
/// word-sized prime.  There is no floating point anywhere in the library.
enum class FieldKind { Rational, Prime };

/// Description of a coefficient field.  Fields are lightweight value types;
/// scalars remember which field they belong to and refuse mixed arithmetic.
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0; ///< modulus, used only when kind == Prime

    static Field rationals() { return Field{FieldKind::Rational, 0}; }
    static Field prime(std::uint64_t p);

    /// Parse a field description as used on the command line: "Q" for the
    /// rationals, "Fp:<prime>" for a prime field (e.g. "Fp:32003").
    static Field parse(const std::string& text);

    /// Default prime used when a finite field is requested without an
    /// explicit modulus.  Chosen larger than every matrix dimension that
    /// occurs at the scales this engine targets, so that trace-form radical
    /// computations remain valid.
    static constexpr std::uint64_t kDefaultPrime = 32003;

    std::string describe() const;
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
};

/// An exact scalar: either a rational number or an element of F_p.  The
/// field is carried per value; operations on scalars from different fields
/// throw InvalidDataError.
class Scalar {
public:
    /// Default-constructed scalar is the rational zero.
    Scalar() : kind_(FieldKind::Rational), q_(0), v_(0), p_(0) {}

    static Scalar zero(const Field& f) { return of(f, 0); }
    static Scalar one(const Field& f) { return of(f, 1); }

    /// Embed a machine integer into the field.
    static Scalar of(const Field& f, long n);

    /// Parse "3", "-7/2" (rationals) or an integer residue (prime fields).
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const { return kind_ == FieldKind::Rational ? Field::rationals() : Field::prime(p_); }
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const; ///< throws InvalidDataError on zero
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical textual form: "p/q" with positive denominator over Q, the
    /// least nonnegative residue over F_p.  Used for JSON round-tripping.
    std::string str() const;

private:
    void check_compatible(const Scalar& o) const;

    FieldKind kind_;
    mpq_class q_;       // value when rational
    std::uint64_t v_;   // value when prime, 0 <= v_ < p_
    std::uint64_t p_;   // modulus when prime
};

} // namespace gammaq
