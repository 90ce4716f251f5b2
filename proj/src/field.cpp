// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/field.hpp"

#include <cstdlib>

namespace gammaq {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw ConfigError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 32))
        throw ConfigError("field modulus must fit in 32 bits");
    return Field{FieldKind::Prime, p};
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q")
        return rationals();
    if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("cannot parse field '" + text + "': expected Fp:<prime>");
        return prime(std::strtoull(digits.c_str(), nullptr, 10));
    }
    if (text == "Fp" || text == "fp")
        return prime(kDefaultPrime);
    throw ConfigError("cannot parse field '" + text + "': expected Q or Fp:<prime>");
}

std::string Field::describe() const {
    return kind == FieldKind::Rational ? "Q" : "Fp:" + std::to_string(p);
}

Scalar Scalar::of(const Field& f, long n) {
    Scalar s;
    if (f.kind == FieldKind::Rational) {
        s.kind_ = FieldKind::Rational;
        s.q_ = n;
    } else {
        s.kind_ = FieldKind::Prime;
        s.p_ = f.p;
        long r = n % static_cast<long>(f.p);
        if (r < 0) r += static_cast<long>(f.p);
        s.v_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty())
        throw ConfigError("empty scalar literal");
    if (f.kind == FieldKind::Rational) {
        Scalar s;
        s.kind_ = FieldKind::Rational;
        try {
            s.q_ = mpq_class(text);
        } catch (const std::invalid_argument&) {
            throw ConfigError("cannot parse rational scalar '" + text + "'");
        }
        s.q_.canonicalize();
        return s;
    }
    // Prime field: accept an optionally signed integer, reduced mod p.
    std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (pos == text.size() || text.find_first_not_of("0123456789", pos) != std::string::npos)
        throw ConfigError("cannot parse scalar '" + text + "' over " + f.describe());
    mpz_class z(text);
    mpz_class r = z % mpz_class(static_cast<unsigned long>(f.p));
    if (r < 0) r += static_cast<unsigned long>(f.p);
    return of(f, static_cast<long>(r.get_ui()));
}

bool Scalar::is_zero() const {
    return kind_ == FieldKind::Rational ? q_ == 0 : v_ == 0;
}

void Scalar::check_compatible(const Scalar& o) const {
    if (kind_ != o.kind_ || (kind_ == FieldKind::Prime && p_ != o.p_))
        throw InvalidDataError("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_compatible(o);
    Scalar s = *this;
    if (kind_ == FieldKind::Rational)
        s.q_ = q_ + o.q_;
    else
        s.v_ = (v_ + o.v_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_compatible(o);
    Scalar s = *this;
    if (kind_ == FieldKind::Rational)
        s.q_ = q_ * o.q_;
    else
        s.v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (kind_ == FieldKind::Rational)
        s.q_ = -q_;
    else
        s.v_ = v_ == 0 ? 0 : p_ - v_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw InvalidDataError("inverse of zero scalar");
    Scalar s = *this;
    if (kind_ == FieldKind::Rational)
        s.q_ = 1 / q_;
    else
        s.v_ = mod_pow(v_, p_ - 2, p_); // Fermat: p is prime
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == FieldKind::Rational) return q_ == o.q_;
    return p_ == o.p_ && v_ == o.v_;
}

std::string Scalar::str() const {
    return kind_ == FieldKind::Rational ? q_.get_str() : std::to_string(v_);
}

} // namespace gammaq
