// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/morphism.hpp"

#include "gammaq/errors.hpp"

namespace gammaq {

Morphism::Morphism(TwistedComplex source, TwistedComplex target, int degree, int weight)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree),
      weight_(weight), zero_(source_.field()) {
    if (source_.field() != target_.field())
        throw InvalidDataError("morphism between complexes over different fields");
}

void Morphism::check_entry(int r, int c, const AlgebraElement& value) const {
    if (r < 0 || r >= target_.size() || c < 0 || c >= source_.size())
        throw InvalidDataError("morphism entry index out of range");
    auto h = value.homogeneity();
    if (!h) {
        if (!value.is_zero())
            throw InvalidDataError("inhomogeneous morphism entry");
        return;
    }
    const Generator& gr = target_.generator(r);
    const Generator& gc = source_.generator(c);
    if (h->target != gr.vertex || h->source != gc.vertex)
        throw InvalidDataError("morphism entry endpoints do not match generators");
    if (h->degree != degree_ + gr.shift - gc.shift)
        throw InvalidDataError("morphism entry degree mismatch at (" +
                               std::to_string(r) + "," + std::to_string(c) + ")");
    if (h->weight != weight_ + gc.weight_offset - gr.weight_offset)
        throw InvalidDataError("morphism entry weight mismatch at (" +
                               std::to_string(r) + "," + std::to_string(c) + ")");
}

void Morphism::set_entry(int r, int c, const AlgebraElement& value) {
    check_entry(r, c, value);
    if (value.is_zero())
        entries_.erase({r, c});
    else
        entries_.insert_or_assign({r, c}, value);
}

void Morphism::add_entry(int r, int c, const AlgebraElement& value) {
    set_entry(r, c, entry(r, c) + value);
}

const AlgebraElement& Morphism::entry(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero_ : it->second;
}

Morphism Morphism::differential() const {
    Morphism out(source_, target_, degree_ + 1, weight_);
    const DoubleQuiver& dq = source_.dq();
    const bool odd_p = (degree_ % 2) != 0;
    for (int r = 0; r < target_.size(); ++r)
        for (int c = 0; c < source_.size(); ++c) {
            AlgebraElement acc = entry(r, c).differential(dq);
            if (target_.generator(r).shift % 2 != 0) acc = -acc;
            for (int s = 0; s < target_.size(); ++s) {
                const AlgebraElement& d = target_.delta(r, s);
                const AlgebraElement& u = entry(s, c);
                if (!d.is_zero() && !u.is_zero()) acc += d * u;
            }
            for (int s = 0; s < source_.size(); ++s) {
                const AlgebraElement& u = entry(r, s);
                const AlgebraElement& d = source_.delta(s, c);
                if (!u.is_zero() && !d.is_zero()) {
                    AlgebraElement ud = u * d;
                    acc = odd_p ? acc + ud : acc - ud;
                }
            }
            if (!acc.is_zero()) out.set_entry(r, c, acc);
        }
    return out;
}

Morphism Morphism::operator+(const Morphism& o) const {
    if (degree_ != o.degree_ || weight_ != o.weight_)
        throw InvalidDataError("adding morphisms of different degree or weight");
    Morphism out = *this;
    for (const auto& [rc, v] : o.entries_)
        out.add_entry(rc.first, rc.second, v);
    return out;
}

Morphism Morphism::operator-() const {
    Morphism out(source_, target_, degree_, weight_);
    for (const auto& [rc, v] : entries_)
        out.entries_.emplace(rc, -v);
    return out;
}

Morphism Morphism::scaled(const Scalar& c) const {
    Morphism out(source_, target_, degree_, weight_);
    if (c.is_zero()) return out;
    for (const auto& [rc, v] : entries_)
        out.entries_.emplace(rc, v.scaled(c));
    return out;
}

std::string Morphism::describe() const {
    return source_.describe() + " -> " + target_.describe() + " (degree " +
           std::to_string(degree_) + ", weight " + std::to_string(weight_) + ", " +
           std::to_string(entries_.size()) + " entries)";
}

Morphism compose(const Morphism& psi, const Morphism& phi) {
    Morphism out(phi.source(), psi.target(), psi.degree() + phi.degree(),
                 psi.weight() + phi.weight());
    for (int r = 0; r < psi.target().size(); ++r)
        for (int c = 0; c < phi.source().size(); ++c) {
            AlgebraElement acc(phi.source().field());
            for (int s = 0; s < psi.source().size(); ++s) {
                const AlgebraElement& a = psi.entry(r, s);
                const AlgebraElement& b = phi.entry(s, c);
                if (!a.is_zero() && !b.is_zero()) acc += a * b;
            }
            if (!acc.is_zero()) out.set_entry(r, c, acc);
        }
    return out;
}

TwistedComplex cone(const Morphism& phi) {
    if (phi.degree() != 0 || phi.weight() != 0)
        throw InvalidDataError("cone needs a degree-0, weight-0 morphism");
    if (!phi.is_closed())
        throw InvalidDataError("cone of a non-closed morphism");
    const TwistedComplex& m = phi.source();
    const TwistedComplex& n = phi.target();
    TwistedComplex out(m.dq_ptr(), m.field());
    for (const Generator& g : m.generators())
        out.add_generator(g.vertex, g.shift + 1, g.weight_offset);
    for (const Generator& g : n.generators())
        out.add_generator(g.vertex, g.shift, g.weight_offset);
    const int base = m.size();
    for (const auto& [rc, v] : m.delta_entries())
        out.set_delta(rc.first, rc.second, -v);
    for (const auto& [rc, v] : n.delta_entries())
        out.set_delta(base + rc.first, base + rc.second, v);
    for (const auto& [rc, v] : phi.entries())
        out.set_delta(base + rc.first, rc.second, v);
    return out;
}

TwistedComplex co_cone(const Morphism& phi) { return cone(phi).shifted(-1); }

} // namespace gammaq
