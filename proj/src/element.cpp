// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/element.hpp"

#include "gammaq/errors.hpp"

namespace gammaq {

AlgebraElement AlgebraElement::of_path(Field f, const Path& p, const Scalar& c) {
    AlgebraElement e(f);
    e.add_term(p, c);
    return e;
}

AlgebraElement AlgebraElement::of_path(Field f, const Path& p) {
    return of_path(f, p, Scalar::one(f));
}

Scalar AlgebraElement::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Path& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(field_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(field_);
    if (c.is_zero()) return r;
    for (const auto& [p, k] : terms_) r.terms_.emplace(p, k * c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r(field_);
    for (const auto& [p, cp] : terms_)
        for (const auto& [q, cq] : o.terms_) {
            if (p.source != q.target) continue; // orthogonal idempotents
            Path pq;
            pq.source = q.source;
            pq.target = p.target;
            pq.degree = p.degree + q.degree;
            pq.weight = p.weight + q.weight;
            pq.letters = p.letters;
            pq.letters.insert(pq.letters.end(), q.letters.begin(), q.letters.end());
            r.add_term(pq, cp * cq);
        }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!path_equal(it->first, jt->first) || it->second != jt->second) return false;
    return true;
}

AlgebraElement AlgebraElement::differential(const DoubleQuiver& dq) const {
    AlgebraElement r(field_);
    for (const auto& [p, c] : terms_) {
        // Walk the letters left to right; the left part of the word is the
        // later-applied factor, so the Leibniz sign for position j is
        // (-1)^{degree of letters[0..j-1]}.
        int prefix_degree = 0;
        for (std::size_t j = 0; j < p.letters.size(); ++j) {
            const Letter& l = dq.letter(p.letters[j]);
            if (l.kind == LetterKind::Loop) {
                const bool negate = (prefix_degree % 2) != 0;
                for (const auto& [m, sign] : dq.loop_differential(l.source)) {
                    Path np;
                    np.source = p.source;
                    np.target = p.target;
                    np.degree = p.degree + 1; // one loop replaced by degree-0 word
                    np.weight = p.weight;
                    np.letters.reserve(p.letters.size() + 1);
                    np.letters.insert(np.letters.end(), p.letters.begin(),
                                      p.letters.begin() + static_cast<long>(j));
                    np.letters.insert(np.letters.end(), m.letters.begin(), m.letters.end());
                    np.letters.insert(np.letters.end(),
                                      p.letters.begin() + static_cast<long>(j) + 1,
                                      p.letters.end());
                    Scalar k = c * Scalar::of(field_, sign);
                    r.add_term(np, negate ? -k : k);
                }
            }
            prefix_degree += l.degree;
        }
    }
    return r;
}

std::optional<Homogeneity> AlgebraElement::homogeneity() const {
    if (terms_.empty()) return std::nullopt;
    const Path& first = terms_.begin()->first;
    Homogeneity h{first.degree, first.weight, first.source, first.target};
    for (const auto& [p, c] : terms_) {
        (void)c;
        if (p.degree != h.degree || p.weight != h.weight || p.source != h.source ||
            p.target != h.target)
            return std::nullopt;
    }
    return h;
}

std::optional<Homogeneity>
AlgebraElement::require_homogeneous(const std::string& context) const {
    if (terms_.empty()) return std::nullopt;
    auto h = homogeneity();
    if (!h)
        throw InvalidDataError("inhomogeneous element in " + context);
    return h;
}

std::string AlgebraElement::str(const DoubleQuiver& dq) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        std::string cs = c.str();
        if (!s.empty()) {
            if (!cs.empty() && cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (cs != "1") s += cs + "*";
        s += dq.path_str(p);
    }
    return s;
}

LeadingSplit split_leading(const DoubleQuiver& dq, const AlgebraElement& x) {
    LeadingSplit out(x.field());
    for (const auto& [p, c] : x.terms()) {
        if (p.trivial()) {
            out.trivial_part.add_term(p, c);
            continue;
        }
        const Letter& lead = dq.letter(p.letters[0]);
        Path rest;
        rest.source = p.source;
        rest.target = lead.source;
        rest.degree = p.degree - lead.degree;
        rest.weight = p.weight - lead.weight;
        rest.letters.assign(p.letters.begin() + 1, p.letters.end());
        auto it = out.by_letter.find(lead.id);
        if (it == out.by_letter.end())
            it = out.by_letter.emplace(lead.id, AlgebraElement(x.field())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

} // namespace gammaq
