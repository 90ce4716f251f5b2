// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/module.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

RightModule::RightModule(std::shared_ptr<const DoubleQuiver> dq, Field f)
    : dq_(std::move(dq)), field_(f) {
    if (!dq_) throw InvalidDataError("module needs a doubled quiver");
}

int RightModule::add_basis_vector(int vertex, int degree, int weight, std::string name) {
    if (!dq_->quiver().has_vertex(vertex))
        throw InvalidDataError("module basis vector at unknown vertex");
    basis_.push_back(BasisVec{vertex, degree, weight, std::move(name)});
    action_.emplace_back();
    diff_.emplace_back();
    return static_cast<int>(basis_.size()) - 1;
}

void RightModule::set_action(int b, int letter_id, Vec image) {
    action_.at(static_cast<std::size_t>(b))[letter_id] = std::move(image);
}

void RightModule::set_differential(int b, Vec image) {
    diff_.at(static_cast<std::size_t>(b)) = std::move(image);
}

RightModule::Vec RightModule::act_letter(int b, int letter_id) const {
    const auto& acts = action_.at(static_cast<std::size_t>(b));
    auto it = acts.find(letter_id);
    return it == acts.end() ? Vec{} : it->second;
}

RightModule::Vec RightModule::add(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Scalar s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

RightModule::Vec RightModule::scale(const Vec& a, const Scalar& c) {
    Vec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [i, s] : a) out.emplace_back(i, s * c);
    return out;
}

RightModule::Vec RightModule::act_path(const Vec& v, const Path& p) const {
    // v . (l_0 l_1 ... l_k) = ((v . l_0) . l_1) ... applied in storage
    // order, since letters[0] is the left (last-traversed) factor.
    Vec cur = v;
    for (std::uint16_t lid : p.letters) {
        Vec next;
        for (const auto& [b, c] : cur)
            next = add(next, scale(act_letter(b, lid), c));
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return cur;
}

RightModule::Vec RightModule::act_element(const Vec& v, const AlgebraElement& x) const {
    Vec out;
    for (const auto& [p, c] : x.terms())
        out = add(out, scale(act_path(v, p), c));
    return out;
}

RightModule::Vec RightModule::differential(const Vec& v) const {
    Vec out;
    for (const auto& [b, c] : v)
        out = add(out, scale(diff_.at(static_cast<std::size_t>(b)), c));
    return out;
}

RightModule RightModule::simple(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                int vertex) {
    RightModule m(std::move(dq), f);
    m.add_basis_vector(vertex, 0, 0, "s" + std::to_string(vertex));
    return m;
}

} // namespace gammaq
