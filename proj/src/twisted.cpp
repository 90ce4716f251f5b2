// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/twisted.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

TwistedComplex::TwistedComplex(std::shared_ptr<const DoubleQuiver> dq, Field f)
    : dq_(std::move(dq)), field_(f), zero_(f) {
    if (!dq_) throw InvalidDataError("twisted complex needs a doubled quiver");
}

int TwistedComplex::add_generator(int vertex, int shift, int weight_offset) {
    if (!dq_->quiver().has_vertex(vertex))
        throw InvalidDataError("generator at unknown vertex " + std::to_string(vertex));
    gens_.push_back(Generator{vertex, shift, weight_offset});
    return static_cast<int>(gens_.size()) - 1;
}

void TwistedComplex::check_entry(int r, int c, const AlgebraElement& value) const {
    if (r < 0 || r >= size() || c < 0 || c >= size())
        throw InvalidDataError("delta index out of range");
    if (r == c && !value.is_zero())
        throw InvalidDataError("nonzero diagonal delta entry");
    auto h = value.homogeneity();
    if (!h) {
        if (!value.is_zero())
            throw InvalidDataError("inhomogeneous delta entry");
        return;
    }
    const Generator& gr = gens_[static_cast<std::size_t>(r)];
    const Generator& gc = gens_[static_cast<std::size_t>(c)];
    if (h->target != gr.vertex || h->source != gc.vertex)
        throw InvalidDataError("delta entry endpoints do not match generators");
    if (h->degree != gr.shift - gc.shift + 1)
        throw InvalidDataError("delta entry degree mismatch at (" + std::to_string(r) +
                               "," + std::to_string(c) + ")");
    if (h->weight != gc.weight_offset - gr.weight_offset)
        throw InvalidDataError("delta entry weight mismatch at (" + std::to_string(r) +
                               "," + std::to_string(c) + ")");
}

void TwistedComplex::set_delta(int r, int c, const AlgebraElement& value) {
    check_entry(r, c, value);
    if (value.is_zero())
        delta_.erase({r, c});
    else
        delta_.insert_or_assign({r, c}, value);
}

void TwistedComplex::add_delta(int r, int c, const AlgebraElement& value) {
    set_delta(r, c, delta(r, c) + value);
}

const AlgebraElement& TwistedComplex::delta(int r, int c) const {
    auto it = delta_.find({r, c});
    return it == delta_.end() ? zero_ : it->second;
}

void TwistedComplex::validate() const {
    for (const auto& [rc, value] : delta_) {
        check_entry(rc.first, rc.second, value);
        // Degrees <= 0 force a strictly decreasing shift filtration.
        if (gens_[static_cast<std::size_t>(rc.first)].shift >=
            gens_[static_cast<std::size_t>(rc.second)].shift)
            throw InvalidDataError("delta entry does not decrease the shift filtration");
    }
    // Maurer-Cartan at every position (r, s).
    for (int r = 0; r < size(); ++r)
        for (int s = 0; s < size(); ++s) {
            AlgebraElement acc = delta(r, s).differential(*dq_);
            if (gens_[static_cast<std::size_t>(r)].shift % 2 != 0) acc = -acc;
            for (int c = 0; c < size(); ++c) {
                const AlgebraElement& rc = delta(r, c);
                const AlgebraElement& cs = delta(c, s);
                if (rc.is_zero() || cs.is_zero()) continue;
                acc += rc * cs;
            }
            if (!acc.is_zero())
                throw InvalidDataError("Maurer-Cartan equation fails at (" +
                                       std::to_string(r) + "," + std::to_string(s) +
                                       "): " + acc.str(*dq_));
        }
}

TwistedComplex TwistedComplex::shifted(int n) const {
    TwistedComplex out(dq_, field_);
    for (const Generator& g : gens_)
        out.add_generator(g.vertex, g.shift + n, g.weight_offset);
    const bool flip = (n % 2) != 0;
    for (const auto& [rc, value] : delta_)
        out.set_delta(rc.first, rc.second, flip ? -value : value);
    return out;
}

TwistedComplex TwistedComplex::direct_sum(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                          const std::vector<const TwistedComplex*>& parts) {
    TwistedComplex out(std::move(dq), f);
    int base = 0;
    for (const TwistedComplex* part : parts) {
        for (const Generator& g : part->gens_)
            out.add_generator(g.vertex, g.shift, g.weight_offset);
        for (const auto& [rc, value] : part->delta_)
            out.set_delta(base + rc.first, base + rc.second, value);
        base += part->size();
    }
    return out;
}

TwistedComplex TwistedComplex::restricted(const std::vector<int>& kept_gens) const {
    std::vector<int> new_index(static_cast<std::size_t>(size()), -1);
    TwistedComplex out(dq_, field_);
    for (int old : kept_gens) {
        const Generator& g = gens_.at(static_cast<std::size_t>(old));
        new_index[static_cast<std::size_t>(old)] =
            out.add_generator(g.vertex, g.shift, g.weight_offset);
    }
    for (const auto& [rc, value] : delta_) {
        const int nr = new_index[static_cast<std::size_t>(rc.first)];
        const int nc = new_index[static_cast<std::size_t>(rc.second)];
        if (nr >= 0 && nc >= 0) {
            out.set_delta(nr, nc, value);
        } else if (nr >= 0 || nc >= 0) {
            throw InvalidDataError("restriction would cut a delta entry; "
                                   "the kept generators are not a direct summand");
        }
    }
    return out;
}

std::string TwistedComplex::describe() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ", ";
        const Generator& g = gens_[static_cast<std::size_t>(i)];
        s += "e" + std::to_string(g.vertex) + "[" + std::to_string(g.shift) + "]";
        if (g.weight_offset) s += "{" + std::to_string(g.weight_offset) + "}";
    }
    return s + "]";
}

ReduceResult reduce(const TwistedComplex& t) {
    TwistedComplex cur = t;
    std::vector<int> orig(static_cast<std::size_t>(t.size()));
    for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = static_cast<int>(i);

    for (;;) {
        // Pivot: entry that is a nonzero multiple of an idempotent path,
        // smallest column first, then smallest row.
        int pr = -1, pc = -1;
        for (const auto& [rc, value] : cur.delta_entries()) {
            if (value.term_count() != 1) continue;
            if (!value.terms().begin()->first.trivial()) continue;
            const int r = rc.first, c = rc.second;
            if (pc < 0 || c < pc || (c == pc && r < pr)) {
                pr = r;
                pc = c;
            }
        }
        if (pc < 0) break;

        const Scalar lambda = cur.delta(pr, pc).terms().begin()->second;
        const Scalar lambda_inv = lambda.inverse();

        TwistedComplex next(cur.dq_ptr(), cur.field());
        std::vector<int> new_index(static_cast<std::size_t>(cur.size()), -1);
        std::vector<int> next_orig;
        for (int i = 0; i < cur.size(); ++i) {
            if (i == pr || i == pc) continue;
            const Generator& g = cur.generator(i);
            new_index[static_cast<std::size_t>(i)] =
                next.add_generator(g.vertex, g.shift, g.weight_offset);
            next_orig.push_back(orig[static_cast<std::size_t>(i)]);
        }
        // delta'_ab = delta_ab - delta_ac lambda^{-1} delta_rb
        for (int a = 0; a < cur.size(); ++a) {
            if (a == pr || a == pc) continue;
            for (int b = 0; b < cur.size(); ++b) {
                if (b == pr || b == pc) continue;
                AlgebraElement v = cur.delta(a, b);
                const AlgebraElement& ac = cur.delta(a, pc);
                const AlgebraElement& rb = cur.delta(pr, b);
                if (!ac.is_zero() && !rb.is_zero())
                    v -= (ac * rb).scaled(lambda_inv);
                if (!v.is_zero())
                    next.set_delta(new_index[static_cast<std::size_t>(a)],
                                   new_index[static_cast<std::size_t>(b)], v);
            }
        }
        cur = std::move(next);
        orig = std::move(next_orig);
    }
    return ReduceResult{std::move(cur), std::move(orig)};
}

TwistedComplex offset_shifted(const TwistedComplex& t, int m) {
    TwistedComplex out(t.dq_ptr(), t.field());
    for (const Generator& g : t.generators())
        out.add_generator(g.vertex, g.shift, g.weight_offset + m);
    for (const auto& [rc, val] : t.delta_entries())
        out.set_delta(rc.first, rc.second, val);
    return out;
}

TwistedComplex gamma_complex(std::shared_ptr<const DoubleQuiver> dq, Field f) {
    TwistedComplex out(dq, f);
    for (int v : out.dq().quiver().vertices()) out.add_generator(v, 0, 0);
    return out;
}

TwistedComplex projective_complex(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                  int vertex, int shift, int weight_offset) {
    TwistedComplex out(dq, f);
    out.add_generator(vertex, shift, weight_offset);
    return out;
}

TwistedComplex resolution_of_simple(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                    int vertex) {
    TwistedComplex out(dq, f);
    const DoubleQuiver& d = out.dq();
    const auto& arrows = d.quiver().arrows();

    const int top = out.add_generator(vertex, 2, 2);
    std::vector<std::pair<int, int>> middle; // (generator, arrow index), ins then outs
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].to == vertex)
            middle.emplace_back(out.add_generator(arrows[i].from, 1, 1),
                                static_cast<int>(i));
    const std::size_t num_in = middle.size();
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].from == vertex)
            middle.emplace_back(out.add_generator(arrows[i].to, 1, 1),
                                static_cast<int>(i));
    const int bot = out.add_generator(vertex, 0, 0);

    for (std::size_t k = 0; k < middle.size(); ++k) {
        const auto [gen, ai] = middle[k];
        AlgebraElement arrow = AlgebraElement::of_path(f, d.letter_path(d.arrow_letter(ai)));
        AlgebraElement dual = AlgebraElement::of_path(f, d.letter_path(d.dual_letter(ai)));
        if (k < num_in) {
            // incoming arrow a: top -> e_{s(a)} via -a*, then down via a
            out.set_delta(gen, top, -dual);
            out.set_delta(bot, gen, arrow);
        } else {
            // outgoing arrow b: top -> e_{t(b)} via +b, then down via b*
            out.set_delta(gen, top, arrow);
            out.set_delta(bot, gen, dual);
        }
    }
    out.set_delta(bot, top,
                  AlgebraElement::of_path(f, d.letter_path(d.loop_letter(vertex))));
    out.validate();
    return out;
}

} // namespace gammaq
