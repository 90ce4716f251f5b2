// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/tensor.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/hom.hpp"
#include "gammaq/morphism.hpp"

namespace gammaq {

namespace {

// Arrows touching vertex i, as letter ids of the double quiver.
struct TouchingArrows {
    std::vector<int> in_arrow, in_dual;   // alpha with t(alpha) = i
    std::vector<int> out_arrow, out_dual; // beta with s(beta) = i
};

TouchingArrows touching_arrows(const DoubleQuiver& dq, int i) {
    TouchingArrows out;
    const auto& arrows = dq.quiver().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].to == i) {
            out.in_arrow.push_back(dq.arrow_letter(static_cast<int>(a)));
            out.in_dual.push_back(dq.dual_letter(static_cast<int>(a)));
        }
        if (arrows[a].from == i) {
            out.out_arrow.push_back(dq.arrow_letter(static_cast<int>(a)));
            out.out_dual.push_back(dq.dual_letter(static_cast<int>(a)));
        }
    }
    return out;
}

// Where an old generator went: either kept as `plain`, or replaced by a
// top generator and one slot per arrow touching i.
struct GenImage {
    bool substituted = false;
    int plain = -1;
    int top = -1;
    std::vector<int> a_slots; // indexed like TouchingArrows::in_*
    std::vector<int> b_slots; // indexed like TouchingArrows::out_*
};

struct HomClass {
    int degree = 0;
    int weight = 0;
    std::vector<Scalar> vec; // cell coordinates of the representative
};

// All cohomology classes of the mapping complex with map weight inside
// [min_map_weight, window]; below that bound every cell is empty.
std::vector<HomClass> collect_classes(const HomCells& cells, int window) {
    std::vector<HomClass> out;
    const int wlo = min_hom_weight(cells.source(), cells.target());
    auto [pmin, pmax] = cells.structural_degree_range(wlo, window);
    for (int p = pmin; p <= pmax; ++p)
        for (int w = wlo; w <= window; ++w) {
            if (cells.h_dim(p, w) == 0) continue; // rank-only, skips the rref
            for (const auto& v : cells.h_vectors(p, w))
                out.push_back(HomClass{p, w, v});
        }
    return out;
}

} // namespace

TwistedComplex tensor_plus(const TwistedComplex& t, int i) {
    const DoubleQuiver& dq = t.dq();
    if (!dq.quiver().has_vertex(i))
        throw ConfigError("twist at unknown vertex " + std::to_string(i));
    const Field f = t.field();
    const TouchingArrows touch = touching_arrows(dq, i);
    const Path loop = dq.letter_path(dq.loop_letter(i));

    TwistedComplex out(t.dq_ptr(), f);
    std::vector<GenImage> image(static_cast<std::size_t>(t.size()));
    for (int c = 0; c < t.size(); ++c) {
        const Generator& g = t.generator(c);
        GenImage& im = image[static_cast<std::size_t>(c)];
        if (g.vertex != i) {
            im.plain = out.add_generator(g.vertex, g.shift, g.weight_offset);
            continue;
        }
        im.substituted = true;
        im.top = out.add_generator(i, g.shift + 1, g.weight_offset + 2);
        for (int al : touch.in_arrow)
            im.a_slots.push_back(out.add_generator(dq.letter(al).source, g.shift,
                                                   g.weight_offset + 1));
        for (int bl : touch.out_arrow)
            im.b_slots.push_back(out.add_generator(dq.letter(bl).target, g.shift,
                                                   g.weight_offset + 1));
    }

    // Internal twisting of each substituted generator: out of the top copy,
    // (-1)^shift alpha* into the alpha slot and -(-1)^shift beta into the
    // beta slot.
    const Scalar one = Scalar::one(f);
    for (int c = 0; c < t.size(); ++c) {
        const GenImage& im = image[static_cast<std::size_t>(c)];
        if (!im.substituted) continue;
        const int n = t.generator(c).shift;
        const Scalar sign = (n % 2 == 0) ? one : -one;
        for (std::size_t k = 0; k < im.a_slots.size(); ++k)
            out.add_delta(im.a_slots[k], im.top,
                          AlgebraElement::of_path(f, dq.letter_path(touch.in_dual[k]),
                                                  sign));
        for (std::size_t k = 0; k < im.b_slots.size(); ++k)
            out.add_delta(im.b_slots[k], im.top,
                          AlgebraElement::of_path(f, dq.letter_path(touch.out_arrow[k]),
                                                  -sign));
    }

    // Rewrite the old entries: right-multiply across a substituted source,
    // then decompose by the leading letter across a substituted target.
    auto place = [&](int old_r, int new_c, const AlgebraElement& x) {
        if (x.is_zero()) return;
        const GenImage& imr = image[static_cast<std::size_t>(old_r)];
        if (!imr.substituted) {
            out.add_delta(imr.plain, new_c, x);
            return;
        }
        LeadingSplit split = split_leading(dq, x);
        if (!split.trivial_part.is_zero())
            throw InvalidDataError(
                "substitution produced an idempotent component at vertex " +
                std::to_string(i));
        for (const auto& [letter, rest] : split.by_letter) {
            if (letter == dq.loop_letter(i)) {
                out.add_delta(imr.top, new_c, rest);
                continue;
            }
            bool placed = false;
            for (std::size_t k = 0; k < touch.in_arrow.size() && !placed; ++k)
                if (letter == touch.in_arrow[k]) {
                    out.add_delta(imr.a_slots[k], new_c, rest);
                    placed = true;
                }
            for (std::size_t k = 0; k < touch.out_dual.size() && !placed; ++k)
                if (letter == touch.out_dual[k]) {
                    out.add_delta(imr.b_slots[k], new_c, rest);
                    placed = true;
                }
            if (!placed)
                throw InvalidDataError("leading letter with target " +
                                       std::to_string(i) + " not recognised");
        }
    };

    for (const auto& [rc, val] : t.delta_entries()) {
        const auto [r, c] = rc;
        const GenImage& imc = image[static_cast<std::size_t>(c)];
        if (!imc.substituted) {
            place(r, imc.plain, val);
            continue;
        }
        place(r, imc.top, val * AlgebraElement::of_path(f, loop));
        for (std::size_t k = 0; k < imc.a_slots.size(); ++k)
            place(r, imc.a_slots[k],
                  val * AlgebraElement::of_path(f, dq.letter_path(touch.in_arrow[k])));
        for (std::size_t k = 0; k < imc.b_slots.size(); ++k)
            place(r, imc.b_slots[k],
                  val * AlgebraElement::of_path(f, dq.letter_path(touch.out_dual[k])));
    }

    out.validate();
    return out;
}

TwistResult tensor_minus(const TwistedComplex& t, int i, const TwistOptions& opt) {
    const Field f = t.field();
    TwistedComplex p = resolution_of_simple(t.dq_ptr(), f, i);
    std::string attempts;
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
        const int window = opt.weight_bound + attempt * opt.widen_step;
        HomCells cells(p, t);
        std::vector<HomClass> classes = collect_classes(cells, window);

        // Evaluation cone: one copy of the resolution per class, shifted
        // and offset so its class map becomes a plain degree-0 weight-0
        // component.
        std::vector<TwistedComplex> copies;
        copies.reserve(classes.size());
        for (const HomClass& cl : classes)
            copies.push_back(offset_shifted(p.shifted(-cl.degree), cl.weight));
        std::vector<const TwistedComplex*> parts;
        parts.reserve(copies.size());
        for (const TwistedComplex& c : copies) parts.push_back(&c);
        TwistedComplex source = TwistedComplex::direct_sum(t.dq_ptr(), f, parts);

        Morphism phi(source, t, 0, 0);
        int col_base = 0;
        for (std::size_t k = 0; k < classes.size(); ++k) {
            Morphism rep = cells.morphism_from_vector(classes[k].degree,
                                                      classes[k].weight,
                                                      classes[k].vec);
            for (const auto& [rc, val] : rep.entries())
                phi.add_entry(rc.first, col_base + rc.second, val);
            col_base += p.size();
        }

        TwistedComplex candidate = reduce(cone(phi)).complex;
        TwistedComplex back = reduce(tensor_plus(candidate, i)).complex;
        IsoResult cert = equal_upto_iso(back, t);
        if (cert.verdict == IsoVerdict::Equal)
            return TwistResult{std::move(candidate), window, attempt};
        attempts += "\n  window " + std::to_string(window) + ": " + cert.detail;
    }
    throw WindowError("inverse twist at vertex " + std::to_string(i) +
                      " failed its round-trip certificate at every window" + attempts);
}

TwistedComplex dual_twist_direct(const TwistedComplex& t, int i,
                                 const TwistOptions& opt) {
    const Field f = t.field();
    TwistedComplex p = resolution_of_simple(t.dq_ptr(), f, i);
    HomCells cells(t, p);
    std::vector<HomClass> classes = collect_classes(cells, opt.weight_bound);

    // Coevaluation co-cone: copies of the resolution on the target side.
    std::vector<TwistedComplex> copies;
    copies.reserve(classes.size());
    for (const HomClass& cl : classes)
        copies.push_back(offset_shifted(p.shifted(cl.degree), -cl.weight));
    std::vector<const TwistedComplex*> parts;
    parts.reserve(copies.size());
    for (const TwistedComplex& c : copies) parts.push_back(&c);
    TwistedComplex target = TwistedComplex::direct_sum(t.dq_ptr(), f, parts);

    Morphism phi(t, target, 0, 0);
    int row_base = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        Morphism rep = cells.morphism_from_vector(classes[k].degree,
                                                  classes[k].weight,
                                                  classes[k].vec);
        for (const auto& [rc, val] : rep.entries())
            phi.add_entry(row_base + rc.first, rc.second, val);
        row_base += p.size();
    }

    return reduce(co_cone(phi)).complex;
}

TwistedComplex apply_twist(const TwistedComplex& t, int i, bool inverse,
                           const TwistOptions& opt) {
    if (inverse) return tensor_minus(t, i, opt).complex;
    return reduce(tensor_plus(t, i)).complex;
}

} // namespace gammaq
