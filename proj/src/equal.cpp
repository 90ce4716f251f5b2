// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/equal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gammaq/hom.hpp"

namespace gammaq {

namespace {

std::map<std::pair<int, int>, int> generator_multiset(const TwistedComplex& t) {
    std::map<std::pair<int, int>, int> out;
    for (const Generator& g : t.generators()) ++out[{g.vertex, g.shift}];
    return out;
}

std::string multiset_str(const std::map<std::pair<int, int>, int>& ms) {
    std::string s = "{";
    for (const auto& [vs, n] : ms) {
        if (s.size() > 1) s += ", ";
        s += "e" + std::to_string(vs.first) + "[" + std::to_string(vs.second) + "]x" +
             std::to_string(n);
    }
    return s + "}";
}

// The scalar part of a candidate morphism: for each (vertex, shift) class,
// the matrix of idempotent-path coefficients from source generators to
// target generators of that class.  Stored as one block-diagonal matrix
// over a fixed generator ordering per class.
struct ScalarPart {
    // per class: (list of target gens, list of source gens)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> classes;
    std::vector<ExactMatrix> blocks;
};

ScalarPart scalar_part_shape(const TwistedComplex& a, const TwistedComplex& b, Field f) {
    std::set<std::pair<int, int>> keys;
    for (const Generator& g : a.generators()) keys.insert({g.vertex, g.shift});
    ScalarPart sp;
    for (const auto& [v, n] : keys) {
        std::vector<int> rows, cols;
        for (int i = 0; i < b.size(); ++i)
            if (b.generator(i).vertex == v && b.generator(i).shift == n)
                rows.push_back(i);
        for (int i = 0; i < a.size(); ++i)
            if (a.generator(i).vertex == v && a.generator(i).shift == n)
                cols.push_back(i);
        sp.blocks.emplace_back(f, static_cast<int>(rows.size()),
                               static_cast<int>(cols.size()));
        sp.classes.emplace_back(std::move(rows), std::move(cols));
    }
    return sp;
}

// Accumulate c * (scalar entries of u) into sp.
void accumulate_scalar_part(ScalarPart& sp, const Morphism& u, const Scalar& c) {
    for (std::size_t k = 0; k < sp.classes.size(); ++k) {
        const auto& [rows, cols] = sp.classes[k];
        for (std::size_t ri = 0; ri < rows.size(); ++ri)
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                const AlgebraElement& e = u.entry(rows[ri], cols[ci]);
                if (e.is_zero()) continue;
                for (const auto& [p, coeff] : e.terms())
                    if (p.trivial())
                        sp.blocks[k].add(static_cast<int>(ri), static_cast<int>(ci),
                                         c * coeff);
            }
    }
}

bool scalar_part_invertible(const ScalarPart& sp) {
    for (std::size_t k = 0; k < sp.blocks.size(); ++k) {
        const ExactMatrix& m = sp.blocks[k];
        if (m.rows() != m.cols()) return false;
        if (m.rank() != m.rows()) return false;
    }
    return true;
}

bool scalar_part_zero(const ScalarPart& sp) {
    for (const ExactMatrix& m : sp.blocks)
        for (int r = 0; r < m.rows(); ++r)
            if (!m.row_is_zero(r)) return false;
    return true;
}

} // namespace

IsoResult equal_upto_iso(const TwistedComplex& a_in, const TwistedComplex& b_in,
                         unsigned seed) {
    const TwistedComplex a = reduce(a_in).complex;
    const TwistedComplex b = reduce(b_in).complex;

    if (a.empty() && b.empty())
        return {IsoVerdict::Equal, "both complexes reduce to zero"};

    auto ma = generator_multiset(a);
    auto mb = generator_multiset(b);
    if (ma != mb)
        return {IsoVerdict::Distinct, "generator multisets differ: " + multiset_str(ma) +
                                          " vs " + multiset_str(mb)};

    // Map weights that can carry scalar entries: offset differences between
    // generators of matching (vertex, shift).
    std::set<int> scalar_weights;
    for (int r = 0; r < b.size(); ++r)
        for (int c = 0; c < a.size(); ++c)
            if (b.generator(r).vertex == a.generator(c).vertex &&
                b.generator(r).shift == a.generator(c).shift)
                scalar_weights.insert(b.generator(r).weight_offset -
                                      a.generator(c).weight_offset);

    HomCells hom(a, b);
    const Field f = a.field();
    std::vector<Morphism> candidates;
    for (int w : scalar_weights)
        for (const Morphism& u : hom.h_basis(0, w)) {
            // Keep only classes whose representative carries a scalar term.
            ScalarPart sp = scalar_part_shape(a, b, f);
            accumulate_scalar_part(sp, u, Scalar::one(f));
            if (!scalar_part_zero(sp)) candidates.push_back(u);
        }

    if (candidates.empty())
        return {IsoVerdict::Distinct,
                "no degree-0 cohomology class carries a scalar part"};

    auto try_combo = [&](const std::vector<Scalar>& coeffs) -> bool {
        ScalarPart sp = scalar_part_shape(a, b, f);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (!coeffs[i].is_zero())
                accumulate_scalar_part(sp, candidates[i], coeffs[i]);
        return scalar_part_invertible(sp);
    };

    // Single candidates, then the plain sum, then seeded random combinations.
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<Scalar> coeffs(candidates.size(), Scalar::zero(f));
        coeffs[i] = Scalar::one(f);
        if (try_combo(coeffs))
            return {IsoVerdict::Equal, "isomorphism witnessed by a single class"};
    }
    {
        std::vector<Scalar> coeffs(candidates.size(), Scalar::one(f));
        if (try_combo(coeffs))
            return {IsoVerdict::Equal, "isomorphism witnessed by the class sum"};
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i)
            coeffs.push_back(Scalar::of(f, static_cast<long>(rng() % 11) - 5));
        if (try_combo(coeffs))
            return {IsoVerdict::Equal, "isomorphism witnessed by a random combination"};
    }
    return {IsoVerdict::Unknown,
            "scalar-carrying classes exist but no invertible combination was found"};
}

} // namespace gammaq
