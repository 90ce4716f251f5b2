// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/silting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <sstream>

#include "gammaq/errors.hpp"
#include "gammaq/hom.hpp"
#include "gammaq/morphism.hpp"

namespace gammaq {

const DoubleQuiver& SiltingObject::dq() const {
    if (blocks.empty()) throw InvalidDataError("empty silting object");
    return blocks.front().dq();
}

std::shared_ptr<const DoubleQuiver> SiltingObject::dq_ptr() const {
    if (blocks.empty()) throw InvalidDataError("empty silting object");
    return blocks.front().dq_ptr();
}

const Field& SiltingObject::field() const {
    if (blocks.empty()) throw InvalidDataError("empty silting object");
    return blocks.front().field();
}

TwistedComplex SiltingObject::total() const {
    std::vector<const TwistedComplex*> parts;
    parts.reserve(blocks.size());
    for (const TwistedComplex& b : blocks) parts.push_back(&b);
    return TwistedComplex::direct_sum(dq_ptr(), field(), parts);
}

SiltingObject SiltingObject::shifted(int n) const {
    SiltingObject out;
    out.blocks.reserve(blocks.size());
    for (const TwistedComplex& b : blocks) out.blocks.push_back(b.shifted(n));
    return out;
}

std::string SiltingObject::describe() const {
    std::string s = std::to_string(blocks.size()) + " block(s):";
    for (const TwistedComplex& b : blocks) s += "\n  " + b.describe();
    return s;
}

SiltingObject initial_silting(std::shared_ptr<const DoubleQuiver> dq, Field f) {
    SiltingObject out;
    for (int v : dq->quiver().vertices())
        out.blocks.push_back(projective_complex(dq, f, v));
    return out;
}

SiltingObject apply_word(const SiltingObject& m, const BraidWord& w,
                         const TwistOptions& opt) {
    validate_word(m.dq().quiver(), w);
    SiltingObject cur = m;
    for (const BraidLetter& l : w.letters) {
        SiltingObject next;
        next.blocks.reserve(cur.blocks.size());
        for (const TwistedComplex& b : cur.blocks)
            next.blocks.push_back(apply_twist(b, l.vertex, l.inverse, opt));
        cur = std::move(next);
    }
    return cur;
}

SiltingObject braid_to_silting(std::shared_ptr<const DoubleQuiver> dq, Field f,
                               const BraidWord& w, const TwistOptions& opt) {
    return apply_word(initial_silting(dq, f), w, opt);
}

namespace {

// The degree-0 cohomology classes of Hom(src, tgt) with map weight inside
// the window, addressed through one concatenated coordinate system.  The
// mapping complex is weight graded, so every class and every composite of
// classes is weight homogeneous and lands in a single weight's coordinate
// block.
class ClassSpace {
public:
    ClassSpace(const TwistedComplex& src, const TwistedComplex& tgt, int window)
        : cells_(std::make_shared<HomCells>(src, tgt)) {
        const int wlo = min_hom_weight(src, tgt);
        for (int w = wlo; w <= window; ++w) {
            const long hd = cells_->h_dim(0, w);
            if (hd == 0) continue;
            layout_[w] = {dim_, static_cast<int>(hd)};
            for (int j = 0; j < hd; ++j) weight_of_.push_back(w);
            dim_ += static_cast<int>(hd);
        }
    }

    int dim() const { return dim_; }
    int weight_of(int j) const { return weight_of_.at(static_cast<std::size_t>(j)); }

    Morphism basis_morphism(int j) const {
        const int w = weight_of(j);
        const auto [offset, count] = layout_.at(w);
        (void)count;
        return cells_->morphism_from_vector(
            0, w, cells_->h_vectors(0, w)[static_cast<std::size_t>(j - offset)]);
    }

    std::vector<Morphism> basis() const {
        std::vector<Morphism> out;
        out.reserve(static_cast<std::size_t>(dim_));
        for (int j = 0; j < dim_; ++j) out.push_back(basis_morphism(j));
        return out;
    }

    /// Coordinates of a closed degree-0 morphism.  Classes of weight
    /// outside the layout contribute nothing when they vanish; a nonzero
    /// class beyond the window returns false.
    bool coordinates(const Morphism& m, std::vector<Scalar>& out, Field f) const {
        out.assign(static_cast<std::size_t>(dim_), Scalar::zero(f));
        if (m.is_zero()) return true;
        const int w = m.weight();
        std::vector<Scalar> coords =
            cells_->class_coordinates(0, w, cells_->vector_of_morphism(m));
        const bool all_zero =
            std::all_of(coords.begin(), coords.end(),
                        [](const Scalar& s) { return s.is_zero(); });
        auto it = layout_.find(w);
        if (it == layout_.end()) return all_zero;
        const auto [offset, count] = it->second;
        for (int j = 0; j < count; ++j)
            out[static_cast<std::size_t>(offset + j)] = coords[static_cast<std::size_t>(j)];
        return true;
    }

private:
    std::shared_ptr<HomCells> cells_;
    std::map<int, std::pair<int, int>> layout_; // weight -> (offset, count)
    std::vector<int> weight_of_;
    int dim_ = 0;
};

// Radical of the degree-0 endomorphism algebra of one block, as a list of
// weight-homogeneous morphisms.  The algebra is finite dimensional and
// weight graded; the trace form of its regular representation pairs weight
// w with weight -w only, so the kernel of the form — which is the radical
// in characteristic zero or above the algebra's dimension — is computed
// weight block against opposite weight block.
std::vector<Morphism> radical_endos(const ClassSpace& endo, Field f) {
    const int dim = endo.dim();
    if (dim == 0) return {};
    std::vector<Morphism> basis = endo.basis();

    // structure constants: column c of left_mult[a] is the coordinate
    // vector of basis[a] o basis[c]
    std::vector<ExactMatrix> left_mult;
    left_mult.reserve(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        ExactMatrix la(f, dim, dim);
        for (int c = 0; c < dim; ++c) {
            std::vector<Scalar> coords;
            if (!endo.coordinates(compose(basis[static_cast<std::size_t>(a)],
                                          basis[static_cast<std::size_t>(c)]),
                                  coords, f))
                throw MutationError(
                    "endomorphism algebra is not contained in the weight window");
            for (int r = 0; r < dim; ++r)
                if (!coords[static_cast<std::size_t>(r)].is_zero())
                    la.add(r, c, coords[static_cast<std::size_t>(r)]);
        }
        left_mult.push_back(std::move(la));
    }

    auto trace_of_product = [&](int a, int b) {
        ExactMatrix prod = left_mult[static_cast<std::size_t>(a)].multiply(
            left_mult[static_cast<std::size_t>(b)]);
        Scalar tr = Scalar::zero(f);
        for (int k = 0; k < dim; ++k) {
            std::vector<Scalar> row = prod.dense_row(k);
            tr += row[static_cast<std::size_t>(k)];
        }
        return tr;
    };

    std::vector<Morphism> out;
    // group basis indices by weight
    std::map<int, std::vector<int>> by_weight;
    for (int j = 0; j < dim; ++j) by_weight[endo.weight_of(j)].push_back(j);
    for (const auto& [w, rows] : by_weight) {
        auto oit = by_weight.find(-w);
        std::vector<int> cols = (oit == by_weight.end()) ? std::vector<int>{}
                                                         : oit->second;
        ExactMatrix gram(f, static_cast<int>(cols.size()),
                         static_cast<int>(rows.size()));
        for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (std::size_t ri = 0; ri < rows.size(); ++ri)
                gram.add(static_cast<int>(ci), static_cast<int>(ri),
                         trace_of_product(cols[ci], rows[ri]));
        ExactMatrix kernel = gram.kernel_basis();
        for (int k = 0; k < kernel.rows(); ++k) {
            std::vector<Scalar> combo = kernel.dense_row(k);
            Morphism rad = endo.basis_morphism(rows[0]).scaled(combo[0]);
            for (std::size_t ri = 1; ri < rows.size(); ++ri)
                rad = rad + endo.basis_morphism(rows[ri]).scaled(combo[ri]);
            if (!rad.is_zero()) out.push_back(std::move(rad));
        }
    }
    return out;
}

// One class chosen to survive the radical quotient: its position in the
// class space of (X, R_l) or (R_l, X).
struct ApproxComponent {
    int l = 0; // index into the rest-block list
    int j = 0; // index into the class space
};

struct ApproxData {
    std::vector<int> counts; // multiplicity per rest block
    std::vector<ApproxComponent> chosen;
};

// Minimal approximation data between block X and the other blocks at one
// window.  V_l is the degree-0 class space toward (Left) or from (Right)
// rest block l; the subtracted subspace is the radical of the additive
// category: compositions through a different rest block, plus radical
// endomorphisms on the same block.
ApproxData approximation_data(const TwistedComplex& x,
                              const std::vector<const TwistedComplex*>& rest,
                              Direction dir, int window, Field f) {
    const std::size_t n = rest.size();
    std::vector<ClassSpace> v;
    v.reserve(n);
    for (const TwistedComplex* r : rest)
        v.emplace_back(dir == Direction::Left ? x : *r,
                       dir == Direction::Left ? *r : x, window);

    std::vector<std::vector<Morphism>> v_basis(n);
    for (std::size_t l = 0; l < n; ++l) v_basis[l] = v[l].basis();

    ApproxData out;
    for (std::size_t l = 0; l < n; ++l) {
        std::vector<std::vector<Scalar>> rad_rows;
        auto push_composite = [&](const Morphism& m) {
            std::vector<Scalar> coords;
            if (v[l].coordinates(m, coords, f) &&
                std::any_of(coords.begin(), coords.end(),
                            [](const Scalar& s) { return !s.is_zero(); }))
                rad_rows.push_back(std::move(coords));
        };

        for (std::size_t lp = 0; lp < n; ++lp) {
            if (lp == l) continue;
            ClassSpace bridge(dir == Direction::Left ? *rest[lp] : *rest[l],
                              dir == Direction::Left ? *rest[l] : *rest[lp],
                              window);
            for (const Morphism& psi_or_phi : bridge.basis())
                for (const Morphism& through : v_basis[lp])
                    push_composite(dir == Direction::Left
                                       ? compose(psi_or_phi, through)
                                       : compose(through, psi_or_phi));
        }

        ClassSpace endo(*rest[l], *rest[l], window);
        for (const Morphism& rad : radical_endos(endo, f))
            for (const Morphism& phi : v_basis[l])
                push_composite(dir == Direction::Left ? compose(rad, phi)
                                                      : compose(phi, rad));

        ExactMatrix acc =
            ExactMatrix::from_rows(f, v[l].dim(), rad_rows).rref();
        int count = 0;
        for (int j = 0; j < v[l].dim(); ++j) {
            std::vector<Scalar> unit(static_cast<std::size_t>(v[l].dim()),
                                     Scalar::zero(f));
            unit[static_cast<std::size_t>(j)] = Scalar::one(f);
            if (acc.in_row_space(unit)) continue;
            out.chosen.push_back(ApproxComponent{static_cast<int>(l), j});
            ++count;
            acc = acc.vstack(ExactMatrix::from_rows(f, v[l].dim(), {unit})).rref();
        }
        out.counts.push_back(count);
    }
    return out;
}

} // namespace

SiltingObject mutate(const SiltingObject& m, int block, Direction dir,
                     const TwistOptions& opt) {
    if (block < 0 || block >= static_cast<int>(m.blocks.size()))
        throw ConfigError("mutation at block " + std::to_string(block) +
                          " of a " + std::to_string(m.blocks.size()) +
                          "-block object");
    const Field f = m.field();
    const TwistedComplex& x = m.blocks[static_cast<std::size_t>(block)];
    std::vector<const TwistedComplex*> rest;
    for (std::size_t l = 0; l < m.blocks.size(); ++l)
        if (static_cast<int>(l) != block) rest.push_back(&m.blocks[l]);

    ApproxData data = approximation_data(x, rest, dir, opt.weight_bound, f);
    ApproxData narrower =
        approximation_data(x, rest, dir, opt.weight_bound - 2, f);
    if (data.counts != narrower.counts) {
        std::ostringstream msg;
        msg << "approximation multiplicities depend on the weight window ("
            << opt.weight_bound << " vs " << opt.weight_bound - 2 << "):";
        for (std::size_t l = 0; l < data.counts.size(); ++l)
            msg << " " << data.counts[l] << "/" << narrower.counts[l];
        throw MutationError(msg.str());
    }

    // Rebuild the chosen classes as one plain degree-0 weight-0 morphism
    // between X and a sum of offset copies of the rest blocks.
    std::vector<ClassSpace> v;
    for (const TwistedComplex* r : rest)
        v.emplace_back(dir == Direction::Left ? x : *r,
                       dir == Direction::Left ? *r : x, opt.weight_bound);

    std::vector<TwistedComplex> copies;
    std::vector<Morphism> reps;
    for (const ApproxComponent& comp : data.chosen) {
        const std::size_t l = static_cast<std::size_t>(comp.l);
        Morphism rep = v[l].basis_morphism(comp.j);
        const int w = rep.weight();
        copies.push_back(offset_shifted(*rest[l],
                                        dir == Direction::Left ? -w : w));
        reps.push_back(std::move(rep));
    }
    std::vector<const TwistedComplex*> parts;
    parts.reserve(copies.size());
    for (const TwistedComplex& c : copies) parts.push_back(&c);
    TwistedComplex sum = TwistedComplex::direct_sum(m.dq_ptr(), f, parts);

    TwistedComplex star(m.dq_ptr(), f);
    if (dir == Direction::Left) {
        Morphism phi(x, sum, 0, 0);
        int row_base = 0;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            for (const auto& [rc, val] : reps[k].entries())
                phi.add_entry(row_base + rc.first, rc.second, val);
            row_base += copies[k].size();
        }
        star = reduce(cone(phi)).complex;
    } else {
        Morphism phi(sum, x, 0, 0);
        int col_base = 0;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            for (const auto& [rc, val] : reps[k].entries())
                phi.add_entry(rc.first, col_base + rc.second, val);
            col_base += copies[k].size();
        }
        star = reduce(co_cone(phi)).complex;
    }

    SiltingObject out = m;
    out.blocks[static_cast<std::size_t>(block)] = std::move(star);
    return out;
}

GeqResult silting_geq(const SiltingObject& m, const SiltingObject& n,
                      const TwistOptions& opt) {
    TwistedComplex tm = m.total();
    TwistedComplex tn = n.total();
    HomCells cells(tm, tn);
    const int wlo = min_hom_weight(tm, tn);
    auto [pmin, pmax] = cells.structural_degree_range(wlo, opt.weight_bound);
    GeqResult out;
    for (int p = std::max(1, pmin); p <= pmax; ++p)
        for (int w = wlo; w <= opt.weight_bound; ++w) {
            const long hd = cells.h_dim(p, w);
            if (hd > 0) {
                out.geq = false;
                out.witness = "Hom in degree " + std::to_string(p) +
                              ", weight " + std::to_string(w) +
                              " has dimension " + std::to_string(hd);
                return out;
            }
        }
    out.geq = true;
    return out;
}

GeqResult presilting_check(const SiltingObject& m, const TwistOptions& opt) {
    return silting_geq(m, m, opt);
}

WordEqualityResult word_equality(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                 const BraidWord& w1, const BraidWord& w2,
                                 const TwistOptions& opt) {
    SiltingObject s1 = braid_to_silting(dq, f, w1, opt);
    SiltingObject s2 = braid_to_silting(dq, f, w2, opt);
    IsoResult iso = equal_upto_iso(s1.total(), s2.total());
    WordEqualityResult out;
    switch (iso.verdict) {
    case IsoVerdict::Equal: out.verdict = WordVerdict::Equal; break;
    case IsoVerdict::Distinct: out.verdict = WordVerdict::Distinct; break;
    case IsoVerdict::Unknown: out.verdict = WordVerdict::Unknown; break;
    }
    out.detail = iso.detail;
    return out;
}

namespace {

std::string fingerprint(const TwistedComplex& total) {
    std::vector<std::pair<int, int>> gens;
    for (const Generator& g : total.generators())
        gens.emplace_back(g.vertex, g.shift);
    std::sort(gens.begin(), gens.end());
    std::ostringstream s;
    for (const auto& [v, n] : gens) s << v << "[" << n << "] ";
    s << "|";
    for (const auto& [key, dim] : simples_profile(total))
        s << " S" << key.first << "^" << key.second << ":" << dim;
    return s.str();
}

} // namespace

std::string SiltingPoset::str() const {
    std::ostringstream s;
    s << nodes.size() << " node(s), " << edges.size() << " edge(s)";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s << "\n  node " << i << ": "
          << (nodes[i].provenance.empty() ? "(top)" : nodes[i].provenance);
    for (const PosetEdge& e : edges)
        s << "\n  " << e.from << " -> " << e.to << " at block " << e.block;
    return s.str();
}

SiltingPoset enumerate_interval(std::shared_ptr<const DoubleQuiver> dq, Field f,
                                int n, const TwistOptions& opt, int max_nodes) {
    SiltingObject top = initial_silting(dq, f);
    SiltingObject bottom = top.shifted(n);

    auto inside = [&](const SiltingObject& cand) {
        return silting_geq(top, cand, opt).geq &&
               silting_geq(cand, bottom, opt).geq;
    };

    SiltingPoset poset;
    std::map<std::string, std::vector<int>> by_fingerprint;
    auto add_node = [&](SiltingObject obj, const std::string& provenance) {
        poset.nodes.push_back(PosetNode{std::move(obj), provenance});
        const int id = static_cast<int>(poset.nodes.size()) - 1;
        by_fingerprint[fingerprint(poset.nodes.back().object.total())].push_back(id);
        return id;
    };

    std::deque<int> queue{add_node(top, "")};
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        const int nblocks = static_cast<int>(poset.nodes[static_cast<std::size_t>(id)]
                                                 .object.blocks.size());
        for (int k = 0; k < nblocks; ++k) {
            SiltingObject cand = mutate(poset.nodes[static_cast<std::size_t>(id)].object,
                                        k, Direction::Left, opt);
            if (!inside(cand)) continue;
            TwistedComplex cand_total = cand.total();
            int found = -1;
            for (int other : by_fingerprint[fingerprint(cand_total)]) {
                IsoResult iso = equal_upto_iso(
                    cand_total,
                    poset.nodes[static_cast<std::size_t>(other)].object.total());
                if (iso.verdict == IsoVerdict::Equal) {
                    found = other;
                    break;
                }
                if (iso.verdict == IsoVerdict::Unknown)
                    throw Error("interval enumeration hit an inconclusive "
                                "isomorphism check between mutation results: " +
                                iso.detail);
            }
            if (found < 0) {
                if (static_cast<int>(poset.nodes.size()) >= max_nodes)
                    throw Error("interval enumeration exceeded the node budget of " +
                                std::to_string(max_nodes));
                const std::string& parent =
                    poset.nodes[static_cast<std::size_t>(id)].provenance;
                found = add_node(std::move(cand),
                                 parent.empty()
                                     ? "mu" + std::to_string(k + 1)
                                     : parent + " mu" + std::to_string(k + 1));
                queue.push_back(found);
            }
            poset.edges.push_back(PosetEdge{id, found, k});
        }
    }
    return poset;
}

} // namespace gammaq
