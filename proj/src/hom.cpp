// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/hom.hpp"

#include <algorithm>
#include <thread>

#include "gammaq/errors.hpp"

namespace gammaq {

namespace {

// y = A x for a dense vector x.
std::vector<Scalar> mat_apply(const ExactMatrix& a, const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != a.cols())
        throw InvalidDataError("apply: dimension mismatch");
    std::vector<Scalar> y(static_cast<std::size_t>(a.rows()), Scalar::zero(a.field()));
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r))
            y[static_cast<std::size_t>(r)] += v * x[static_cast<std::size_t>(c)];
    return y;
}

bool coord_less(const HomCoord& a, const HomCoord& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.c != b.c) return a.c < b.c;
    return path_less(a.path, b.path);
}

} // namespace

long HomTable::at(int p, int w) const {
    auto it = dims.find({p, w});
    return it == dims.end() ? 0 : it->second;
}

std::map<int, long> HomTable::totals_by_degree() const {
    std::map<int, long> out;
    for (const auto& [pw, d] : dims) out[pw.first] += d;
    return out;
}

bool HomTable::empty_in_degrees(int p_from, int p_to) const {
    for (const auto& [pw, d] : dims)
        if (pw.first >= p_from && pw.first <= p_to && d != 0) return false;
    return true;
}

std::string HomTable::str() const {
    std::string s;
    for (const auto& [pw, d] : dims) {
        if (!s.empty()) s += ", ";
        s += "H^{" + std::to_string(pw.first) + ",(" + std::to_string(pw.second) +
             ")} = " + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

HomCells::HomCells(TwistedComplex source, TwistedComplex target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.field() != target_.field())
        throw InvalidDataError("mapping complex between different fields");
}

const std::vector<HomCoord>& HomCells::cell_basis(int p, int w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(p, w);
    auto it = basis_cache_.find(key);
    if (it != basis_cache_.end()) return it->second;

    std::vector<HomCoord> basis;
    const DoubleQuiver& dq = source_.dq();
    for (int r = 0; r < target_.size(); ++r) {
        const Generator& gr = target_.generator(r);
        for (int c = 0; c < source_.size(); ++c) {
            const Generator& gc = source_.generator(c);
            const int deg = p + gr.shift - gc.shift;
            const int wt = w + gc.weight_offset - gr.weight_offset;
            for (const Path& path : dq.slice(deg, wt, gc.vertex, gr.vertex))
                basis.push_back(HomCoord{r, c, path});
        }
    }
    return basis_cache_.emplace(key, std::move(basis)).first->second;
}

long HomCells::cell_dim(int p, int w) const {
    return static_cast<long>(cell_basis(p, w).size());
}

const ExactMatrix& HomCells::differential_matrix(int p, int w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = diff_cache_.find({p, w});
        if (it != diff_cache_.end()) return it->second;
    }
    const std::vector<HomCoord>& from = cell_basis(p, w);
    const std::vector<HomCoord>& to = cell_basis(p + 1, w);
    const Field f = source_.field();
    const DoubleQuiver& dq = source_.dq();

    auto index_of = [&to](int r, int c, const Path& path) {
        HomCoord probe{r, c, path};
        auto it = std::lower_bound(to.begin(), to.end(), probe, coord_less);
        if (it == to.end() || it->r != r || it->c != c || !path_equal(it->path, path))
            throw InvalidDataError("mapping-complex differential left its cell");
        return static_cast<int>(it - to.begin());
    };

    ExactMatrix d(f, static_cast<int>(to.size()), static_cast<int>(from.size()));
    const bool odd_p = (p % 2) != 0;
    for (std::size_t j = 0; j < from.size(); ++j) {
        const HomCoord& u = from[j];
        // (-1)^{shift_r} d(path)
        AlgebraElement du =
            AlgebraElement::of_path(f, u.path).differential(dq);
        const bool flip = (target_.generator(u.r).shift % 2) != 0;
        for (const auto& [q, coeff] : du.terms())
            d.add(index_of(u.r, u.c, q), static_cast<int>(j), flip ? -coeff : coeff);
        // (delta^N u): target delta entries out of row r
        for (const auto& [rc, v] : target_.delta_entries()) {
            if (rc.second != u.r) continue;
            AlgebraElement prod = v * AlgebraElement::of_path(f, u.path);
            for (const auto& [q, coeff] : prod.terms())
                d.add(index_of(rc.first, u.c, q), static_cast<int>(j), coeff);
        }
        // -(-1)^p (u delta^M): source delta entries into column c
        for (const auto& [rc, v] : source_.delta_entries()) {
            if (rc.first != u.c) continue;
            AlgebraElement prod = AlgebraElement::of_path(f, u.path) * v;
            for (const auto& [q, coeff] : prod.terms())
                d.add(index_of(u.r, rc.second, q), static_cast<int>(j),
                      odd_p ? coeff : -coeff);
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return diff_cache_.emplace(std::make_pair(p, w), std::move(d)).first->second;
}

const ExactMatrix& HomCells::kernel_matrix(int p, int w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = kernel_cache_.find({p, w});
        if (it != kernel_cache_.end()) return it->second;
    }
    const Field f = source_.field();
    const int dim = static_cast<int>(cell_dim(p, w));
    ExactMatrix kernel(f, 0, dim);
    if (dim > 0) {
        if (cell_dim(p + 1, w) > 0) {
            kernel = differential_matrix(p, w).kernel_basis();
        } else {
            // zero outgoing differential: the kernel is the whole cell
            std::vector<std::vector<Scalar>> rows;
            for (int i = 0; i < dim; ++i) {
                std::vector<Scalar> e(static_cast<std::size_t>(dim),
                                      Scalar::zero(f));
                e[static_cast<std::size_t>(i)] = Scalar::one(f);
                rows.push_back(std::move(e));
            }
            kernel = ExactMatrix::from_rows(f, dim, rows);
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return kernel_cache_.emplace(std::make_pair(p, w), std::move(kernel))
        .first->second;
}

const ExactMatrix& HomCells::image_matrix(int p, int w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = image_cache_.find({p, w});
        if (it != image_cache_.end()) return it->second;
    }
    const Field f = source_.field();
    const int dim = static_cast<int>(cell_dim(p, w));
    ExactMatrix image(f, 0, dim);
    if (dim > 0 && cell_dim(p - 1, w) > 0)
        image = differential_matrix(p - 1, w).transpose().rref();
    std::lock_guard<std::mutex> lock(mutex_);
    return image_cache_.emplace(std::make_pair(p, w), std::move(image))
        .first->second;
}

long HomCells::rank(int p, int w) const {
    if (cell_dim(p, w) == 0 || cell_dim(p + 1, w) == 0) return 0;
    return cell_dim(p, w) - kernel_matrix(p, w).rows();
}

long HomCells::h_dim(int p, int w) const {
    const long dim = cell_dim(p, w);
    if (dim == 0) return 0;
    return dim - rank(p, w) - rank(p - 1, w);
}

const HomCells::ClassData& HomCells::class_data(int p, int w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = class_cache_.find({p, w});
        if (it != class_cache_.end()) return it->second;
    }
    const Field f = source_.field();
    const int dim = static_cast<int>(cell_dim(p, w));
    ClassData data(f, dim);
    if (dim > 0) {
        data.image_rref = image_matrix(p, w);
        const ExactMatrix& kernel = kernel_matrix(p, w);
        ExactMatrix span = data.image_rref;
        for (int i = 0; i < kernel.rows(); ++i) {
            std::vector<Scalar> z = kernel.dense_row(i);
            if (span.absorb_row(z)) data.h_vecs.push_back(std::move(z));
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return class_cache_.emplace(std::make_pair(p, w), std::move(data)).first->second;
}

const std::vector<std::vector<Scalar>>& HomCells::h_vectors(int p, int w) const {
    return class_data(p, w).h_vecs;
}

std::vector<Morphism> HomCells::h_basis(int p, int w) const {
    std::vector<Morphism> out;
    for (const std::vector<Scalar>& v : h_vectors(p, w))
        out.push_back(morphism_from_vector(p, w, v));
    return out;
}

Morphism HomCells::morphism_from_vector(int p, int w,
                                        const std::vector<Scalar>& v) const {
    const std::vector<HomCoord>& basis = cell_basis(p, w);
    if (v.size() != basis.size())
        throw InvalidDataError("morphism_from_vector: length mismatch");
    Morphism u(source_, target_, p, w);
    const Field f = source_.field();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero())
            u.add_entry(basis[i].r, basis[i].c,
                        AlgebraElement::of_path(f, basis[i].path, v[i]));
    return u;
}

std::vector<Scalar> HomCells::vector_of_morphism(const Morphism& u) const {
    const std::vector<HomCoord>& basis = cell_basis(u.degree(), u.weight());
    std::vector<Scalar> v(basis.size(), Scalar::zero(source_.field()));
    for (const auto& [rc, elem] : u.entries())
        for (const auto& [path, coeff] : elem.terms()) {
            HomCoord probe{rc.first, rc.second, path};
            auto it = std::lower_bound(basis.begin(), basis.end(), probe, coord_less);
            if (it == basis.end() || it->r != probe.r || it->c != probe.c ||
                !path_equal(it->path, path))
                throw InvalidDataError("morphism does not lie in its cell");
            v[static_cast<std::size_t>(it - basis.begin())] += coeff;
        }
    return v;
}

std::vector<Scalar>
HomCells::class_coordinates(int p, int w, const std::vector<Scalar>& cocycle) const {
    if (cell_dim(p + 1, w) > 0) {
        for (const Scalar& s : mat_apply(differential_matrix(p, w), cocycle))
            if (!s.is_zero())
                throw InvalidDataError("class_coordinates of a non-closed vector");
    }
    const ClassData& data = class_data(p, w);
    const Field f = source_.field();
    const int dim = static_cast<int>(cell_dim(p, w));
    ExactMatrix stacked = data.image_rref;
    for (const std::vector<Scalar>& h : data.h_vecs)
        stacked = stacked.vstack(ExactMatrix::from_rows(f, dim, {h}));
    auto y = stacked.transpose().solve(cocycle);
    if (!y)
        throw InvalidDataError("closed vector not spanned by image and chosen classes");
    std::vector<Scalar> coords(y->end() - static_cast<long>(data.h_vecs.size()),
                               y->end());
    return coords;
}

std::pair<int, int> HomCells::structural_degree_range(int wmin, int wmax) const {
    (void)wmin; // only the upper weight bound constrains the degree range
    bool any = false;
    int lo = 0, hi = 0;
    for (int r = 0; r < target_.size(); ++r) {
        const Generator& gr = target_.generator(r);
        for (int c = 0; c < source_.size(); ++c) {
            const Generator& gc = source_.generator(c);
            const int max_wt = wmax + gc.weight_offset - gr.weight_offset;
            if (max_wt < 0) continue;
            // entry degree p + shift_r - shift_c must lie in [-max_wt/2, 0]
            const int p_hi = gc.shift - gr.shift;
            const int p_lo = gc.shift - gr.shift - max_wt / 2;
            if (!any) {
                lo = p_lo;
                hi = p_hi;
                any = true;
            } else {
                lo = std::min(lo, p_lo);
                hi = std::max(hi, p_hi);
            }
        }
    }
    if (!any) return {0, -1};
    return {lo, hi};
}

HomTable HomCells::table(int pmin, int pmax, int wmin, int wmax, int jobs) const {
    HomTable out;
    out.pmin = pmin;
    out.pmax = pmax;
    out.wmin = wmin;
    out.wmax = wmax;
    std::vector<std::pair<int, int>> cells;
    for (int p = pmin; p <= pmax; ++p)
        for (int w = wmin; w <= wmax; ++w) cells.emplace_back(p, w);

    std::vector<long> dims(cells.size(), 0);
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < cells.size(); i += stride)
            dims[i] = h_dim(cells[i].first, cells[i].second);
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back(work, static_cast<std::size_t>(t),
                                 static_cast<std::size_t>(jobs));
        for (std::thread& t : threads) t.join();
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (dims[i] != 0) out.dims[cells[i]] = dims[i];
    return out;
}

// ---------------------------------------------------------------------------
// mapping complexes into explicit modules
// ---------------------------------------------------------------------------

namespace {

struct ModuleCoord {
    int c = 0; // source generator
    int b = 0; // module basis vector
};

std::vector<ModuleCoord> module_cell(const TwistedComplex& m, const RightModule& n,
                                     int p, int w) {
    std::vector<ModuleCoord> out;
    for (int c = 0; c < m.size(); ++c) {
        const Generator& gc = m.generator(c);
        for (int b = 0; b < n.dim(); ++b) {
            const RightModule::BasisVec& bv = n.basis_vec(b);
            if (bv.vertex != gc.vertex) continue;
            if (bv.degree != p - gc.shift) continue;
            if (bv.weight != w + gc.weight_offset) continue;
            out.push_back(ModuleCoord{c, b});
        }
    }
    return out;
}

ExactMatrix module_differential(const TwistedComplex& m, const RightModule& n,
                                const std::vector<ModuleCoord>& from,
                                const std::vector<ModuleCoord>& to, int p) {
    const Field f = n.field();
    auto index_of = [&to](int c, int b) {
        for (std::size_t i = 0; i < to.size(); ++i)
            if (to[i].c == c && to[i].b == b) return static_cast<int>(i);
        throw InvalidDataError("module mapping differential left its cell");
    };
    ExactMatrix d(f, static_cast<int>(to.size()), static_cast<int>(from.size()));
    const bool odd_p = (p % 2) != 0;
    for (std::size_t j = 0; j < from.size(); ++j) {
        const ModuleCoord& u = from[j];
        RightModule::Vec unit{{u.b, Scalar::one(f)}};
        // d_N(u_c)
        for (const auto& [b2, coeff] : n.differential(unit))
            d.add(index_of(u.c, b2), static_cast<int>(j), coeff);
        // -(-1)^p sum over source delta entries into column c
        for (const auto& [rc, v] : m.delta_entries()) {
            if (rc.first != u.c) continue;
            for (const auto& [b2, coeff] : n.act_element(unit, v))
                d.add(index_of(rc.second, b2), static_cast<int>(j),
                      odd_p ? coeff : -coeff);
        }
    }
    return d;
}

} // namespace

int min_hom_weight(const TwistedComplex& source, const TwistedComplex& target) {
    if (source.empty() || target.empty()) return 0;
    int max_src = source.generator(0).weight_offset;
    for (const Generator& g : source.generators())
        max_src = std::max(max_src, g.weight_offset);
    int min_tgt = target.generator(0).weight_offset;
    for (const Generator& g : target.generators())
        min_tgt = std::min(min_tgt, g.weight_offset);
    return min_tgt - max_src;
}

HomTable module_hom_table(const TwistedComplex& source, const RightModule& target,
                          int pmin, int pmax, int wmin, int wmax) {
    HomTable out;
    out.pmin = pmin;
    out.pmax = pmax;
    out.wmin = wmin;
    out.wmax = wmax;
    for (int w = wmin; w <= wmax; ++w) {
        std::map<int, std::vector<ModuleCoord>> cells;
        for (int p = pmin - 1; p <= pmax + 1; ++p)
            cells[p] = module_cell(source, target, p, w);
        std::map<int, long> ranks;
        for (int p = pmin - 1; p <= pmax; ++p) {
            if (cells[p].empty() || cells[p + 1].empty())
                ranks[p] = 0;
            else
                ranks[p] =
                    module_differential(source, target, cells[p], cells[p + 1], p).rank();
        }
        for (int p = pmin; p <= pmax; ++p) {
            const long dim = static_cast<long>(cells[p].size());
            if (dim == 0) continue;
            const long h = dim - ranks[p] - ranks[p - 1];
            if (h != 0) out.dims[{p, w}] = h;
        }
    }
    return out;
}

std::map<std::pair<int, int>, long> simples_profile(const TwistedComplex& m) {
    std::map<std::pair<int, int>, long> out;
    if (m.empty()) return out;
    int smin = m.generator(0).shift, smax = smin;
    int omin = m.generator(0).weight_offset, omax = omin;
    for (const Generator& g : m.generators()) {
        smin = std::min(smin, g.shift);
        smax = std::max(smax, g.shift);
        omin = std::min(omin, g.weight_offset);
        omax = std::max(omax, g.weight_offset);
    }
    for (int j : m.dq().quiver().vertices()) {
        RightModule s = RightModule::simple(m.dq_ptr(), m.field(), j);
        HomTable t = module_hom_table(m, s, smin, smax, -omax, -omin);
        for (const auto& [pw, d] : t.dims) out[{j, pw.first}] += d;
    }
    return out;
}

} // namespace gammaq
