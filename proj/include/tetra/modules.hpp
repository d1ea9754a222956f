#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/basis_algebra.hpp"
#include "tetra/matrix.hpp"

namespace tetra {

/// Right module over a BasisAlgebra, stored as a vertex-graded vector
/// space with one matrix per arrow: column vectors at s(a) map to t(a).
/// x.act(a) realizes x * a.
template <class F>
struct RightModule {
    const BasisAlgebra<F>* alg = nullptr;
    std::vector<int> dims;      // per quiver vertex
    std::vector<Mat<F>> act;    // per arrow: dims[tgt] x dims[src]

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool zero() const { return total_dim() == 0; }
};

/// Matrix of the action of a path: act(p) = act[a_k] ... act[a_1].
template <class F>
Mat<F> path_action(const RightModule<F>& M, const Path& p)
{
    const F& f = M.alg->field;
    Mat<F> m = Mat<F>::identity(f, M.dims[p.src]);
    for (int a : p.arrows) m = mat_mul(f, M.act[a], m);
    return m;
}

/// Relations must act as zero; checked on construction of every module
/// that is not derived from an already-checked one.
template <class F>
void check_module(const RightModule<F>& M, const Presentation<F>& pres)
{
    const F& f = M.alg->field;
    for (const auto& r : pres.relations) {
        if (r.terms.empty()) continue;
        int s = r.terms[0].first.src, t = r.terms[0].first.tgt;
        Mat<F> sum = Mat<F>::zero(f, M.dims[t], M.dims[s]);
        for (const auto& [p, c] : r.terms) {
            Mat<F> pm = path_action(M, p);
            for (std::size_t i = 0; i < sum.a.size(); ++i)
                sum.a[i] = f.add(sum.a[i], f.mul(c, pm.a[i]));
        }
        if (!sum.is_zero(f))
            throw AlgebraError("module: relation does not act as zero");
    }
}

/// P_i = e_i A with basis the labels of source i, graded by target.
template <class F>
struct ProjectiveStructure {
    RightModule<F> mod;
    std::vector<std::vector<int>> basis_labels; // per vertex: label ids in order
};

template <class F>
ProjectiveStructure<F> projective_module(const BasisAlgebra<F>& alg, int vertex)
{
    const F& f = alg.field;
    const int nv = alg.quiver.num_vertices();
    ProjectiveStructure<F> out;
    out.mod.alg = &alg;
    out.mod.dims.assign(nv, 0);
    out.basis_labels.assign(nv, {});
    for (int l = 0; l < alg.dim(); ++l)
        if (alg.src_of(l) == vertex) {
            out.basis_labels[alg.tgt_of(l)].push_back(l);
            out.mod.dims[alg.tgt_of(l)]++;
        }
    std::vector<int> pos(alg.dim(), -1);
    for (int v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < out.basis_labels[v].size(); ++k)
            pos[out.basis_labels[v][k]] = static_cast<int>(k);
    out.mod.act.reserve(alg.quiver.num_arrows());
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) {
        int u = alg.quiver.arrows[a].src, w = alg.quiver.arrows[a].tgt;
        Mat<F> m = Mat<F>::zero(f, out.mod.dims[w], out.mod.dims[u]);
        for (std::size_t k = 0; k < out.basis_labels[u].size(); ++k) {
            auto prod = alg.mul(SVec<F>{{(std::uint32_t)out.basis_labels[u][k], f.one()}},
                                alg.arrow_elem[a]);
            for (const auto& [idx, c] : prod) m.at(pos[idx], k) = c;
        }
        out.mod.act.push_back(std::move(m));
    }
    return out;
}

template <class F>
RightModule<F> simple_module(const BasisAlgebra<F>& alg, int vertex)
{
    const F& f = alg.field;
    const int nv = alg.quiver.num_vertices();
    RightModule<F> out;
    out.alg = &alg;
    out.dims.assign(nv, 0);
    out.dims[vertex] = 1;
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) {
        int u = alg.quiver.arrows[a].src, w = alg.quiver.arrows[a].tgt;
        out.act.push_back(Mat<F>::zero(f, out.dims[w], out.dims[u]));
    }
    return out;
}

/// Submodule from per-vertex spanning sets; rows of gen[v] are vectors in
/// M_v. Returns the submodule with its inclusion maps.
template <class F>
struct Submodule {
    RightModule<F> mod;
    std::vector<Mat<F>> incl; // per vertex: M.dims[v] x sub.dims[v]
};

template <class F>
Submodule<F> submodule_from_generators(const RightModule<F>& M,
                                       const std::vector<std::vector<std::vector<typename F::Elem>>>& gens,
                                       bool close_under_action)
{
    const F& f = M.alg->field;
    const int nv = static_cast<int>(M.dims.size());
    std::vector<SpanBuilder<F>> span;
    for (int v = 0; v < nv; ++v) span.emplace_back(f, M.dims[v]);
    std::vector<std::vector<std::vector<typename F::Elem>>> fresh(nv);
    for (int v = 0; v < nv; ++v)
        for (const auto& g : gens[v])
            if (span[v].insert(g)) fresh[v].push_back(g);
    if (close_under_action) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::vector<std::vector<typename F::Elem>>> next(nv);
            for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
                int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
                for (const auto& g : fresh[u]) {
                    std::vector<typename F::Elem> img(M.dims[w], f.zero());
                    for (int r = 0; r < M.dims[w]; ++r)
                        for (int c = 0; c < M.dims[u]; ++c)
                            img[r] = f.add(img[r], f.mul(M.act[a].at(r, c), g[c]));
                    if (span[w].insert(img)) {
                        next[w].push_back(img);
                        changed = true;
                    }
                }
            }
            fresh = std::move(next);
        }
    }
    Submodule<F> out;
    out.mod.alg = M.alg;
    out.mod.dims.assign(nv, 0);
    out.incl.resize(nv);
    for (int v = 0; v < nv; ++v) {
        const auto& rows = span[v].rows();
        out.mod.dims[v] = static_cast<int>(rows.size());
        out.incl[v] = Mat<F>::zero(f, M.dims[v], rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (int r = 0; r < M.dims[v]; ++r) out.incl[v].at(r, k) = rows[k][r];
    }
    // induced arrow actions: solve incl[w] * x = act[a] * incl[u]
    for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
        int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
        Mat<F> img = mat_mul(f, M.act[a], out.incl[u]);
        Mat<F> sub = Mat<F>::zero(f, out.mod.dims[w], out.mod.dims[u]);
        for (int c = 0; c < out.mod.dims[u]; ++c) {
            std::vector<typename F::Elem> b(M.dims[w]);
            for (int r = 0; r < M.dims[w]; ++r) b[r] = img.at(r, c);
            std::vector<typename F::Elem> x;
            if (!solve_linear(f, out.incl[w], b, x))
                throw AlgebraError("submodule not closed under the action");
            for (int r = 0; r < out.mod.dims[w]; ++r) sub.at(r, c) = x[r];
        }
        out.mod.act.push_back(std::move(sub));
    }
    return out;
}

/// M * rad: spanned by all arrow-action images.
template <class F>
Submodule<F> radical_submodule(const RightModule<F>& M)
{
    const int nv = static_cast<int>(M.dims.size());
    std::vector<std::vector<std::vector<typename F::Elem>>> gens(nv);
    for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
        int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
        for (int c = 0; c < M.dims[u]; ++c) {
            std::vector<typename F::Elem> col(M.dims[w]);
            for (int r = 0; r < M.dims[w]; ++r) col[r] = M.act[a].at(r, c);
            gens[w].push_back(std::move(col));
        }
    }
    return submodule_from_generators(M, gens, true);
}

/// soc M: the largest submodule killed by every arrow.
template <class F>
Submodule<F> socle_submodule(const RightModule<F>& M)
{
    const F& f = M.alg->field;
    const int nv = static_cast<int>(M.dims.size());
    std::vector<std::vector<std::vector<typename F::Elem>>> gens(nv);
    for (int v = 0; v < nv; ++v) {
        // stack all act[a] with s(a) = v
        std::size_t rows = 0;
        for (int a = 0; a < M.alg->quiver.num_arrows(); ++a)
            if (M.alg->quiver.arrows[a].src == v) rows += M.dims[M.alg->quiver.arrows[a].tgt];
        Mat<F> sys = Mat<F>::zero(f, rows ? rows : 1, M.dims[v]);
        std::size_t off = 0;
        for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
            if (M.alg->quiver.arrows[a].src != v) continue;
            int w = M.alg->quiver.arrows[a].tgt;
            for (int r = 0; r < M.dims[w]; ++r)
                for (int c = 0; c < M.dims[v]; ++c) sys.at(off + r, c) = M.act[a].at(r, c);
            off += M.dims[w];
        }
        Mat<F> ker = kernel_basis(f, sys);
        for (std::size_t k = 0; k < ker.rows; ++k) {
            std::vector<typename F::Elem> vrow(M.dims[v]);
            for (int c = 0; c < M.dims[v]; ++c) vrow[c] = ker.at(k, c);
            gens[v].push_back(std::move(vrow));
        }
    }
    return submodule_from_generators(M, gens, false);
}

/// Quotient M / S with S given by its inclusion; coordinates are the
/// non-pivot positions of the row space of S.
template <class F>
RightModule<F> quotient_module(const RightModule<F>& M, const Submodule<F>& S)
{
    const F& f = M.alg->field;
    const int nv = static_cast<int>(M.dims.size());
    RightModule<F> Q;
    Q.alg = M.alg;
    Q.dims.assign(nv, 0);
    // per vertex: RREF rows of S, pivot columns, projection map
    std::vector<Mat<F>> rref(nv);
    std::vector<std::vector<std::size_t>> piv(nv);
    std::vector<std::vector<int>> free_cols(nv);
    for (int v = 0; v < nv; ++v) {
        Mat<F> rows = Mat<F>::zero(f, S.mod.dims[v], M.dims[v]);
        for (int k = 0; k < S.mod.dims[v]; ++k)
            for (int r = 0; r < M.dims[v]; ++r) rows.at(k, r) = S.incl[v].at(r, k);
        row_echelon(f, rows, &piv[v]);
        rref[v] = std::move(rows);
        std::vector<bool> is_piv(M.dims[v], false);
        for (auto c : piv[v]) is_piv[c] = true;
        for (int c = 0; c < M.dims[v]; ++c)
            if (!is_piv[c]) free_cols[v].push_back(c);
        Q.dims[v] = static_cast<int>(free_cols[v].size());
    }
    auto project = [&](int v, std::vector<typename F::Elem> x) {
        for (std::size_t r = 0; r < piv[v].size(); ++r) {
            auto c = x[piv[v][r]];
            if (f.is_zero(c)) continue;
            auto nc = f.neg(c);
            for (int j = 0; j < M.dims[v]; ++j)
                x[j] = f.add(x[j], f.mul(nc, rref[v].at(r, j)));
        }
        std::vector<typename F::Elem> out(free_cols[v].size());
        for (std::size_t k = 0; k < free_cols[v].size(); ++k) out[k] = x[free_cols[v][k]];
        return out;
    };
    for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
        int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
        Mat<F> m = Mat<F>::zero(f, Q.dims[w], Q.dims[u]);
        for (int k = 0; k < Q.dims[u]; ++k) {
            // representative of the k-th coset basis vector
            std::vector<typename F::Elem> x(M.dims[u], f.zero());
            x[free_cols[u][k]] = f.one();
            std::vector<typename F::Elem> img(M.dims[w], f.zero());
            for (int r = 0; r < M.dims[w]; ++r)
                for (int c = 0; c < M.dims[u]; ++c)
                    img[r] = f.add(img[r], f.mul(M.act[a].at(r, c), x[c]));
            auto pr = project(w, std::move(img));
            for (int r = 0; r < Q.dims[w]; ++r) m.at(r, k) = pr[r];
        }
        Q.act.push_back(std::move(m));
    }
    return Q;
}

/// Minimal projective cover data: multiplicities c_v = dim top(M)_v,
/// the cover module ⊕ P_v^{c_v} and the epimorphism onto M.
template <class F>
struct Cover {
    std::vector<int> mult;               // per vertex
    RightModule<F> proj;                 // the covering projective module
    std::vector<Mat<F>> epi;             // per vertex: M.dims[v] x proj.dims[v]
    int top_dim = 0;
};

template <class F>
Cover<F> projective_cover(const RightModule<F>& M)
{
    const F& f = M.alg->field;
    const BasisAlgebra<F>& alg = *M.alg;
    const int nv = static_cast<int>(M.dims.size());
    if (M.zero()) throw AlgebraError("projective cover of the zero module");

    auto rad = radical_submodule(M);
    // top generators: unit vectors at non-pivot coordinates of rad
    std::vector<std::vector<std::vector<typename F::Elem>>> tops(nv);
    for (int v = 0; v < nv; ++v) {
        Mat<F> rows = Mat<F>::zero(f, rad.mod.dims[v], M.dims[v]);
        for (int k = 0; k < rad.mod.dims[v]; ++k)
            for (int r = 0; r < M.dims[v]; ++r) rows.at(k, r) = rad.incl[v].at(r, k);
        std::vector<std::size_t> piv;
        row_echelon(f, rows, &piv);
        std::vector<bool> is_piv(M.dims[v], false);
        for (auto c : piv) is_piv[c] = true;
        for (int c = 0; c < M.dims[v]; ++c)
            if (!is_piv[c]) {
                std::vector<typename F::Elem> x(M.dims[v], f.zero());
                x[c] = f.one();
                tops[v].push_back(std::move(x));
            }
    }

    Cover<F> out;
    out.mult.assign(nv, 0);
    for (int v = 0; v < nv; ++v) out.mult[v] = static_cast<int>(tops[v].size());
    for (int v = 0; v < nv; ++v) out.top_dim += out.mult[v];

    // assemble ⊕ P_v^{c_v}: coordinates grouped (vertex v, copy k, P_v-basis)
    std::vector<ProjectiveStructure<F>> protos;
    protos.reserve(nv);
    for (int v = 0; v < nv; ++v) protos.push_back(projective_module(alg, v));

    out.proj.alg = &alg;
    out.proj.dims.assign(nv, 0);
    // offsets[v][k] = offset of copy k of P_v inside the w-component
    // easier: build per-vertex concatenation order: for v' (cover summand vertex), copy k:
    // its P_{v'} contributes dims at each w.
    std::vector<std::vector<std::vector<int>>> offset(nv); // [summand v'][copy][w]
    for (int vp = 0; vp < nv; ++vp) {
        offset[vp].resize(out.mult[vp]);
        for (int k = 0; k < out.mult[vp]; ++k) offset[vp][k].assign(nv, 0);
    }
    for (int w = 0; w < nv; ++w) {
        int off = 0;
        for (int vp = 0; vp < nv; ++vp)
            for (int k = 0; k < out.mult[vp]; ++k) {
                offset[vp][k][w] = off;
                off += protos[vp].mod.dims[w];
            }
        out.proj.dims[w] = off;
    }
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) {
        int u = alg.quiver.arrows[a].src, w = alg.quiver.arrows[a].tgt;
        Mat<F> m = Mat<F>::zero(f, out.proj.dims[w], out.proj.dims[u]);
        for (int vp = 0; vp < nv; ++vp)
            for (int k = 0; k < out.mult[vp]; ++k) {
                const Mat<F>& blk = protos[vp].mod.act[a];
                for (std::size_t r = 0; r < blk.rows; ++r)
                    for (std::size_t c = 0; c < blk.cols; ++c)
                        m.at(offset[vp][k][w] + r, offset[vp][k][u] + c) = blk.at(r, c);
            }
        out.proj.act.push_back(std::move(m));
    }
    // epimorphism: generator (vp, k) -> tops[vp][k]; basis label l of P_vp
    // maps to tops[vp][k] * path(l)
    out.epi.resize(nv);
    for (int w = 0; w < nv; ++w) out.epi[w] = Mat<F>::zero(f, M.dims[w], out.proj.dims[w]);
    for (int vp = 0; vp < nv; ++vp)
        for (int k = 0; k < out.mult[vp]; ++k)
            for (int w = 0; w < nv; ++w)
                for (std::size_t pos = 0; pos < protos[vp].basis_labels[w].size(); ++pos) {
                    int l = protos[vp].basis_labels[w][pos];
                    Mat<F> pa = path_action(M, alg.labels[l]);
                    // image = pa * tops[vp][k]
                    for (int r = 0; r < M.dims[w]; ++r) {
                        auto s = f.zero();
                        for (int c = 0; c < M.dims[vp]; ++c)
                            s = f.add(s, f.mul(pa.at(r, c), tops[vp][k][c]));
                        out.epi[w].at(r, offset[vp][k][w] + pos) = s;
                    }
                }
    // surjectivity check
    for (int w = 0; w < nv; ++w) {
        Mat<F> cp = out.epi[w];
        if (rank_of(f, cp) != static_cast<std::size_t>(M.dims[w]))
            throw AlgebraError("projective cover: epimorphism is not surjective");
    }
    return out;
}

/// Kernel of the cover epimorphism, with rank-nullity enforced.
template <class F>
RightModule<F> syzygy(const RightModule<F>& M)
{
    const F& f = M.alg->field;
    auto cov = projective_cover(M);
    const int nv = static_cast<int>(M.dims.size());
    std::vector<std::vector<std::vector<typename F::Elem>>> gens(nv);
    for (int v = 0; v < nv; ++v) {
        Mat<F> ker = kernel_basis(f, cov.epi[v]);
        for (std::size_t k = 0; k < ker.rows; ++k) {
            std::vector<typename F::Elem> x(cov.proj.dims[v]);
            for (int c = 0; c < cov.proj.dims[v]; ++c) x[c] = ker.at(k, c);
            gens[v].push_back(std::move(x));
        }
    }
    auto sub = submodule_from_generators(cov.proj, gens, false);
    if (sub.mod.total_dim() != cov.proj.total_dim() - M.total_dim())
        throw AlgebraError("syzygy: rank-nullity violated");
    return sub.mod;
}

/// Per-vertex matrices intertwining the actions.
template <class F>
using ModuleHom = std::vector<Mat<F>>;

template <class F>
std::vector<ModuleHom<F>> hom_space(const RightModule<F>& M, const RightModule<F>& N)
{
    const F& f = M.alg->field;
    const int nv = static_cast<int>(M.dims.size());
    std::vector<int> var_off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + N.dims[v] * M.dims[v];
    int nvars = var_off[nv];
    if (nvars == 0) return {};
    std::size_t neq = 0;
    for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
        int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
        neq += static_cast<std::size_t>(N.dims[w]) * M.dims[u];
    }
    Mat<F> sys = Mat<F>::zero(f, neq ? neq : 1, nvars);
    std::size_t row = 0;
    for (int a = 0; a < M.alg->quiver.num_arrows(); ++a) {
        int u = M.alg->quiver.arrows[a].src, w = M.alg->quiver.arrows[a].tgt;
        // h[w] * actM[a] - actN[a] * h[u] = 0; unknowns h[v](r, c) at
        // var_off[v] + r * M.dims[v] + c
        for (int r = 0; r < N.dims[w]; ++r)
            for (int c = 0; c < M.dims[u]; ++c) {
                for (int t = 0; t < M.dims[w]; ++t)
                    sys.at(row, var_off[w] + r * M.dims[w] + t) =
                        f.add(sys.at(row, var_off[w] + r * M.dims[w] + t), M.act[a].at(t, c));
                for (int t = 0; t < N.dims[u]; ++t)
                    sys.at(row, var_off[u] + t * M.dims[u] + c) =
                        f.sub(sys.at(row, var_off[u] + t * M.dims[u] + c),
                              N.act[a].at(r, t));
                ++row;
            }
    }
    Mat<F> ker = kernel_basis(f, sys);
    std::vector<ModuleHom<F>> out;
    for (std::size_t k = 0; k < ker.rows; ++k) {
        ModuleHom<F> h(nv);
        for (int v = 0; v < nv; ++v) {
            h[v] = Mat<F>::zero(f, N.dims[v], M.dims[v]);
            for (int r = 0; r < N.dims[v]; ++r)
                for (int c = 0; c < M.dims[v]; ++c)
                    h[v].at(r, c) = ker.at(k, var_off[v] + r * M.dims[v] + c);
        }
        out.push_back(std::move(h));
    }
    return out;
}

enum class IsoVerdict { yes, no, inconclusive };

inline const char* iso_verdict_name(IsoVerdict v)
{
    switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    default: return "inconclusive";
    }
}

template <class F>
std::vector<std::vector<int>> radical_series_dims(const RightModule<F>& M, int max_k = 64)
{
    std::vector<std::vector<int>> out;
    out.push_back(M.dims);
    RightModule<F> cur = M;
    for (int k = 0; k < max_k; ++k) {
        auto rad = radical_submodule(cur);
        out.push_back(rad.mod.dims);
        if (rad.mod.total_dim() == 0) break;
        if (rad.mod.total_dim() == cur.total_dim())
            throw AlgebraError("module radical series does not terminate");
        cur = rad.mod;
    }
    return out;
}

/// Invariant screen, then randomized search for an invertible hom; a
/// deterministic small-coefficient sweep backs up tiny Hom spaces.
template <class F>
IsoVerdict is_isomorphic(const RightModule<F>& M, const RightModule<F>& N, std::uint64_t seed,
                         int samples = 32)
{
    const F& f = M.alg->field;
    if (M.total_dim() != N.total_dim()) return IsoVerdict::no;
    if (M.dims != N.dims) return IsoVerdict::no;
    if (M.total_dim() == 0) return IsoVerdict::yes;
    if (radical_series_dims(M) != radical_series_dims(N)) return IsoVerdict::no;

    auto homs = hom_space(M, N);
    if (homs.empty()) return IsoVerdict::no;

    const int nv = static_cast<int>(M.dims.size());
    auto invertible = [&](const ModuleHom<F>& h) {
        for (int v = 0; v < nv; ++v) {
            if (h[v].rows != h[v].cols) return false;
            Mat<F> cp = h[v];
            if (rank_of(f, cp) != cp.rows) return false;
        }
        return true;
    };
    auto combine = [&](const std::vector<typename F::Elem>& coeff) {
        ModuleHom<F> h(nv);
        for (int v = 0; v < nv; ++v) h[v] = Mat<F>::zero(f, N.dims[v], M.dims[v]);
        for (std::size_t k = 0; k < homs.size(); ++k) {
            if (f.is_zero(coeff[k])) continue;
            for (int v = 0; v < nv; ++v)
                for (std::size_t z = 0; z < h[v].a.size(); ++z)
                    h[v].a[z] = f.add(h[v].a[z], f.mul(coeff[k], homs[k][v].a[z]));
        }
        return h;
    };

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<typename F::Elem> coeff;
        for (std::size_t k = 0; k < homs.size(); ++k)
            coeff.push_back(f.from_long(static_cast<long long>(rng() % 1024) - 512));
        if (invertible(combine(coeff))) return IsoVerdict::yes;
    }
    if (homs.size() <= 4) {
        // exhaustive sweep over a small coefficient lattice
        std::vector<long long> vals{0, 1, -1, 2, -2};
        std::vector<std::size_t> idx(homs.size(), 0);
        while (true) {
            std::vector<typename F::Elem> coeff;
            for (std::size_t k = 0; k < homs.size(); ++k)
                coeff.push_back(f.from_long(vals[idx[k]]));
            if (invertible(combine(coeff))) return IsoVerdict::yes;
            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] == vals.size()) idx[d++] = 0;
            if (d == idx.size()) break;
        }
    }
    return IsoVerdict::inconclusive;
}

/// Syzygy iteration record for one simple module.
struct PeriodicityReport {
    int vertex = 0;
    std::vector<int> syzygy_dims;                 // dims of Omega^0..Omega^N
    std::vector<int> top_dims;                    // minimal generator counts
    std::vector<std::vector<int>> cover_shapes;   // per step: cover multiplicities per vertex
    std::vector<std::string> iso_verdicts;        // vs S_i at each step n >= 1
    int period_found = -1;
};

template <class F>
PeriodicityReport periodicity_report(const BasisAlgebra<F>& alg, int vertex, int max_n,
                                     std::uint64_t seed)
{
    if (max_n < 4) throw std::invalid_argument("periodicity_report: max_n must be >= 4");
    PeriodicityReport rep;
    rep.vertex = vertex;
    auto S = simple_module(alg, vertex);
    RightModule<F> cur = S;
    rep.syzygy_dims.push_back(cur.total_dim());
    for (int n = 1; n <= max_n; ++n) {
        auto cov = projective_cover(cur);
        rep.top_dims.push_back(cov.top_dim);
        rep.cover_shapes.push_back(cov.mult);
        auto next = syzygy(cur);
        rep.syzygy_dims.push_back(next.total_dim());
        auto verdict = is_isomorphic(next, S, seed + static_cast<std::uint64_t>(n) * 1000003ull);
        rep.iso_verdicts.push_back(iso_verdict_name(verdict));
        cur = std::move(next);
        if (verdict == IsoVerdict::yes) {
            rep.period_found = n;
            break;
        }
        if (cur.zero()) break;
    }
    return rep;
}

} // namespace tetra
