#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/basis_algebra.hpp"
#include "tetra/fpmatrix.hpp"
#include "tetra/modules.hpp"
#include "tetra/path_algebra.hpp"

namespace tetra {

/// Direct sum of bimodule projectives P(i,j) = A e_i ⊗ e_j A over the
/// chosen vertex pairs. Elements are sparse vectors over the tensor basis
/// {b ⊗ b' : t(b) = i, s(b') = j}.
template <class F>
struct TensorSpace {
    struct Summand {
        int i = 0, j = 0;
        int offset = 0;
        std::vector<int> left;      // labels with tgt == i (basis of A e_i)
        std::vector<int> right;     // labels with src == j (basis of e_j A)
        std::vector<int> left_pos;  // label -> position or -1
        std::vector<int> right_pos;
    };
    const BasisAlgebra<F>* alg = nullptr;
    std::vector<Summand> summands;
    int dim = 0;

    int index(int s, int li, int ri) const
    {
        return summands[s].offset + li * static_cast<int>(summands[s].right.size()) + ri;
    }
};

template <class F>
using TVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>; // sorted ascending

template <class F>
TensorSpace<F> build_tensor_space(const BasisAlgebra<F>& alg,
                                  const std::vector<std::pair<int, int>>& pairs)
{
    TensorSpace<F> sp;
    sp.alg = &alg;
    int off = 0;
    for (auto [i, j] : pairs) {
        typename TensorSpace<F>::Summand s;
        s.i = i;
        s.j = j;
        s.offset = off;
        s.left_pos.assign(alg.dim(), -1);
        s.right_pos.assign(alg.dim(), -1);
        for (int l = 0; l < alg.dim(); ++l) {
            if (alg.tgt_of(l) == i) {
                s.left_pos[l] = static_cast<int>(s.left.size());
                s.left.push_back(l);
            }
            if (alg.src_of(l) == j) {
                s.right_pos[l] = static_cast<int>(s.right.size());
                s.right.push_back(l);
            }
        }
        off += static_cast<int>(s.left.size() * s.right.size());
        sp.summands.push_back(std::move(s));
    }
    sp.dim = off;
    return sp;
}

template <class F>
TVec<F> tv_add(const F& f, const TVec<F>& a, const TVec<F>& b, typename F::Elem c)
{
    TVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) {
            auto v = f.mul(b[j].second, c);
            if (!f.is_zero(v)) out.push_back({b[j].first, v});
            ++j;
        } else {
            auto v = f.add(a[i].second, f.mul(b[j].second, c));
            if (!f.is_zero(v)) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

/// z * v for z an algebra element (acts on the left tensor factor).
template <class F>
TVec<F> tensor_left_mul(const TensorSpace<F>& sp, const SVec<F>& z, const TVec<F>& v)
{
    const F& f = sp.alg->field;
    TVec<F> out;
    for (const auto& [idx, c] : v) {
        // locate summand
        int s = static_cast<int>(sp.summands.size()) - 1;
        while (sp.summands[s].offset > static_cast<int>(idx)) --s;
        const auto& sm = sp.summands[s];
        int rest = static_cast<int>(idx) - sm.offset;
        int li = rest / static_cast<int>(sm.right.size());
        int ri = rest % static_cast<int>(sm.right.size());
        for (const auto& [zl, zc] : z) {
            auto prod = sp.alg->mul_labels(zl, sm.left[li]);
            for (const auto& [pl, pc] : prod) {
                int pos = sm.left_pos[pl];
                if (pos < 0) throw AlgebraError("tensor left action leaves the summand");
                out = tv_add(f, out,
                             TVec<F>{{(std::uint32_t)sp.index(s, pos, ri), f.one()}},
                             f.mul(c, f.mul(zc, pc)));
            }
        }
    }
    return out;
}

template <class F>
TVec<F> tensor_right_mul(const TensorSpace<F>& sp, const TVec<F>& v, const SVec<F>& z)
{
    const F& f = sp.alg->field;
    TVec<F> out;
    for (const auto& [idx, c] : v) {
        int s = static_cast<int>(sp.summands.size()) - 1;
        while (sp.summands[s].offset > static_cast<int>(idx)) --s;
        const auto& sm = sp.summands[s];
        int rest = static_cast<int>(idx) - sm.offset;
        int li = rest / static_cast<int>(sm.right.size());
        int ri = rest % static_cast<int>(sm.right.size());
        for (const auto& [zl, zc] : z) {
            auto prod = sp.alg->mul_labels(sm.right[ri], zl);
            for (const auto& [pl, pc] : prod) {
                int pos = sm.right_pos[pl];
                if (pos < 0) throw AlgebraError("tensor right action leaves the summand");
                out = tv_add(f, out,
                             TVec<F>{{(std::uint32_t)sp.index(s, li, pos), f.one()}},
                             f.mul(c, f.mul(zc, pc)));
            }
        }
    }
    return out;
}

/// Map between tensor spaces determined by generator images; columns are
/// materialized as x . gen . y over the full tensor basis.
template <class F>
struct BimoduleMap {
    const TensorSpace<F>* dom = nullptr;
    const TensorSpace<F>* cod = nullptr;
    std::vector<TVec<F>> gen_img; // per domain summand
    std::vector<TVec<F>> col;     // per domain tensor index
};

template <class F>
void build_columns(BimoduleMap<F>& m)
{
    const auto& dom = *m.dom;
    const auto& cod = *m.cod;
    const F& f = dom.alg->field;
    m.col.assign(dom.dim, {});
    for (std::size_t s = 0; s < dom.summands.size(); ++s) {
        const auto& sm = dom.summands[s];
        for (std::size_t li = 0; li < sm.left.size(); ++li) {
            SVec<F> x{{(std::uint32_t)sm.left[li], f.one()}};
            TVec<F> ximg = tensor_left_mul(cod, x, m.gen_img[s]);
            for (std::size_t ri = 0; ri < sm.right.size(); ++ri) {
                SVec<F> y{{(std::uint32_t)sm.right[ri], f.one()}};
                m.col[dom.index(static_cast<int>(s), static_cast<int>(li),
                                static_cast<int>(ri))] = tensor_right_mul(cod, ximg, y);
            }
        }
    }
}

/// B ∘ A as columns of the composite over A's domain.
template <class F>
std::vector<TVec<F>> compose_columns(const F& f, const std::vector<TVec<F>>& a_cols,
                                     const std::vector<TVec<F>>& b_cols)
{
    std::vector<TVec<F>> out(a_cols.size());
    for (std::size_t c = 0; c < a_cols.size(); ++c) {
        TVec<F> acc;
        for (const auto& [mid, coeff] : a_cols[c]) acc = tv_add(f, acc, b_cols[mid], coeff);
        out[c] = std::move(acc);
    }
    return out;
}

template <class T>
bool columns_zero(const std::vector<std::vector<std::pair<std::uint32_t, T>>>& cols)
{
    for (const auto& c : cols)
        if (!c.empty()) return false;
    return true;
}

template <class F>
std::size_t columns_rank(const F& f, std::size_t codim, const std::vector<TVec<F>>& cols)
{
    if constexpr (F::is_prime_field) {
        std::vector<SparseEntry> entries;
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : cols[c])
                entries.push_back({r, static_cast<std::uint32_t>(c), v});
        return sparse_rank_fp(f, codim, cols.size(), entries);
    } else {
        Mat<F> m = Mat<F>::zero(f, codim, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : cols[c]) m.at(r, c) = v;
        return rank_of(f, m);
    }
}

/// pi : KQ -> P1, a path a_1...a_m goes to
/// sum_k (a_1...a_{k-1}) ⊗ (a_{k+1}...a_m) in the summand of a_k.
template <class F>
TVec<F> pi_embed(const TensorSpace<F>& p1, const FreeElem<F>& x)
{
    const BasisAlgebra<F>& alg = *p1.alg;
    const F& f = alg.field;
    const Quiver& q = alg.quiver;
    TVec<F> out;
    for (const auto& [p, c] : x.terms) {
        for (int k = 0; k < p.length(); ++k) {
            int a = p.arrows[k];
            Path pre = make_path(q, p.src, {p.arrows.begin(), p.arrows.begin() + k});
            Path suf = make_path(q, q.arrows[a].tgt, {p.arrows.begin() + k + 1, p.arrows.end()});
            auto pre_nf = alg.eval_path(pre);
            auto suf_nf = alg.eval_path(suf);
            const auto& sm = p1.summands[a];
            for (const auto& [u, cu] : pre_nf)
                for (const auto& [v, cv] : suf_nf) {
                    int li = sm.left_pos[u], ri = sm.right_pos[v];
                    if (li < 0 || ri < 0) throw AlgebraError("pi embedding misplaced");
                    out = tv_add(f, out, TVec<F>{{(std::uint32_t)p1.index(a, li, ri), f.one()}},
                                 f.mul(c, f.mul(cu, cv)));
                }
        }
    }
    return out;
}

/// The first terms of the bimodule resolution of the algebra, with the
/// explicit differentials and the comparison map theta.
template <class F>
struct BimoduleResolution {
    TensorSpace<F> P0, P1, P2, P3;
    std::vector<TVec<F>> d0_col;    // P0 -> A, columns are SVec-compatible over labels
    BimoduleMap<F> d;               // P1 -> P0
    BimoduleMap<F> R;               // P2 -> P1
    BimoduleMap<F> S;               // P3 -> P2
    std::vector<TVec<F>> theta_col; // A -> P3, one column per algebra label
    std::vector<int> p2_arrow;      // arrow order of the P2 summands
};

template <class F>
BimoduleResolution<F> build_bimodule_resolution(const BasisAlgebra<F>& alg,
                                                const TriangulationQuiver& tq,
                                                const Presentation<F>& pres,
                                                const GramForm<F>& gram)
{
    const F& f = alg.field;
    const Quiver& q = alg.quiver;
    const int nv = q.num_vertices();
    const int na = q.num_arrows();
    BimoduleResolution<F> res;

    std::vector<std::pair<int, int>> diag;
    for (int v = 0; v < nv; ++v) diag.push_back({v, v});
    res.P0 = build_tensor_space(alg, diag);
    std::vector<std::pair<int, int>> arr;
    for (int a = 0; a < na; ++a) arr.push_back({q.arrows[a].src, q.arrows[a].tgt});
    res.P1 = build_tensor_space(alg, arr);
    std::vector<std::pair<int, int>> rel_pairs;
    for (int a = 0; a < na; ++a) {
        rel_pairs.push_back({q.arrows[a].src, q.arrows[tq.f[a]].tgt});
        res.p2_arrow.push_back(a);
    }
    res.P2 = build_tensor_space(alg, rel_pairs);
    res.P3 = build_tensor_space(alg, diag);

    // d0(e_i ⊗ e_i) = e_i: column of (x ⊗ y) in P(i,i) is x*y
    res.d0_col.assign(res.P0.dim, {});
    for (int s = 0; s < nv; ++s) {
        const auto& sm = res.P0.summands[s];
        for (std::size_t li = 0; li < sm.left.size(); ++li)
            for (std::size_t ri = 0; ri < sm.right.size(); ++ri) {
                auto prod = alg.mul_labels(sm.left[li], sm.right[ri]);
                TVec<F> col;
                for (const auto& [l, c] : prod) col.push_back({(std::uint32_t)l, c});
                res.d0_col[res.P0.index(s, li, ri)] = std::move(col);
            }
    }

    // d(e_{s(a)} ⊗ e_{t(a)}) = a ⊗ e_{t(a)} - e_{s(a)} ⊗ a
    res.d.dom = &res.P1;
    res.d.cod = &res.P0;
    for (int a = 0; a < na; ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].tgt;
        TVec<F> gen;
        const auto& smi = res.P0.summands[i];
        const auto& smj = res.P0.summands[j];
        // a ⊗ e_j in P(j,j): left factor a has tgt j
        for (const auto& [al, ac] : alg.arrow_elem[a]) {
            int li = smj.left_pos[al];
            int ri = smj.right_pos[alg.idem_of_vertex(j)];
            gen = tv_add(f, gen, TVec<F>{{(std::uint32_t)res.P0.index(j, li, ri), f.one()}}, ac);
        }
        // - e_i ⊗ a in P(i,i)
        for (const auto& [al, ac] : alg.arrow_elem[a]) {
            int li = smi.left_pos[alg.idem_of_vertex(i)];
            int ri = smi.right_pos[al];
            gen = tv_add(f, gen, TVec<F>{{(std::uint32_t)res.P0.index(i, li, ri), f.one()}},
                         f.neg(ac));
        }
        res.d.gen_img.push_back(std::move(gen));
    }
    build_columns(res.d);

    // R(e_{s(th)} ⊗ e_{t(f th)}) = pi(mu_th).
    //
    // mu_th is the minimal relation with +1 term th*f(th). For the three
    // lambda-corrected relations, the correction term is rewritten along
    // the white g-cycle: (bar g(bar) g^2(bar))^{m-1} bar g(bar). This is
    // the same element of the ideal (verified below) but a different path
    // representative, and it is the unique representative choice for
    // which R(psi_i) = 0 holds on the nose at every vertex.
    auto rel_of = minimal_relation_of_arrow(f, pres, tq);
    res.R.dom = &res.P2;
    res.R.cod = &res.P1;
    for (int a = 0; a < na; ++a) {
        const auto& orig = pres.relations[rel_of[a]];
        FreeElem<F> mu = orig;
        if (orig.terms.size() == 3) {
            int bar = tq.bar[a];
            typename F::Elem corr_coeff = f.zero();
            int corr_len = 0;
            for (const auto& [p, c] : orig.terms)
                if (p.length() > 2) {
                    corr_coeff = c;
                    corr_len = p.length();
                }
            std::vector<int> word;
            int cur = bar;
            for (int k = 0; k < corr_len; ++k) {
                word.push_back(cur);
                cur = tq.g[cur];
            }
            Path key = make_path(q, q.arrows[a].src, {a, tq.f[a]});
            Path rhs = make_path(q, q.arrows[bar].src, {bar, tq.g[bar]});
            Path corr = make_path(q, q.arrows[bar].src, word);
            mu = fe_canonical(f, {{key, f.one()}, {rhs, f.neg(f.one())}, {corr, corr_coeff}});
            if (!alg.eval(mu).empty())
                throw AlgebraError("rewritten minimal relation leaves the ideal");
        }
        res.R.gen_img.push_back(pi_embed(res.P1, mu));
    }
    build_columns(res.R);

    // S(e_i ⊗ e_i) = psi_i = sum_{tau: s(tau)=i} [gen_tau * f^2(tau) - tau * gen_{f(tau)}]
    res.S.dom = &res.P3;
    res.S.cod = &res.P2;
    for (int i = 0; i < nv; ++i) {
        TVec<F> psi;
        for (int tau = 0; tau < na; ++tau) {
            if (q.arrows[tau].src != i) continue;
            int ftau = tq.f[tau];
            int f2tau = tq.f[ftau];
            // generator of the P2 summand of tau is e_{s(tau)} ⊗ e_{t(f tau)}
            const auto& smt = res.P2.summands[tau];
            TVec<F> gen_tau{{(std::uint32_t)res.P2.index(
                                tau, smt.left_pos[alg.idem_of_vertex(smt.i)],
                                smt.right_pos[alg.idem_of_vertex(smt.j)]),
                            f.one()}};
            psi = tv_add(f, psi, tensor_right_mul(res.P2, gen_tau, alg.arrow_elem[f2tau]), f.one());
            const auto& smf = res.P2.summands[ftau];
            TVec<F> gen_ftau{{(std::uint32_t)res.P2.index(
                                 ftau, smf.left_pos[alg.idem_of_vertex(smf.i)],
                                 smf.right_pos[alg.idem_of_vertex(smf.j)]),
                             f.one()}};
            psi = tv_add(f, psi, tensor_left_mul(res.P2, alg.arrow_elem[tau], gen_ftau),
                         f.neg(f.one()));
        }
        res.S.gen_img.push_back(std::move(psi));
    }
    build_columns(res.S);

    // theta(x) = x * xi, xi = sum_i sum_{b in B_i} b ⊗ b*
    auto duals = dual_basis(alg, gram);
    TVec<F> xi;
    for (int b = 0; b < alg.dim(); ++b) {
        int tb = alg.tgt_of(b);
        const auto& sm = res.P3.summands[tb];
        for (const auto& [c, cv] : duals[b]) {
            int li = sm.left_pos[b];
            int ri = sm.right_pos[c];
            if (li < 0 || ri < 0)
                throw AlgebraError("dual basis element misplaced in P3");
            xi = tv_add(f, xi, TVec<F>{{(std::uint32_t)res.P3.index(tb, li, ri), f.one()}}, cv);
        }
    }
    res.theta_col.assign(alg.dim(), {});
    for (int l = 0; l < alg.dim(); ++l)
        res.theta_col[l] =
            tensor_left_mul(res.P3, SVec<F>{{(std::uint32_t)l, f.one()}}, xi);
    // bimodule-hom check: a*xi = xi*a for all arrows (and e_i trivially)
    for (int a = 0; a < na; ++a) {
        auto lhs = tensor_left_mul(res.P3, alg.arrow_elem[a], xi);
        auto rhs = tensor_right_mul(res.P3, xi, alg.arrow_elem[a]);
        if (lhs != rhs) throw AlgebraError("theta is not a bimodule homomorphism");
    }
    return res;
}

struct ResolutionCertificate {
    int dim_alg = 0;
    int dim_p0 = 0, dim_p1 = 0, dim_p2 = 0, dim_p3 = 0;
    std::size_t rank_d0 = 0, rank_d = 0, rank_r = 0, rank_s = 0, rank_theta = 0;
    bool d0_after_d_zero = false;
    bool d_after_r_zero = false;
    bool r_after_s_zero = false;
    bool s_after_theta_zero = false;
    bool exact_at_p0 = false, exact_at_p1 = false, exact_at_p2 = false;
    bool omega4_isomorphic = false; // theta: A ~ Ker S by rank comparison
    bool ext_multiplicities_ok = false;
    std::string note;
};

template <class F>
ResolutionCertificate certify_resolution(const BasisAlgebra<F>& alg,
                                         const BimoduleResolution<F>& res)
{
    const F& f = alg.field;
    ResolutionCertificate c;
    c.dim_alg = alg.dim();
    c.dim_p0 = res.P0.dim;
    c.dim_p1 = res.P1.dim;
    c.dim_p2 = res.P2.dim;
    c.dim_p3 = res.P3.dim;

    c.d0_after_d_zero = columns_zero(compose_columns(f, res.d.col, res.d0_col));
    c.d_after_r_zero = columns_zero(compose_columns(f, res.R.col, res.d.col));
    c.r_after_s_zero = columns_zero(compose_columns(f, res.S.col, res.R.col));
    c.s_after_theta_zero = columns_zero(compose_columns(f, res.theta_col, res.S.col));

    c.rank_d0 = columns_rank(f, alg.dim(), res.d0_col);
    c.rank_d = columns_rank(f, res.P0.dim, res.d.col);
    c.rank_r = columns_rank(f, res.P1.dim, res.R.col);
    c.rank_s = columns_rank(f, res.P2.dim, res.S.col);
    c.rank_theta = columns_rank(f, res.P3.dim, res.theta_col);

    c.exact_at_p0 = c.rank_d == static_cast<std::size_t>(res.P0.dim) - c.rank_d0;
    c.exact_at_p1 = c.rank_r == static_cast<std::size_t>(res.P1.dim) - c.rank_d;
    c.exact_at_p2 = c.rank_s == static_cast<std::size_t>(res.P2.dim) - c.rank_r;
    c.omega4_isomorphic = c.s_after_theta_zero &&
                          c.rank_theta == static_cast<std::size_t>(alg.dim()) &&
                          c.rank_theta == static_cast<std::size_t>(res.P3.dim) - c.rank_s;
    return c;
}

/// Cross-check the P_n summand multiplicities against Ext^n(S_i, S_j)
/// read off the minimal resolutions of the simples (cover multiplicities).
template <class F>
bool ext_multiplicity_crosscheck(const BasisAlgebra<F>& alg, const TriangulationQuiver& tq,
                                 std::string* note)
{
    const Quiver& q = alg.quiver;
    const int nv = q.num_vertices();
    const int na = q.num_arrows();
    bool ok = true;
    std::string msg;
    for (int i = 0; i < nv; ++i) {
        RightModule<F> cur = simple_module(alg, i);
        std::vector<std::vector<int>> covers; // steps 0..3
        for (int n = 0; n <= 3; ++n) {
            auto cov = projective_cover(cur);
            covers.push_back(cov.mult);
            cur = syzygy(cur);
        }
        // Ext^1(S_i, S_j) = #arrows i -> j
        for (int j = 0; j < nv; ++j) {
            int arrows_ij = 0;
            for (int a = 0; a < na; ++a)
                if (q.arrows[a].src == i && q.arrows[a].tgt == j) ++arrows_ij;
            if (covers[1][j] != arrows_ij) {
                ok = false;
                msg += "Ext1 mismatch at (" + q.vertex_names[i] + "," + q.vertex_names[j] + "); ";
            }
        }
        // Ext^2(S_i, S_j) = #{arrows th: s(th) = i, t(f th) = j}
        for (int j = 0; j < nv; ++j) {
            int cnt = 0;
            for (int a = 0; a < na; ++a)
                if (q.arrows[a].src == i && q.arrows[tq.f[a]].tgt == j) ++cnt;
            if (covers[2][j] != cnt) {
                ok = false;
                msg += "Ext2 mismatch at (" + q.vertex_names[i] + "," + q.vertex_names[j] + "); ";
            }
        }
        // Ext^3(S_i, S_j) = delta_ij
        for (int j = 0; j < nv; ++j)
            if (covers[3][j] != (i == j ? 1 : 0)) {
                ok = false;
                msg += "Ext3 mismatch at (" + q.vertex_names[i] + "," + q.vertex_names[j] + "); ";
            }
    }
    if (note) *note = msg;
    return ok;
}

} // namespace tetra
