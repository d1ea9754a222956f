#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/basis_algebra.hpp"
#include "tetra/matrix.hpp"

namespace tetra {

template <class F>
std::vector<std::vector<int>> cartan_matrix(const BasisAlgebra<F>& alg)
{
    return vertex_grading_counts(alg);
}

/// Incremental row-space accumulator over dense coordinates.
template <class F>
class SpanBuilder {
public:
    SpanBuilder(const F& f, std::size_t width) : f_(f), width_(width) {}

    /// Returns true when v enlarged the span. v is consumed.
    bool insert(std::vector<typename F::Elem> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto piv = v[pivot_[r]];
            if (!f_.is_zero(piv)) {
                auto c = f_.neg(piv);
                for (std::size_t j = 0; j < width_; ++j)
                    v[j] = f_.add(v[j], f_.mul(c, rows_[r][j]));
            }
        }
        std::size_t p = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (!f_.is_zero(v[j])) { p = j; break; }
        if (p == width_) return false;
        auto inv = f_.inv(v[p]);
        for (std::size_t j = 0; j < width_; ++j) v[j] = f_.mul(v[j], inv);
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<typename F::Elem>>& rows() const { return rows_; }

private:
    const F& f_;
    std::size_t width_;
    std::vector<std::vector<typename F::Elem>> rows_;
    std::vector<std::size_t> pivot_;
};

template <class F>
struct LoewyData {
    int loewy_length = 0;                        // min k with rad^k = 0
    std::vector<std::vector<int>> radical_dims;  // [k][vertex] = dim e_v rad^k
    std::vector<int> socle_dims;                 // per vertex: dim of right socle of e_v A
    std::vector<int> socle_label;                // per vertex: label index when the socle is a single label, else -1
    std::vector<SVec<F>> socle_vec;              // per vertex: spanning vector when 1-dimensional
};

/// Radical as the span of positive-length labels; valid because both
/// constructions produce bases whose products never drop below the
/// concatenated length. Nilpotence is verified, not assumed: if radical
/// powers stabilize without vanishing the algebra is not length-graded
/// and we refuse.
template <class F>
LoewyData<F> socle_and_radical_series(const BasisAlgebra<F>& alg)
{
    const F& f = alg.field;
    const int n = alg.dim();
    const int nv = alg.quiver.num_vertices();
    LoewyData<F> out;

    out.radical_dims.push_back(std::vector<int>(nv, 0)); // rad^0 = algebra
    for (int l = 0; l < n; ++l) out.radical_dims[0][alg.src_of(l)]++;

    // rad^1 = span of positive-length labels; rad^{k+1} = rad^k * rad
    std::vector<SVec<F>> cur;
    for (int l = 0; l < n; ++l)
        if (alg.len_of(l) > 0) cur.push_back(SVec<F>{{(std::uint32_t)l, f.one()}});
    std::vector<SVec<F>> positives = cur;

    int guard = n + 2;
    while (true) {
        if (--guard == 0) throw AlgebraError("radical powers do not vanish; algebra not graded");
        std::vector<SpanBuilder<F>> per(nv, SpanBuilder<F>(f, n));
        std::vector<SVec<F>> reduced;
        for (const auto& x : cur) {
            if (x.empty()) continue;
            int srcv = alg.src_of(static_cast<int>(x[0].first));
            if (per[srcv].insert(alg.dense(x))) reduced.push_back(x);
        }
        std::vector<int> dims(nv, 0);
        for (int v = 0; v < nv; ++v) dims[v] = static_cast<int>(per[v].rank());
        out.radical_dims.push_back(dims);
        bool empty = true;
        for (int v = 0; v < nv; ++v) empty &= dims[v] == 0;
        if (empty) break;
        std::vector<SVec<F>> next;
        for (const auto& x : reduced)
            for (const auto& p : positives) {
                auto prod = alg.mul(x, p);
                if (!prod.empty()) next.push_back(std::move(prod));
            }
        cur = std::move(next);
    }
    out.radical_dims.pop_back(); // drop the recorded all-zero level
    out.loewy_length = static_cast<int>(out.radical_dims.size());

    // right socle of e_v A: x with x * arrow = 0 for every arrow
    out.socle_dims.assign(nv, 0);
    out.socle_label.assign(nv, -1);
    out.socle_vec.assign(nv, SVec<F>{});
    for (int v = 0; v < nv; ++v) {
        std::vector<int> mine;
        for (int l = 0; l < n; ++l)
            if (alg.src_of(l) == v) mine.push_back(l);
        // rows: for each label of e_vA stacked over all arrow actions
        int na = alg.quiver.num_arrows();
        Mat<F> sys = Mat<F>::zero(f, static_cast<std::size_t>(n) * na, mine.size());
        for (std::size_t c = 0; c < mine.size(); ++c) {
            for (int a = 0; a < na; ++a) {
                if (alg.arrow_elem[a].empty()) continue;
                auto prod = alg.mul(SVec<F>{{(std::uint32_t)mine[c], f.one()}}, alg.arrow_elem[a]);
                for (const auto& [idx, cf] : prod)
                    sys.at(static_cast<std::size_t>(a) * n + idx, c) = cf;
            }
        }
        Mat<F> ker = kernel_basis(f, sys);
        out.socle_dims[v] = static_cast<int>(ker.rows);
        if (ker.rows == 1) {
            SVec<F> vec;
            int nonzero = -1;
            bool single = true;
            for (std::size_t c = 0; c < ker.cols; ++c)
                if (!f.is_zero(ker.at(0, c))) {
                    if (nonzero >= 0) single = false;
                    nonzero = static_cast<int>(c);
                    vec.push_back({(std::uint32_t)mine[c], ker.at(0, c)});
                }
            out.socle_vec[v] = std::move(vec);
            if (single && nonzero >= 0) out.socle_label[v] = mine[nonzero];
        }
    }
    return out;
}

template <class F>
struct GramForm {
    Mat<F> matrix;      // dim x dim
    bool symmetric = false;
    bool nonsingular = false;
    bool associative = false;
};

/// Symmetrizing bilinear form (x, y) = lambda(x*y) where lambda is the
/// linear functional reading, per vertex, the coordinate of the socle
/// spanning vector at its leading label (normalized so lambda(omega_v) = 1).
/// When the socle vectors are single labels — as in the combinatorial
/// basis — this is exactly "the coefficient of omega_i in the expansion".
/// Verifies symmetry, associativity on all basis triples and
/// non-degeneracy; a failure is a structured error.
template <class F>
GramForm<F> symmetrizing_form(const BasisAlgebra<F>& alg, const std::vector<SVec<F>>& socle_vecs)
{
    const F& f = alg.field;
    const int n = alg.dim();
    const int nv = alg.quiver.num_vertices();
    if (static_cast<int>(socle_vecs.size()) != nv)
        throw AlgebraError("symmetrizing_form: need one socle vector per vertex");
    std::vector<typename F::Elem> functional(n, f.zero());
    for (int v = 0; v < nv; ++v) {
        if (socle_vecs[v].empty()) throw AlgebraError("symmetrizing_form: empty socle vector");
        const auto& [lead, lead_c] = socle_vecs[v].back();
        if (!f.is_zero(functional[lead]))
            throw AlgebraError("symmetrizing_form: socle leading labels collide");
        functional[lead] = f.inv(lead_c);
    }
    auto pair_coeff = [&](const SVec<F>& prod) {
        auto c = f.zero();
        for (const auto& [idx, cf] : prod)
            if (!f.is_zero(functional[idx])) c = f.add(c, f.mul(cf, functional[idx]));
        return c;
    };

    GramForm<F> g;
    g.matrix = Mat<F>::zero(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.matrix.at(i, j) = pair_coeff(alg.mul_labels(i, j));

    g.symmetric = true;
    for (int i = 0; i < n && g.symmetric; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!f.eq(g.matrix.at(i, j), g.matrix.at(j, i))) {
                g.symmetric = false;
                break;
            }
    g.nonsingular = rank_of(f, g.matrix) == static_cast<std::size_t>(n);
    // associativity (ab, c) = (a, bc) on all triples
    g.associative = true;
    for (int a = 0; a < n && g.associative; ++a)
        for (int b = 0; b < n && g.associative; ++b) {
            const auto& ab = alg.mul_labels(a, b);
            for (int c = 0; c < n; ++c) {
                auto lhs = f.zero();
                for (const auto& [idx, cf] : ab) lhs = f.add(lhs, f.mul(cf, g.matrix.at(idx, c)));
                const auto& bc = alg.mul_labels(b, c);
                auto rhs = f.zero();
                for (const auto& [idx, cf] : bc) rhs = f.add(rhs, f.mul(cf, g.matrix.at(a, idx)));
                if (!f.eq(lhs, rhs)) { g.associative = false; break; }
            }
        }
    if (!g.symmetric || !g.nonsingular || !g.associative)
        throw AlgebraError(std::string("symmetrizing form failed: ") +
                           (!g.symmetric ? "not symmetric" : !g.nonsingular ? "singular"
                                                                            : "not associative"));
    return g;
}

/// Dual basis w.r.t. a non-degenerate pairing: (b, dual(b')) = delta.
template <class F>
std::vector<SVec<F>> dual_basis(const BasisAlgebra<F>& alg, const GramForm<F>& g)
{
    const F& f = alg.field;
    const int n = alg.dim();
    Mat<F> inv;
    if (!invert(f, g.matrix, inv)) throw AlgebraError("Gram matrix not invertible");
    // b*_j = sum_c inv(c, j) c  satisfies (b_i, b*_j) = (G * inv)_{ij} = delta_{ij}
    std::vector<SVec<F>> out(n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c)
            if (!f.is_zero(inv.at(c, j))) out[j].push_back({(std::uint32_t)c, inv.at(c, j)});
    return out;
}

/// Algebra map from a presentation into a target algebra: explicit
/// idempotent and arrow images. check verifies it is a well-defined
/// homomorphism (orthogonal idempotent images summing to 1, arrow
/// sandwiching, relations vanish) and whether the induced linear map on
/// the domain basis is bijective.
template <class F>
struct AlgebraMapImages {
    std::vector<SVec<F>> idem_img;  // per domain vertex
    std::vector<SVec<F>> arrow_img; // per domain arrow
};

struct MapCheck {
    bool is_homomorphism = false;
    bool is_bijective = false;
    std::size_t rank = 0;
    std::string failure;
};

template <class F>
SVec<F> map_eval_path(const BasisAlgebra<F>& target, const AlgebraMapImages<F>& img, const Path& p)
{
    SVec<F> acc = img.idem_img[p.src];
    for (int a : p.arrows) {
        acc = target.mul(acc, img.arrow_img[a]);
        if (acc.empty()) break;
    }
    return acc;
}

template <class F>
SVec<F> map_eval(const BasisAlgebra<F>& target, const AlgebraMapImages<F>& img,
                 const FreeElem<F>& x)
{
    SVec<F> out;
    for (const auto& [p, c] : x.terms)
        out = sv_add(target.field, out, map_eval_path(target, img, p), c);
    return out;
}

template <class F>
MapCheck check_algebra_map(const BasisAlgebra<F>& domain, const Presentation<F>& domain_pres,
                           const BasisAlgebra<F>& target, const AlgebraMapImages<F>& img)
{
    const F& f = target.field;
    MapCheck out;
    const int nv = domain_pres.quiver.num_vertices();
    // orthogonal idempotents summing to the identity
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            auto prod = target.mul(img.idem_img[i], img.idem_img[j]);
            auto want = i == j ? img.idem_img[i] : SVec<F>{};
            if (prod != want) {
                out.failure = "idempotent images not orthogonal idempotents";
                return out;
            }
        }
    {
        SVec<F> sum;
        for (int i = 0; i < nv; ++i) sum = sv_add(f, sum, img.idem_img[i], f.one());
        if (sum != target.one()) {
            out.failure = "idempotent images do not sum to 1";
            return out;
        }
    }
    for (int a = 0; a < domain_pres.quiver.num_arrows(); ++a) {
        const auto& arr = domain_pres.quiver.arrows[a];
        auto sandwich = target.mul(img.idem_img[arr.src], target.mul(img.arrow_img[a], img.idem_img[arr.tgt]));
        if (sandwich != img.arrow_img[a]) {
            out.failure = "arrow image not compatible with idempotent images: " + arr.name;
            return out;
        }
    }
    for (const auto& r : domain_pres.relations) {
        if (!map_eval(target, img, r).empty()) {
            out.failure = "relation does not vanish: " + fe_to_string(f, domain_pres.quiver, r);
            return out;
        }
    }
    out.is_homomorphism = true;
    // induced linear map on the domain basis
    Mat<F> m = Mat<F>::zero(f, target.dim(), domain.dim());
    for (int l = 0; l < domain.dim(); ++l) {
        auto v = map_eval_path(target, img, domain.labels[l]);
        for (const auto& [idx, c] : v) m.at(idx, l) = c;
    }
    out.rank = rank_of(f, m);
    out.is_bijective = domain.dim() == target.dim() && out.rank == static_cast<std::size_t>(domain.dim());
    return out;
}

/// Arrow-permutation map (vertex permutation + arrow -> arrow image),
/// e.g. the order-3 automorphism of the tetrahedral algebra.
template <class F>
AlgebraMapImages<F> arrow_map_images(const BasisAlgebra<F>& target, const QuiverAutomorphism& phi)
{
    AlgebraMapImages<F> img;
    const F& f = target.field;
    for (std::size_t v = 0; v < phi.vertex_map.size(); ++v)
        img.idem_img.push_back(target.idem_elem(phi.vertex_map[v]));
    for (std::size_t a = 0; a < phi.arrow_map.size(); ++a)
        img.arrow_img.push_back(target.arrow_elem[phi.arrow_map[a]]);
    (void)f;
    return img;
}

/// e A e for e the sum of the chosen vertex idempotents.
template <class F>
BasisAlgebra<F> idempotent_subalgebra(const BasisAlgebra<F>& alg, const std::vector<int>& verts,
                                      std::vector<int>* kept_labels_out = nullptr)
{
    if (verts.empty()) throw AlgebraError("idempotent_subalgebra: empty vertex set");
    const F& f = alg.field;
    std::vector<bool> take_v(alg.quiver.num_vertices(), false);
    for (int v : verts) take_v[v] = true;
    std::vector<int> keep;
    std::vector<int> new_index(alg.dim(), -1);
    for (int l = 0; l < alg.dim(); ++l)
        if (take_v[alg.src_of(l)] && take_v[alg.tgt_of(l)]) {
            new_index[l] = static_cast<int>(keep.size());
            keep.push_back(l);
        }
    BasisAlgebra<F> sub(f);
    sub.quiver = alg.quiver;
    sub.vertices = verts;
    for (int l : keep) sub.labels.push_back(alg.labels[l]);
    sub.idem.assign(verts.size(), -1);
    for (std::size_t s = 0; s < verts.size(); ++s) {
        int l = alg.idem_of_vertex(verts[s]);
        sub.idem[s] = new_index[l];
    }
    sub.arrow_elem.assign(alg.quiver.num_arrows(), SVec<F>{});
    sub.arrow_known.assign(alg.quiver.num_arrows(), false);
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) {
        if (!alg.arrow_classed(a)) continue;
        bool inside = true;
        SVec<F> conv;
        for (const auto& [idx, c] : alg.arrow_elem[a]) {
            if (new_index[idx] < 0) { inside = false; break; }
            conv.push_back({(std::uint32_t)new_index[idx], c});
        }
        if (inside) {
            sub.arrow_elem[a] = std::move(conv);
            sub.arrow_known[a] = true;
        }
    }
    const int d = static_cast<int>(keep.size());
    sub.table.assign(static_cast<std::size_t>(d) * d, SVec<F>{});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& prod = alg.mul_labels(keep[i], keep[j]);
            SVec<F> conv;
            for (const auto& [idx, c] : prod) {
                if (new_index[idx] < 0)
                    throw AlgebraError("idempotent subalgebra not closed under products");
                conv.push_back({(std::uint32_t)new_index[idx], c});
            }
            std::sort(conv.begin(), conv.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            sub.table[static_cast<std::size_t>(i) * d + j] = std::move(conv);
        }
    if (kept_labels_out) *kept_labels_out = keep;
    return sub;
}

/// Convert an element of the parent algebra supported on the subalgebra
/// into subalgebra coordinates.
template <class F>
SVec<F> restrict_to_subalgebra(const BasisAlgebra<F>& parent, const BasisAlgebra<F>& sub,
                               const SVec<F>& x)
{
    SVec<F> out;
    for (const auto& [idx, c] : x) {
        const Path& p = parent.labels[idx];
        int found = -1;
        for (int l = 0; l < sub.dim(); ++l)
            if (sub.labels[l] == p) { found = l; break; }
        if (found < 0) throw AlgebraError("element not supported on subalgebra");
        out.push_back({(std::uint32_t)found, c});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Presentation quotient by the ideal generated by a set of arrows:
/// arrows deleted, relation terms through a deleted arrow dropped.
template <class F>
Presentation<F> quotient_by_arrow_ideal(const F& f, const Presentation<F>& pres,
                                        const std::vector<std::string>& arrow_names)
{
    std::vector<bool> del(pres.quiver.num_arrows(), false);
    for (const auto& nm : arrow_names) {
        int a = pres.quiver.arrow_index(nm);
        if (a < 0) throw std::invalid_argument("quotient_by_arrow_ideal: unknown arrow " + nm);
        del[a] = true;
    }
    Presentation<F> out;
    out.quiver.vertex_names = pres.quiver.vertex_names;
    std::vector<int> arrow_rename(pres.quiver.num_arrows(), -1);
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        if (del[a]) continue;
        arrow_rename[a] = out.quiver.num_arrows();
        out.quiver.arrows.push_back(pres.quiver.arrows[a]);
    }
    out.param = pres.param;
    out.m = pres.m;
    out.length_bound = pres.length_bound;
    for (const auto& r : pres.relations) {
        std::vector<std::pair<Path, typename F::Elem>> terms;
        for (const auto& [p, c] : r.terms) {
            bool keep = true;
            for (int a : p.arrows) keep &= !del[a];
            if (!keep) continue;
            Path np = p;
            for (auto& a : np.arrows) a = arrow_rename[a];
            terms.push_back({np, c});
        }
        auto fe = fe_canonical(f, std::move(terms));
        if (!fe.zero()) out.relations.push_back(std::move(fe));
    }
    return out;
}

} // namespace tetra
