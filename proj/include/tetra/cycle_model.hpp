#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tetra/basis_algebra.hpp"
#include "tetra/path_algebra.hpp"

namespace tetra {

/// The combinatorial basis model of Lambda(m, lambda): basis built
/// directly from the cycle subwords and the bar-arrow families, with
/// multiplication given by path rewriting (every path of a given length
/// between two vertices has one normal form; the three exceptional
/// 3-cycles through vertices 2, 4, 5 expand with a lambda term). This is
/// an independent route to the algebra, used to cross-check the linear
/// algebra quotient.
template <class F>
struct CycleBasisModel {
    BasisAlgebra<F> alg;
    std::vector<int> omega_label;   // per vertex: label of X_i^m
    std::vector<int> x_label;       // per vertex: label of X_i (length 3)

    explicit CycleBasisModel(const F& f) : alg(f) {}
};

template <class F>
CycleBasisModel<F> cycle_basis_model(const F& f, int m, typename F::Elem lambda)
{
    if (m < 2) throw std::invalid_argument("cycle_basis_model: m >= 2 required");
    TriangulationQuiver tq = tetrahedral_quiver();
    const Quiver& q = tq.quiver;
    const int nv = q.num_vertices();

    CycleBasisModel<F> model(f);
    BasisAlgebra<F>& alg = model.alg;
    alg.quiver = q;
    alg.vertices.resize(nv);
    for (int v = 0; v < nv; ++v) alg.vertices[v] = v;

    // per-vertex basis: subwords of X^m, the bar-family, the mixed family
    std::vector<Path> labels;
    for (int v = 0; v < nv; ++v) {
        Path X = tetra_x_cycle(tq, v);
        int tau = X.arrows[0];
        int bar = tq.bar[tau];
        Path Xm = repeat_cycle(q, X, m);
        for (int len = 0; len <= 3 * m; ++len)
            labels.push_back(make_path(q, v, {Xm.arrows.begin(), Xm.arrows.begin() + len}));
        for (int k = 0; k <= m - 1; ++k) {
            Path base = repeat_cycle(q, X, k);
            labels.push_back(concat(q, base, make_path(q, v, {bar})));
            labels.push_back(concat(q, base, make_path(q, v, {bar, tq.f[bar]})));
        }
        for (int k = 0; k + 1 <= m - 1; ++k) {
            Path base = repeat_cycle(q, X, k);
            labels.push_back(
                concat(q, base, make_path(q, v, {tau, tq.f[tau], tq.g[tq.f[tau]]})));
        }
    }
    std::sort(labels.begin(), labels.end(), PathLess{});
    alg.labels = labels;
    const int dim = alg.dim();
    if (dim != 36 * m) throw AlgebraError("cycle-subword basis has unexpected size");

    auto label_of = [&](const Path& p) {
        auto it = std::lower_bound(alg.labels.begin(), alg.labels.end(), p, PathLess{});
        if (it == alg.labels.end() || !(*it == p)) return -1;
        return static_cast<int>(it - alg.labels.begin());
    };

    // unique label per (source, target, length); property (a) of the basis
    std::map<std::tuple<int, int, int>, int> by_stl;
    for (int l = 0; l < dim; ++l) {
        auto key = std::make_tuple(alg.src_of(l), alg.tgt_of(l), alg.len_of(l));
        if (by_stl.count(key)) throw AlgebraError("basis (source,target,length) collision");
        by_stl[key] = l;
    }

    model.omega_label.resize(nv);
    model.x_label.resize(nv);
    std::vector<Path> exceptional_cycle(nv); // the exceptional 3-cycle at vertices 2,4,5 (indices 1,3,4)
    for (int v = 0; v < nv; ++v) {
        model.omega_label[v] = by_stl.at({v, v, 3 * m});
        model.x_label[v] = by_stl.at({v, v, 3});
    }
    {
        auto A = [&](const char* n) { return q.arrow_index(n); };
        exceptional_cycle[1] = make_path(q, 1, {A("epsilon"), A("eta"), A("beta")}); // at vertex 2
        exceptional_cycle[3] = make_path(q, 3, {A("beta"), A("epsilon"), A("eta")}); // at vertex 4
        exceptional_cycle[4] = make_path(q, 4, {A("eta"), A("beta"), A("epsilon")}); // at vertex 5
    }

    // normal form of an arbitrary path
    auto nf_path = [&](const Path& p) -> SVec<F> {
        const int len = p.length();
        const int s = p.src, t = p.tgt;
        auto one_term = [&](int l) { return SVec<F>{{(std::uint32_t)l, f.one()}}; };
        if (len > 3 * m) return {};
        if (len == 3 * m) {
            if (s == t) return one_term(model.omega_label[s]);
            return {};
        }
        if (len <= 1) {
            int l = label_of(p);
            if (l < 0) throw AlgebraError("arrow missing from basis");
            return one_term(l);
        }
        if (len == 2) {
            int l = label_of(p);
            if (l >= 0) return one_term(l);
            // p = theta g(theta); rewrite via the relation of bar(theta)
            int theta = p.arrows[0];
            int bar = tq.bar[theta];
            Path basis2 = make_path(q, s, {bar, tq.f[bar]});
            int l2 = label_of(basis2);
            if (l2 < 0) throw AlgebraError("length-2 rewrite target missing");
            SVec<F> out = one_term(l2);
            bool corrected = (q.arrows[bar].name == "gamma" || q.arrows[bar].name == "rho" ||
                              q.arrows[bar].name == "xi");
            if (corrected && !f.is_zero(lambda)) {
                int llong = by_stl.at({s, t, 3 * m - 1});
                out = sv_add(f, out, one_term(llong), f.neg(lambda));
            }
            return out;
        }
        if (len == 3 && s == t && p == exceptional_cycle[s]) {
            SVec<F> out = one_term(model.x_label[s]);
            if (!f.is_zero(lambda))
                out = sv_add(f, out, one_term(model.omega_label[s]), f.neg(lambda));
            return out;
        }
        auto it = by_stl.find({s, t, len});
        if (it == by_stl.end()) throw AlgebraError("no basis element for path class");
        return one_term(it->second);
    };

    alg.idem.assign(nv, -1);
    for (int v = 0; v < nv; ++v) alg.idem[v] = by_stl.at({v, v, 0});
    alg.arrow_elem.assign(q.num_arrows(), SVec<F>{});
    for (int a = 0; a < q.num_arrows(); ++a)
        alg.arrow_elem[a] = nf_path(make_path(q, q.arrows[a].src, {a}));

    alg.table.assign(static_cast<std::size_t>(dim) * dim, SVec<F>{});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (alg.tgt_of(i) != alg.src_of(j)) continue;
            alg.table[static_cast<std::size_t>(i) * dim + j] =
                nf_path(concat(q, alg.labels[i], alg.labels[j]));
        }

    auto pres = tetrahedral_relations(f, m, lambda);
    verify_basis_algebra(alg, &pres.relations);
    return model;
}

/// The unique complement: b * complement(b) = omega_{s(b)} (property (d)).
template <class F>
int cycle_complement(const CycleBasisModel<F>& model, int label)
{
    const auto& alg = model.alg;
    int s = alg.src_of(label);
    int want = model.omega_label[s];
    int found = -1;
    for (int c = 0; c < alg.dim(); ++c) {
        const auto& prod = alg.mul_labels(label, c);
        if (prod.size() == 1 && prod[0].first == static_cast<std::uint32_t>(want)) {
            if (found != -1) return -1; // not unique
            found = c;
        }
    }
    return found;
}

} // namespace tetra
