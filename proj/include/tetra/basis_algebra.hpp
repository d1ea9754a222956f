#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/free_element.hpp"
#include "tetra/quiver.hpp"

namespace tetra {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse vector over basis indices, sorted ascending by index.
template <class F>
using SVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

template <class F>
SVec<F> sv_add(const F& f, const SVec<F>& a, const SVec<F>& b, typename F::Elem c)
{
    SVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
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

/// Finite-dimensional basic algebra presented by an explicit basis of
/// path labels with structure constants. Produced by quotient_basis and
/// by the combinatorial basis model; consumed by everything downstream.
template <class F>
struct BasisAlgebra {
    F field;
    Quiver quiver;
    std::vector<int> vertices;        // active vertices (all, except for corner subalgebras)
    std::vector<Path> labels;          // basis labels in path order
    std::vector<int> idem;             // per active vertex: label index of e_v
    std::vector<SVec<F>> arrow_elem;   // per quiver arrow: class as element
    std::vector<bool> arrow_known;     // false for arrows outside a corner subalgebra
    std::vector<SVec<F>> table;        // dim*dim structure constants

    explicit BasisAlgebra(const F& f) : field(f) {}

    int dim() const { return static_cast<int>(labels.size()); }
    int src_of(int l) const { return labels[l].src; }
    int tgt_of(int l) const { return labels[l].tgt; }
    int len_of(int l) const { return labels[l].length(); }

    int vertex_slot(int v) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        return -1;
    }
    int idem_of_vertex(int v) const {
        int s = vertex_slot(v);
        return s < 0 ? -1 : idem[s];
    }

    const SVec<F>& mul_labels(int i, int j) const { return table[i * labels.size() + j]; }

    SVec<F> mul(const SVec<F>& x, const SVec<F>& y) const
    {
        SVec<F> out;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y)
                out = sv_add(field, out, mul_labels(i, j), field.mul(ci, cj));
        return out;
    }

    SVec<F> idem_elem(int v) const
    {
        int l = idem_of_vertex(v);
        if (l < 0) throw AlgebraError("vertex not present in algebra");
        return SVec<F>{{static_cast<std::uint32_t>(l), field.one()}};
    }

    SVec<F> one() const
    {
        SVec<F> out;
        for (int l : idem) out = sv_add(field, out, SVec<F>{{(std::uint32_t)l, field.one()}}, field.one());
        return out;
    }

    bool arrow_classed(int a) const { return arrow_known.empty() || arrow_known[a]; }

    /// Class of a path: fold the arrow classes left to right.
    SVec<F> eval_path(const Path& p) const
    {
        SVec<F> acc = idem_elem(p.src);
        for (int a : p.arrows) {
            if (!arrow_classed(a))
                throw AlgebraError("arrow " + quiver.arrows[a].name + " has no class in this algebra");
            acc = mul(acc, arrow_elem[a]);
            if (acc.empty()) break;
        }
        return acc;
    }

    SVec<F> eval(const FreeElem<F>& x) const
    {
        SVec<F> out;
        for (const auto& [p, c] : x.terms) out = sv_add(field, out, eval_path(p), c);
        return out;
    }

    /// Dense coefficient vector over the basis.
    std::vector<typename F::Elem> dense(const SVec<F>& v) const
    {
        std::vector<typename F::Elem> out(labels.size(), field.zero());
        for (const auto& [i, c] : v) out[i] = c;
        return out;
    }
};

/// The quotient map realized on free elements: coefficients of x over the
/// basis of alg.
template <class F>
std::vector<typename F::Elem> normal_form(const BasisAlgebra<F>& alg, const FreeElem<F>& x)
{
    return alg.dense(alg.eval(x));
}

/// Structural verification: orthogonal idempotents summing to the
/// identity, labels evaluating to themselves, associativity on all basis
/// triples, and (when given) all relations evaluating to zero. These
/// checks are what makes the computed dimension certified rather than
/// assumed; see quotient_basis.
template <class F>
void verify_basis_algebra(const BasisAlgebra<F>& alg, const std::vector<FreeElem<F>>* relations)
{
    const F& f = alg.field;
    const int n = alg.dim();
    // idempotents
    for (std::size_t a = 0; a < alg.vertices.size(); ++a) {
        for (std::size_t b = 0; b < alg.vertices.size(); ++b) {
            const auto& prod = alg.mul_labels(alg.idem[a], alg.idem[b]);
            bool want = a == b;
            if (want) {
                if (prod.size() != 1 || prod[0].first != static_cast<std::uint32_t>(alg.idem[a]) ||
                    !f.eq(prod[0].second, f.one()))
                    throw AlgebraError("idempotent check failed: e_i * e_i != e_i");
            } else if (!prod.empty()) {
                throw AlgebraError("idempotent check failed: e_i * e_j != 0");
            }
        }
    }
    // unit acts as identity, with vertex grading
    for (int l = 0; l < n; ++l) {
        int es = alg.idem_of_vertex(alg.src_of(l));
        int et = alg.idem_of_vertex(alg.tgt_of(l));
        if (es < 0 || et < 0) throw AlgebraError("label endpoints outside active vertices");
        const auto& le = alg.mul_labels(es, l);
        const auto& ri = alg.mul_labels(l, et);
        auto is_self = [&](const SVec<F>& v) {
            return v.size() == 1 && v[0].first == static_cast<std::uint32_t>(l) &&
                   f.eq(v[0].second, f.one());
        };
        if (!is_self(le) || !is_self(ri))
            throw AlgebraError("grading check failed: e_s * b or b * e_t != b");
        for (std::size_t a = 0; a < alg.vertices.size(); ++a) {
            if (alg.vertices[a] != alg.src_of(l) && !alg.mul_labels(alg.idem[a], l).empty())
                throw AlgebraError("grading check failed: e_i * b != 0 for i != s(b)");
        }
    }
    // associativity on all triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ij = alg.mul_labels(i, j);
            if (ij.empty()) {
                // (ij)k = 0; check i(jk) = 0 too
                for (int k = 0; k < n; ++k) {
                    const auto& jk = alg.mul_labels(j, k);
                    if (jk.empty()) continue;
                    SVec<F> right;
                    for (const auto& [t, c] : jk) right = sv_add(alg.field, right, alg.mul_labels(i, t), c);
                    if (!right.empty())
                        throw AlgebraError("associativity failed at triple");
                }
                continue;
            }
            for (int k = 0; k < n; ++k) {
                SVec<F> left;
                for (const auto& [t, c] : ij) left = sv_add(alg.field, left, alg.mul_labels(t, k), c);
                const auto& jk = alg.mul_labels(j, k);
                SVec<F> right;
                for (const auto& [t, c] : jk) right = sv_add(alg.field, right, alg.mul_labels(i, t), c);
                if (left.size() != right.size()) throw AlgebraError("associativity failed");
                for (std::size_t z = 0; z < left.size(); ++z)
                    if (left[z].first != right[z].first || !f.eq(left[z].second, right[z].second))
                        throw AlgebraError("associativity failed");
            }
        }
    // labels evaluate to themselves under the fold map
    bool arrows_classed = true;
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) arrows_classed &= alg.arrow_classed(a);
    if (arrows_classed && alg.vertices.size() == static_cast<std::size_t>(alg.quiver.num_vertices())) {
        for (int l = 0; l < n; ++l) {
            auto v = alg.eval_path(alg.labels[l]);
            if (v.size() != 1 || v[0].first != static_cast<std::uint32_t>(l) ||
                !f.eq(v[0].second, f.one()))
                throw AlgebraError("label " + path_to_string(alg.quiver, alg.labels[l]) +
                                   " does not evaluate to itself");
        }
        if (relations) {
            for (const auto& r : *relations)
                if (!alg.eval(r).empty())
                    throw AlgebraError("relation does not vanish: " + fe_to_string(f, alg.quiver, r));
        }
    }
}

/// Per-(source, target) label counts; entry (i, j) of the Cartan matrix.
template <class F>
std::vector<std::vector<int>> vertex_grading_counts(const BasisAlgebra<F>& alg)
{
    int nv = alg.quiver.num_vertices();
    std::vector<std::vector<int>> c(nv, std::vector<int>(nv, 0));
    for (int l = 0; l < alg.dim(); ++l) c[alg.src_of(l)][alg.tgt_of(l)]++;
    return c;
}

} // namespace tetra
