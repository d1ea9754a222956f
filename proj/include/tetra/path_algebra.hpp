#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/free_element.hpp"
#include "tetra/quiver.hpp"

namespace tetra {

/// First arrow of the pinned cycle version X_i at each vertex 1..6:
/// X_1 = delta eta gamma, X_2 = rho omega beta, X_3 = alpha nu mu,
/// X_4 = beta rho omega, X_5 = eta gamma delta, X_6 = omega beta rho.
inline const char* tetra_x_first_arrow(int vertex_index)
{
    static const char* firsts[6] = {"delta", "rho", "alpha", "beta", "eta", "omega"};
    return firsts[vertex_index];
}

/// The pinned version of the 3-cycle X_i = tau f(tau) f^2(tau).
inline Path tetra_x_cycle(const TriangulationQuiver& tq, int vertex_index)
{
    int tau = tq.quiver.arrow_index(tetra_x_first_arrow(vertex_index));
    return make_path(tq.quiver, vertex_index, {tau, tq.f[tau], tq.f[tq.f[tau]]});
}

inline Path repeat_cycle(const Quiver& q, const Path& cycle, int times)
{
    Path p = trivial_path(cycle.src);
    for (int k = 0; k < times; ++k) p = concat(q, p, cycle);
    return p;
}

/// Defining relations of the higher tetrahedral algebra Lambda(m, lambda):
/// the 12 commutation relations theta f(theta) = bar(theta) g(bar(theta))
/// (three of them carrying the lambda (bar-theta-cycle)^{m-1} correction)
/// followed by the 12 zero relations
/// (theta f(theta) f^2(theta))^{m-1} theta f(theta) g(f(theta)).
template <class F>
Presentation<F> tetrahedral_relations(const F& f, int m, typename F::Elem lambda)
{
    if (m < 2) throw std::invalid_argument("tetrahedral_relations: m must be >= 2");
    TriangulationQuiver tq = tetrahedral_quiver();
    const Quiver& q = tq.quiver;

    Presentation<F> pres;
    pres.quiver = q;
    pres.param = lambda;
    pres.m = m;
    pres.length_bound = 3 * m;

    auto two_path = [&](int a, int b) { return make_path(q, q.arrows[a].src, {a, b}); };

    // display order of the 12 commutation relations
    static const char* display[12] = {"gamma", "delta", "eta", "nu",  "rho",     "omega",
                                      "beta",  "mu",    "xi",  "sigma", "epsilon", "alpha"};
    const char* corrected[3] = {"gamma", "rho", "xi"};
    for (const char* name : display) {
        int th = q.arrow_index(name);
        int bar = tq.bar[th];
        Path lhs = two_path(th, tq.f[th]);
        Path rhs = two_path(bar, tq.g[bar]);
        std::vector<std::pair<Path, typename F::Elem>> terms;
        terms.push_back({lhs, f.one()});
        terms.push_back({rhs, f.neg(f.one())});
        bool has_lambda = false;
        for (const char* c : corrected) has_lambda |= (std::string(name) == c);
        if (has_lambda && !f.is_zero(lambda)) {
            // lambda * (bar f(bar) f^2(bar))^{m-1} * bar g(bar)
            Path cyc = make_path(q, q.arrows[bar].src, {bar, tq.f[bar], tq.f[tq.f[bar]]});
            Path corr = concat(q, repeat_cycle(q, cyc, m - 1), rhs);
            terms.push_back({corr, f.neg(lambda)});
        }
        pres.relations.push_back(fe_canonical(f, std::move(terms)));
    }
    // zero relations, one per arrow in arrow-id order
    for (int th = 0; th < q.num_arrows(); ++th) {
        Path cyc = make_path(q, q.arrows[th].src, {th, tq.f[th], tq.f[tq.f[th]]});
        Path tail = make_path(q, q.arrows[th].src, {th, tq.f[th], tq.g[tq.f[th]]});
        Path z = concat(q, repeat_cycle(q, cyc, m - 1), tail);
        pres.relations.push_back(fe_path(f, z, f.one()));
    }
    return pres;
}

/// The minimal relation mu_theta attached to an arrow: the unique
/// commutation relation whose +1 term is the path theta f(theta).
/// Returns indices into pres.relations for each arrow.
template <class F>
std::vector<int> minimal_relation_of_arrow(const F& f, const Presentation<F>& pres,
                                           const TriangulationQuiver& tq)
{
    const Quiver& q = pres.quiver;
    std::vector<int> out(q.num_arrows(), -1);
    for (int th = 0; th < q.num_arrows(); ++th) {
        Path key = make_path(q, q.arrows[th].src, {th, tq.f[th]});
        for (std::size_t r = 0; r < pres.relations.size(); ++r) {
            for (const auto& [p, c] : pres.relations[r].terms) {
                if (p == key && f.eq(c, f.one())) {
                    if (out[th] != -1)
                        throw std::runtime_error("arrow-relation bijection not unique at " +
                                                 q.arrows[th].name);
                    out[th] = static_cast<int>(r);
                }
            }
        }
        if (out[th] == -1)
            throw std::runtime_error("no minimal relation with +1 term " + q.arrows[th].name);
    }
    return out;
}

} // namespace tetra
