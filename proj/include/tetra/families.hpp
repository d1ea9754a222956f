#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/path_algebra.hpp"
#include "tetra/quotient.hpp"

namespace tetra {

/// One-parameter family of presentations sharing a quiver.
template <class F>
struct AlgebraFamily {
    std::string name;
    int expected_dim = 0;
    std::function<Presentation<F>(typename F::Elem)> member;
};

/// The family Lambda(t): the defining relations with the correction
/// coefficient lambda replaced by t*lambda. member(0) is the singular
/// algebra, member(1) the configured one.
template <class F>
AlgebraFamily<F> lambda_family(const F& f, int m, typename F::Elem lambda)
{
    AlgebraFamily<F> fam;
    fam.name = "lambda";
    fam.expected_dim = 36 * m;
    fam.member = [&f, m, lambda](typename F::Elem t) {
        return tetrahedral_relations(f, m, f.mul(t, lambda));
    };
    return fam;
}

/// Verdict of one explicit isomorphism verification.
struct IsoCheck {
    bool precondition_ok = false;
    bool is_homomorphism = false;
    bool is_bijective = false;
    std::size_t rank = 0;
    std::string note;
    bool ok() const { return precondition_ok && is_homomorphism && is_bijective; }
};

/// phi_t : member(1) -> member(t), theta -> a*theta for every arrow,
/// with a^{3(m-1)} = t as precondition.
template <class F>
IsoCheck scaling_iso_check(const F& f, const AlgebraFamily<F>& fam, int m, typename F::Elem t,
                           typename F::Elem a, int headroom = 2)
{
    IsoCheck out;
    // precondition a^{3(m-1)} = t
    typename F::Elem p = f.one();
    for (int k = 0; k < 3 * (m - 1); ++k) p = f.mul(p, a);
    if (!f.eq(p, t)) {
        out.note = "precondition a^{3(m-1)} = t violated";
        return out;
    }
    out.precondition_ok = true;
    auto pres1 = fam.member(f.one());
    auto prest = fam.member(t);
    auto dom = quotient_basis(f, pres1, headroom);
    auto tgt = quotient_basis(f, prest, headroom);
    AlgebraMapImages<F> img;
    for (int v = 0; v < pres1.quiver.num_vertices(); ++v) img.idem_img.push_back(tgt.idem_elem(v));
    for (int arr = 0; arr < pres1.quiver.num_arrows(); ++arr) {
        SVec<F> scaled;
        for (const auto& [idx, c] : tgt.arrow_elem[arr]) scaled.push_back({idx, f.mul(c, a)});
        img.arrow_img.push_back(std::move(scaled));
    }
    auto chk = check_algebra_map(dom, pres1, tgt, img);
    out.is_homomorphism = chk.is_homomorphism;
    out.is_bijective = chk.is_bijective;
    out.rank = chk.rank;
    out.note = chk.failure;
    return out;
}

/// The 9-vertex blowup algebra.
template <class F>
Presentation<F> build_omega(const F& f, int m)
{
    if (m < 2) throw std::invalid_argument("build_omega: m >= 2 required");
    Presentation<F> pres;
    Quiver& q = pres.quiver;
    q.vertex_names = {"1", "2", "3", "4", "5", "6", "7", "8", "9"};
    auto V = [&](int n) { return n - 1; };
    q.arrows = {
        {"a1", V(1), V(7)}, {"a2", V(2), V(7)}, {"a3", V(3), V(8)}, {"a4", V(4), V(8)},
        {"a5", V(5), V(9)}, {"a6", V(6), V(9)}, {"b1", V(8), V(1)}, {"b2", V(8), V(2)},
        {"b3", V(9), V(3)}, {"b4", V(9), V(4)}, {"b5", V(7), V(5)}, {"b6", V(7), V(6)},
    };
    pres.m = m;
    pres.param = f.zero();
    pres.length_bound = 6 * m;
    auto A = [&](const char* n) { return q.arrow_index(n); };
    auto P = [&](std::initializer_list<const char*> names) {
        std::vector<int> arrows;
        for (auto n : names) arrows.push_back(A(n));
        return make_path(q, q.arrows[arrows[0]].src, arrows);
    };
    auto commut = [&](const char* x1, const char* x2, const char* y1, const char* y2) {
        pres.relations.push_back(
            fe_canonical(f, {{P({x1, x2}), f.one()}, {P({y1, y2}), f.neg(f.one())}}));
    };
    commut("b1", "a1", "b2", "a2");
    commut("b3", "a3", "b4", "a4");
    commut("b5", "a5", "b6", "a6");
    // zero relations: a_i (cycle)^{m-1} (cycle minus last two) b_{other}
    auto zero_rel = [&](const char* head, std::initializer_list<const char*> cycle,
                        const char* tail) {
        std::vector<int> word{A(head)};
        for (int k = 0; k < m - 1; ++k)
            for (auto n : cycle) word.push_back(A(n));
        std::vector<const char*> cyc(cycle);
        for (std::size_t i = 0; i + 2 < cyc.size(); ++i) word.push_back(A(cyc[i]));
        word.push_back(A(tail));
        pres.relations.push_back(
            fe_path(f, make_path(q, q.arrows[A(head)].src, word), f.one()));
    };
    zero_rel("a1", {"b5", "a5", "b3", "a3", "b1", "a1"}, "b2");
    zero_rel("a2", {"b6", "a6", "b4", "a4", "b2", "a2"}, "b1");
    zero_rel("a3", {"b1", "a1", "b5", "a5", "b3", "a3"}, "b4");
    zero_rel("a4", {"b2", "a2", "b6", "a6", "b4", "a4"}, "b3");
    zero_rel("a5", {"b3", "a3", "b1", "a1", "b5", "a5"}, "b6");
    zero_rel("a6", {"b4", "a4", "b2", "a2", "b6", "a6"}, "b5");
    return pres;
}

/// The 6-vertex algebra Sigma(m, t) with three loops.
template <class F>
Presentation<F> build_sigma(const F& f, int m, typename F::Elem t)
{
    if (m < 2) throw std::invalid_argument("build_sigma: m >= 2 required");
    Presentation<F> pres;
    Quiver& q = pres.quiver;
    q.vertex_names = {"x", "y", "z", "a", "b", "c"};
    auto V = [&](const char* n) { return q.vertex_index(n); };
    q.vertex_names = {"x", "y", "z", "a", "b", "c"};
    q.arrows = {
        {"alpha", 0, 3},   // x -> a
        {"beta", 4, 0},    // b -> x
        {"gamma", 1, 4},   // y -> b
        {"sigma", 5, 1},   // c -> y
        {"omega", 2, 5},   // z -> c
        {"delta", 3, 2},   // a -> z
        {"eta", 1, 1},     // loop at y
        {"epsilon", 0, 0}, // loop at x
        {"mu", 2, 2},      // loop at z
    };
    (void)V;
    pres.m = m;
    pres.param = t;
    pres.length_bound = 9 * m;
    auto A = [&](const char* n) { return q.arrow_index(n); };
    auto wordpath = [&](const std::vector<int>& w) {
        return make_path(q, q.arrows[w[0]].src, w);
    };
    auto rep = [&](const std::vector<int>& cyc, int times) {
        std::vector<int> w;
        for (int k = 0; k < times; ++k) w.insert(w.end(), cyc.begin(), cyc.end());
        return w;
    };
    auto rot = [&](const std::vector<int>& w, int by) {
        std::vector<int> o(w.begin() + by, w.end());
        o.insert(o.end(), w.begin(), w.begin() + by);
        return o;
    };

    // (1) path-square relations
    auto zero2 = [&](const char* x1, const char* x2) {
        pres.relations.push_back(
            fe_path(f, wordpath({A(x1), A(x2)}), f.one()));
    };
    zero2("beta", "alpha");
    zero2("sigma", "gamma");
    zero2("delta", "omega");
    for (const char* loop : {"epsilon", "eta", "mu"}) {
        std::vector<std::pair<Path, typename F::Elem>> terms;
        terms.push_back({wordpath({A(loop), A(loop)}), f.one()});
        if (!f.is_zero(t)) terms.push_back({wordpath({A(loop)}), f.neg(t)});
        pres.relations.push_back(fe_canonical(f, std::move(terms)));
    }

    const std::vector<int> base{A("alpha"), A("delta"), A("mu"),   A("omega"), A("sigma"),
                                A("eta"),   A("gamma"), A("beta"), A("epsilon")};
    // cycles at x: A = base, B = rot(base, 8) puts epsilon in front
    auto cycA = base;
    auto cycB = rot(base, 8);
    auto cycD = rot(base, 6); // gamma beta epsilon alpha delta mu omega sigma eta
    auto cycE = rot(base, 5); // eta gamma beta epsilon alpha delta mu omega sigma
    auto cycF = rot(base, 3); // omega sigma eta gamma beta epsilon alpha delta mu
    auto cycG = rot(base, 2); // mu omega sigma eta gamma beta epsilon alpha delta

    // (2) t * C^m = loop * C^m  (or C^m * loop on the other side)
    auto loop_rel = [&](const std::vector<int>& cyc, const char* loop, bool loop_left) {
        auto cm = rep(cyc, m);
        std::vector<int> with_loop;
        if (loop_left) {
            with_loop.push_back(A(loop));
            with_loop.insert(with_loop.end(), cm.begin(), cm.end());
        } else {
            with_loop = cm;
            with_loop.push_back(A(loop));
        }
        std::vector<std::pair<Path, typename F::Elem>> terms;
        terms.push_back({wordpath(with_loop), f.one()});
        if (!f.is_zero(t)) terms.push_back({wordpath(cm), f.neg(t)});
        pres.relations.push_back(fe_canonical(f, std::move(terms)));
    };
    loop_rel(cycA, "epsilon", true);
    loop_rel(cycB, "epsilon", false);
    loop_rel(cycD, "eta", true);
    loop_rel(cycE, "eta", false);
    loop_rel(cycF, "mu", true);
    loop_rel(cycG, "mu", false);

    // (3) C^m = C'^m between the two rotations at each looped vertex
    auto equal_rel = [&](const std::vector<int>& c1, const std::vector<int>& c2) {
        pres.relations.push_back(fe_canonical(
            f, {{wordpath(rep(c1, m)), f.one()}, {wordpath(rep(c2, m)), f.neg(f.one())}}));
    };
    equal_rel(cycA, cycB);
    equal_rel(cycD, cycE);
    equal_rel(cycF, cycG);

    // (4) overlong zero relations
    auto cyc_a = rot(base, 1); // delta mu omega sigma eta gamma beta epsilon alpha (at a)
    auto cyc_b = rot(base, 7); // beta epsilon alpha delta mu omega sigma eta gamma (at b)
    auto cyc_c = rot(base, 4); // sigma eta gamma beta epsilon alpha delta mu omega (at c)
    auto long_zero = [&](const std::vector<int>& cyc, const char* edge, bool edge_left) {
        auto cm = rep(cyc, m);
        std::vector<int> w;
        if (edge_left) {
            w.push_back(A(edge));
            w.insert(w.end(), cm.begin(), cm.end());
        } else {
            w = cm;
            w.push_back(A(edge));
        }
        pres.relations.push_back(fe_path(f, wordpath(w), f.one()));
    };
    long_zero(cyc_a, "delta", false);
    long_zero(cyc_a, "alpha", true);
    long_zero(cyc_b, "beta", false);
    long_zero(cyc_b, "gamma", true);
    long_zero(cyc_c, "sigma", false);
    long_zero(cyc_c, "omega", true);
    return pres;
}

/// psi_t : Sigma(m,1) -> Sigma(m,t): loops scale by t^{-1}, the six
/// non-loop arrows by b with b^8 = t.
template <class F>
IsoCheck sigma_scaling_check(const F& f, int m, typename F::Elem t, typename F::Elem b,
                             int headroom = 2)
{
    IsoCheck out;
    typename F::Elem p = f.one();
    for (int k = 0; k < 8; ++k) p = f.mul(p, b);
    if (!f.eq(p, t) || f.is_zero(t)) {
        out.note = "precondition b^8 = t (t nonzero) violated";
        return out;
    }
    out.precondition_ok = true;
    auto pres1 = build_sigma(f, m, f.one());
    auto prest = build_sigma(f, m, t);
    auto dom = quotient_basis(f, pres1, headroom);
    auto tgt = quotient_basis(f, prest, headroom);
    AlgebraMapImages<F> img;
    for (int v = 0; v < pres1.quiver.num_vertices(); ++v) img.idem_img.push_back(tgt.idem_elem(v));
    auto tinv = f.inv(t);
    for (int a = 0; a < pres1.quiver.num_arrows(); ++a) {
        const std::string& nm = pres1.quiver.arrows[a].name;
        bool loop = nm == "epsilon" || nm == "eta" || nm == "mu";
        auto c = loop ? tinv : b;
        SVec<F> scaled;
        for (const auto& [idx, cf] : tgt.arrow_elem[a]) scaled.push_back({idx, f.mul(cf, c)});
        img.arrow_img.push_back(std::move(scaled));
    }
    auto chk = check_algebra_map(dom, pres1, tgt, img);
    out.is_homomorphism = chk.is_homomorphism;
    out.is_bijective = chk.is_bijective;
    out.rank = chk.rank;
    out.note = chk.failure;
    return out;
}

/// The explicit isomorphism Omega(m) -> Sigma(m,1) on idempotents and
/// arrows (the loops at x, y, z split the blown-up vertex pairs).
template <class F>
IsoCheck omega_sigma_iso_check(const F& f, int m, int headroom = 2)
{
    IsoCheck out;
    out.precondition_ok = true;
    auto pres_o = build_omega(f, m);
    auto pres_s = build_sigma(f, m, f.one());
    auto dom = quotient_basis(f, pres_o, headroom);
    auto tgt = quotient_basis(f, pres_s, headroom);
    const Quiver& qs = pres_s.quiver;

    auto arrow_of = [&](const char* n) { return tgt.arrow_elem[qs.arrow_index(n)]; };
    auto idem_of = [&](const char* n) { return tgt.idem_elem(qs.vertex_index(n)); };
    auto minus = [&](const SVec<F>& x, const SVec<F>& y) {
        return sv_add(f, x, y, f.neg(f.one()));
    };
    auto mulv = [&](const SVec<F>& x, const SVec<F>& y) { return tgt.mul(x, y); };

    auto eps = arrow_of("epsilon"), eta = arrow_of("eta"), mu = arrow_of("mu");
    auto alpha = arrow_of("alpha"), beta = arrow_of("beta"), gamma = arrow_of("gamma");
    auto sigma = arrow_of("sigma"), omega = arrow_of("omega"), delta = arrow_of("delta");

    AlgebraMapImages<F> img;
    img.idem_img.resize(9);
    const Quiver& qo = pres_o.quiver;
    auto set_idem = [&](const char* v, const SVec<F>& val) {
        img.idem_img[qo.vertex_index(v)] = val;
    };
    set_idem("1", eps);
    set_idem("2", minus(idem_of("x"), eps));
    set_idem("3", eta);
    set_idem("4", minus(idem_of("y"), eta));
    set_idem("5", mu);
    set_idem("6", minus(idem_of("z"), mu));
    set_idem("7", idem_of("a"));
    set_idem("8", idem_of("b"));
    set_idem("9", idem_of("c"));

    img.arrow_img.resize(qo.num_arrows());
    auto set_arrow = [&](const char* a, const SVec<F>& val) {
        img.arrow_img[qo.arrow_index(a)] = val;
    };
    set_arrow("a1", mulv(eps, alpha));
    set_arrow("a2", minus(alpha, mulv(eps, alpha)));
    set_arrow("b1", mulv(beta, eps));
    set_arrow("b2", minus(mulv(beta, eps), beta));
    set_arrow("a3", mulv(eta, gamma));
    set_arrow("a4", minus(gamma, mulv(eta, gamma)));
    set_arrow("b3", mulv(sigma, eta));
    set_arrow("b4", minus(mulv(sigma, eta), sigma));
    set_arrow("a5", mulv(mu, omega));
    set_arrow("a6", minus(omega, mulv(mu, omega)));
    set_arrow("b5", mulv(delta, mu));
    set_arrow("b6", minus(mulv(delta, mu), delta));

    auto chk = check_algebra_map(dom, pres_o, tgt, img);
    out.is_homomorphism = chk.is_homomorphism;
    out.is_bijective = chk.is_bijective;
    out.rank = chk.rank;
    out.note = chk.failure;
    return out;
}

/// Corner identification e Omega(m) e = Lambda(m, 0) via the
/// twelve length-2 paths through the blowup vertices 7, 8, 9.
template <class F>
IsoCheck omega_corner_check(const F& f, int m, int headroom = 2)
{
    IsoCheck out;
    out.precondition_ok = true;
    auto pres_o = build_omega(f, m);
    auto omega_alg = quotient_basis(f, pres_o, headroom);
    std::vector<int> corner{0, 1, 2, 3, 4, 5};
    auto sub = idempotent_subalgebra(omega_alg, corner);

    auto pres_l = tetrahedral_relations(f, m, f.zero());
    auto dom = quotient_basis(f, pres_l, headroom);

    const Quiver& qo = pres_o.quiver;
    auto path_img = [&](const char* x1, const char* x2) {
        int a1 = qo.arrow_index(x1);
        Path p = make_path(qo, qo.arrows[a1].src, {a1, qo.arrow_index(x2)});
        return restrict_to_subalgebra(omega_alg, sub, omega_alg.eval_path(p));
    };

    AlgebraMapImages<F> img;
    img.idem_img.resize(6);
    for (int v = 0; v < 6; ++v) img.idem_img[v] = sub.idem_elem(v);
    img.arrow_img.resize(12);
    const Quiver& ql = pres_l.quiver;
    auto set_arrow = [&](const char* name, const char* x1, const char* x2) {
        img.arrow_img[ql.arrow_index(name)] = path_img(x1, x2);
    };
    set_arrow("delta", "a1", "b5");
    set_arrow("nu", "a1", "b6");
    set_arrow("epsilon", "a2", "b5");
    set_arrow("rho", "a2", "b6");
    set_arrow("alpha", "a3", "b1");
    set_arrow("sigma", "a3", "b2");
    set_arrow("gamma", "a4", "b1");
    set_arrow("beta", "a4", "b2");
    set_arrow("xi", "a5", "b3");
    set_arrow("eta", "a5", "b4");
    set_arrow("mu", "a6", "b3");
    set_arrow("omega", "a6", "b4");

    auto chk = check_algebra_map(dom, pres_l, sub, img);
    out.is_homomorphism = chk.is_homomorphism;
    out.is_bijective = chk.is_bijective;
    out.rank = chk.rank;
    out.note = chk.failure;
    return out;
}

struct BiserialReport {
    bool condition_a = false;
    bool condition_b = false;
    std::vector<std::string> witnesses;
    bool ok() const { return condition_a && condition_b; }
};

/// Special biserial test: (a) every vertex has in/out degree <= 2,
/// (b) for each arrow at most one composable successor/predecessor
/// survives in the quotient.
template <class F>
BiserialReport special_biserial_check(const F& f, const Presentation<F>& pres, int headroom = 2)
{
    BiserialReport rep;
    const Quiver& q = pres.quiver;
    rep.condition_a = true;
    auto outd = q.arrows_from();
    auto ind = q.arrows_into();
    for (int v = 0; v < q.num_vertices(); ++v)
        if (outd[v].size() > 2 || ind[v].size() > 2) {
            rep.condition_a = false;
            rep.witnesses.push_back("vertex " + q.vertex_names[v] + " has degree > 2");
        }
    auto alg = quotient_basis(f, pres, headroom);
    rep.condition_b = true;
    for (int a = 0; a < q.num_arrows(); ++a) {
        std::vector<std::string> succ, pred;
        for (int b = 0; b < q.num_arrows(); ++b) {
            if (q.arrows[a].tgt == q.arrows[b].src) {
                Path p = make_path(q, q.arrows[a].src, {a, b});
                if (!alg.eval_path(p).empty()) succ.push_back(q.arrows[b].name);
            }
            if (q.arrows[b].tgt == q.arrows[a].src) {
                Path p = make_path(q, q.arrows[b].src, {b, a});
                if (!alg.eval_path(p).empty()) pred.push_back(q.arrows[b].name);
            }
        }
        if (succ.size() > 1) {
            rep.condition_b = false;
            std::string w = "arrow " + q.arrows[a].name + " has successors";
            for (const auto& s : succ) w += " " + s;
            rep.witnesses.push_back(w);
        }
        if (pred.size() > 1) {
            rep.condition_b = false;
            std::string w = "arrow " + q.arrows[a].name + " has predecessors";
            for (const auto& s : pred) w += " " + s;
            rep.witnesses.push_back(w);
        }
    }
    return rep;
}

/// The quotient of the tetrahedral algebra by the arrows delta, nu,
/// epsilon, rho: a 6-vertex 8-arrow bound quiver with four commutation
/// relations, of dimension independent of lambda.
template <class F>
struct GammaReport {
    Presentation<F> pres;
    bool quiver_ok = false;
    bool relations_ok = false;
    int dim = 0;
};

template <class F>
GammaReport<F> gamma_quotient_check(const F& f, int m, typename F::Elem lambda, int headroom = 2)
{
    GammaReport<F> rep;
    auto lam = tetrahedral_relations(f, m, lambda);
    rep.pres = quotient_by_arrow_ideal(f, lam, {"delta", "nu", "epsilon", "rho"});
    const Quiver& q = rep.pres.quiver;
    rep.quiver_ok = q.num_vertices() == 6 && q.num_arrows() == 8;

    auto rel = [&](const char* x1, const char* x2, const char* y1, const char* y2) {
        int a1 = q.arrow_index(x1);
        int b1 = q.arrow_index(y1);
        return fe_canonical(
            f, {{make_path(q, q.arrows[a1].src, {a1, q.arrow_index(x2)}), f.one()},
                {make_path(q, q.arrows[b1].src, {b1, q.arrow_index(y2)}), f.neg(f.one())}});
    };
    std::vector<FreeElem<F>> expected;
    expected.push_back(rel("eta", "gamma", "xi", "alpha"));
    expected.push_back(rel("omega", "beta", "mu", "sigma"));
    expected.push_back(rel("mu", "alpha", "omega", "gamma"));
    expected.push_back(rel("xi", "sigma", "eta", "beta"));
    rep.relations_ok = rep.pres.relations.size() == expected.size();
    if (rep.relations_ok)
        for (std::size_t i = 0; i < expected.size(); ++i)
            rep.relations_ok &= fe_eq(f, rep.pres.relations[i], expected[i]);

    rep.dim = quotient_basis(f, rep.pres, headroom).dim();
    return rep;
}

} // namespace tetra
