#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tetra/algebra.hpp"
#include "tetra/fp.hpp"
#include "tetra/cycle_model.hpp"
#include "tetra/path_algebra.hpp"
#include "tetra/quotient.hpp"

using namespace tetra;

namespace {
const PrimeField& fp()
{
    static PrimeField f(1000003);
    return f;
}
} // namespace

TEST_CASE("Cartan matrix")
{
    const auto& f = fp();
    auto a1 = quotient_basis(f, tetrahedral_relations(f, 2, f.one()), 2);
    auto a0 = quotient_basis(f, tetrahedral_relations(f, 2, f.zero()), 2);
    auto c1 = cartan_matrix(a1);
    auto c0 = cartan_matrix(a0);
    CHECK(c1 == c0); // lambda-independent
    int total = 0;
    for (int i = 0; i < 6; ++i) {
        int row = 0;
        for (int j = 0; j < 6; ++j) row += c1[i][j];
        CHECK(row == 12);
        total += row;
    }
    CHECK(total == 72);
}

TEST_CASE("Loewy structure")
{
    const auto& f = fp();
    for (int m : {2, 3}) {
        auto alg = quotient_basis(f, tetrahedral_relations(f, m, f.one()), 2);
        auto lw = socle_and_radical_series(alg);
        CHECK(lw.loewy_length == 3 * m + 1);
        for (int v = 0; v < 6; ++v) {
            CHECK(lw.socle_dims[v] == 1);
            // top of e_v A is 1-dimensional (basic algebra)
            CHECK(lw.radical_dims[0][v] - lw.radical_dims[1][v] == 1);
        }
    }
}

TEST_CASE("the order-3 automorphism")
{
    const auto& f = fp();
    for (int lam : {0, 1}) {
        auto pres = tetrahedral_relations(f, 2, f.from_long(lam));
        auto alg = quotient_basis(f, pres, 2);
        auto phi = tetrahedral_phi();
        auto img = arrow_map_images(alg, phi);
        auto chk = check_algebra_map(alg, pres, alg, img);
        CHECK(chk.is_homomorphism);
        CHECK(chk.is_bijective);

        // phi^3 = identity on arrows
        QuiverAutomorphism phi3;
        phi3.vertex_map.resize(6);
        phi3.arrow_map.resize(12);
        for (int v = 0; v < 6; ++v)
            phi3.vertex_map[v] = phi.vertex_map[phi.vertex_map[phi.vertex_map[v]]];
        for (int a = 0; a < 12; ++a)
            phi3.arrow_map[a] = phi.arrow_map[phi.arrow_map[phi.arrow_map[a]]];
        for (int v = 0; v < 6; ++v) CHECK(phi3.vertex_map[v] == v);
        for (int a = 0; a < 12; ++a) CHECK(phi3.arrow_map[a] == a);

        // phi(X_4) = X_2 as classes
        auto tq = tetrahedral_quiver();
        auto map_path = [&](const Path& p) {
            Path out = p;
            out.src = phi.vertex_map[p.src];
            out.tgt = phi.vertex_map[p.tgt];
            for (auto& a : out.arrows) a = phi.arrow_map[a];
            return out;
        };
        Path x4 = tetra_x_cycle(tq, 3);
        Path x2 = tetra_x_cycle(tq, 1);
        CHECK(alg.eval_path(map_path(x4)) == alg.eval_path(x2));

        // the exceptional-cycle identity at vertex 2 transports to vertex 4:
        // phi maps X_2 = tildeX_2 + lambda X_2^m term by term onto the
        // corresponding identity there
        const Quiver& qq = alg.quiver;
        Path x2v = tetra_x_cycle(tq, 1);
        Path xt2 = make_path(qq, 1,
                             {qq.arrow_index("epsilon"), qq.arrow_index("eta"),
                              qq.arrow_index("beta")});
        Path x2m = repeat_cycle(qq, x2v, 2);
        auto lambda = f.from_long(lam);
        auto id_at_2 = sv_add(f, alg.eval_path(xt2), alg.eval_path(x2m), lambda);
        CHECK(alg.eval_path(x2v) == id_at_2);
        auto id_at_4 = sv_add(f, alg.eval_path(map_path(xt2)),
                              alg.eval_path(map_path(x2m)), lambda);
        CHECK(alg.eval_path(map_path(x2v)) == id_at_4);
    }
}

TEST_CASE("Gram pairings on the combinatorial basis")
{
    const auto& f = fp();
    auto model = cycle_basis_model(f, 2, f.one());
    auto lw = socle_and_radical_series(model.alg);
    auto gram = symmetrizing_form(model.alg, lw.socle_vec);
    // (e_i, omega_i) = 1
    for (int v = 0; v < 6; ++v) {
        int e = model.alg.idem_of_vertex(v);
        CHECK(gram.matrix.at(e, model.omega_label[v]) == f.one());
    }
    // each row of the Gram matrix has exactly one nonzero entry, equal to 1
    for (int b = 0; b < model.alg.dim(); ++b) {
        int nonzero = 0;
        for (int c = 0; c < model.alg.dim(); ++c)
            if (!f.is_zero(gram.matrix.at(b, c))) {
                ++nonzero;
                CHECK(gram.matrix.at(b, c) == f.one());
            }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("normal form is linear and multiplicative")
{
    const auto& f = fp();
    auto alg = quotient_basis(f, tetrahedral_relations(f, 2, f.one()), 2);
    const Quiver& q = alg.quiver;
    std::mt19937_64 rng(2024);
    auto random_path = [&](int max_len) {
        int v = static_cast<int>(rng() % 6);
        Path p = trivial_path(v);
        int len = static_cast<int>(rng() % (max_len + 1));
        auto out = q.arrows_from();
        for (int k = 0; k < len; ++k) {
            int a = out[p.tgt][rng() % 2];
            p.arrows.push_back(a);
            p.tgt = q.arrows[a].tgt;
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Path a = random_path(5);
        Path b = random_path(5);
        if (a.tgt != b.src) continue;
        auto prod = alg.eval_path(concat(q, a, b));
        auto split = alg.mul(alg.eval_path(a), alg.eval_path(b));
        CHECK(prod == split);
    }
    // relations evaluate to zero under normal_form
    auto pres = tetrahedral_relations(f, 2, f.one());
    for (const auto& r : pres.relations) {
        auto nf = normal_form(alg, r);
        for (const auto& c : nf) CHECK(f.is_zero(c));
    }
}

TEST_CASE("stabilization under a larger headroom")
{
    const auto& f = fp();
    auto pres = tetrahedral_relations(f, 2, f.one());
    CHECK(stabilization_check(f, pres, 2));
}
