// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tetra/bimodule.hpp"
#include "tetra/families.hpp"
#include "tetra/fp.hpp"
#include "tetra/modules.hpp"
#include "tetra/cycle_model.hpp"
#include "tetra/quotient.hpp"
#include "tetra/rational.hpp"
#include "tetra/verify.hpp"

using namespace tetra;

namespace {

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;
    bool (*run)(std::string& detail);
};

using Clock = std::chrono::steady_clock;

const PrimeField& fp()
{
    static PrimeField f(1000003);
    return f;
}

bool crit_dimensions(std::string& detail)
{
    const auto& f = fp();
    for (int m : {2, 3, 4})
        for (int lam : {0, 1}) {
            auto t0 = Clock::now();
            auto alg = quotient_basis(f, tetrahedral_relations(f, m, f.from_long(lam)), 2);
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (alg.dim() != 36 * m) {
                detail = "dim(" + std::to_string(m) + "," + std::to_string(lam) +
                         ") = " + std::to_string(alg.dim());
                return false;
            }
            if (secs > 10.0) {
                detail = "build exceeded 10s at m=" + std::to_string(m);
                return false;
            }
        }
    detail = "dim 72/108/144 for m=2/3/4, both lambda";
    return true;
}

bool crit_basis_crosscheck(std::string& detail)
{
    const auto& f = fp();
    for (int m : {2, 3})
        for (int lam : {0, 1}) {
            auto lambda = f.from_long(lam);
            auto pres = tetrahedral_relations(f, m, lambda);
            auto quot = quotient_basis(f, pres, 2);
            auto model = cycle_basis_model(f, m, lambda);
            if (quot.dim() != model.alg.dim()) {
                detail = "dimension mismatch at m=" + std::to_string(m);
                return false;
            }
            AlgebraMapImages<PrimeField> img;
            for (int v = 0; v < 6; ++v) img.idem_img.push_back(quot.idem_elem(v));
            for (int a = 0; a < 12; ++a) img.arrow_img.push_back(quot.arrow_elem[a]);
            auto chk = check_algebra_map(model.alg, pres, quot, img);
            if (!chk.is_homomorphism || !chk.is_bijective) {
                detail = "identity-on-arrows is not an isomorphism at m=" + std::to_string(m) +
                         ", lambda=" + std::to_string(lam) + ": " + chk.failure;
                return false;
            }
        }
    detail = "both constructions isomorphic for m=2,3, both lambda";
    return true;
}

bool crit_symmetry(std::string& detail)
{
    const auto& f = fp();
    for (int m : {2, 3})
        for (int lam : {0, 1}) {
            auto model = cycle_basis_model(f, m, f.from_long(lam));
            auto loewy = socle_and_radical_series(model.alg);
            GramForm<PrimeField> gram;
            try {
                gram = symmetrizing_form(model.alg, loewy.socle_vec);
            } catch (const std::exception& e) {
                detail = std::string("form failed at m=") + std::to_string(m) + ": " + e.what();
                return false;
            }
            if (!gram.symmetric || !gram.associative || !gram.nonsingular) {
                detail = "gram flags wrong at m=" + std::to_string(m);
                return false;
            }
        }
    detail = "Gram symmetric, associative on all triples, invertible (m=2,3)";
    return true;
}

bool crit_path_identities(std::string& detail)
{
    const auto& f = fp();
    for (int lam : {0, 1}) {
        VerifyConfig cfg;
        cfg.m = 2;
        cfg.lambda_text = std::to_string(lam);
        cfg.checks = {"lemmas4"};
        cfg.checks_explicit = true;
        auto out = run_verify(f, cfg);
        if (!out.all_pass) {
            detail = "path identity suite failed at lambda=" + std::to_string(lam);
            return false;
        }
    }
    detail = "length-wise path identities hold exhaustively at m=2";
    return true;
}

bool crit_period_four(std::string& detail)
{
    const auto& f = fp();
    for (int m : {2, 3}) {
        auto alg = quotient_basis(f, tetrahedral_relations(f, m, f.one()), 2);
        const Quiver& q = alg.quiver;
        for (int v = 0; v < 6; ++v) {
            auto rep = periodicity_report(alg, v, 8, 20260808);
            bool ok = rep.period_found == 4 && rep.syzygy_dims[1] == 6 * m - 1 &&
                      rep.syzygy_dims[2] == 6 * m + 1 && rep.syzygy_dims[3] == 6 * m - 1 &&
                      rep.syzygy_dims[4] == 1;
            for (int n = 0; n < 3 && ok; ++n) ok &= rep.iso_verdicts[n] == "no";
            if (ok) {
                std::vector<int> want0(6, 0), want1(6, 0), want2(6, 0);
                want0[v] = 1;
                for (int a = 0; a < 12; ++a) {
                    if (q.arrows[a].src == v) want1[q.arrows[a].tgt]++;
                    if (q.arrows[a].tgt == v) want2[q.arrows[a].src]++;
                }
                ok &= rep.cover_shapes[0] == want0 && rep.cover_shapes[1] == want1 &&
                      rep.cover_shapes[2] == want2 && rep.cover_shapes[3] == want0;
            }
            if (!ok) {
                detail = "vertex " + q.vertex_names[v] + " at m=" + std::to_string(m);
                return false;
            }
        }
    }
    detail = "all six simples have period exactly 4 with the expected sequence (m=2,3)";
    return true;
}

bool crit_singular_failure(std::string& detail)
{
    const auto& f = fp();
    auto alg = quotient_basis(f, tetrahedral_relations(f, 2, f.zero()), 2);
    const Quiver& q = alg.quiver;
    for (int v = 0; v < 6; ++v) {
        auto rep = periodicity_report(alg, v, 8, 20260808);
        if (rep.period_found != -1) {
            detail = "unexpected period at vertex " + q.vertex_names[v];
            return false;
        }
        for (const auto& verdict : rep.iso_verdicts)
            if (verdict != "no") {
                detail = "iso verdict not definite at vertex " + q.vertex_names[v];
                return false;
            }
        if (v == 0 && !(rep.top_dims.size() >= 3 && rep.top_dims[2] > 2)) {
            detail = "second syzygy of S_1 has <= 2 generators";
            return false;
        }
    }
    for (const char* name : {"1", "3", "5"}) {
        int i = q.vertex_index(name);
        auto Pi = projective_module(alg, i).mod;
        auto Pj = projective_module(alg, i + 1).mod;
        auto ri = radical_submodule(Pi);
        auto rj = radical_submodule(Pj);
        auto qi = quotient_module(ri.mod, socle_submodule(ri.mod));
        auto qj = quotient_module(rj.mod, socle_submodule(rj.mod));
        if (is_isomorphic(qi, qj, 555) != IsoVerdict::yes) {
            detail = std::string("rad/soc heart mismatch at ") + name;
            return false;
        }
    }
    detail = "no period <= 8, wide second syzygy, rad P/soc P hearts agree in pairs";
    return true;
}

bool crit_bimodule(std::string& detail)
{
    const auto& f = fp();
    auto pres = tetrahedral_relations(f, 2, f.one());
    auto model = cycle_basis_model(f, 2, f.one());
    auto loewy = socle_and_radical_series(model.alg);
    auto gram = symmetrizing_form(model.alg, loewy.socle_vec);
    auto res = build_bimodule_resolution(model.alg, tetrahedral_quiver(), pres, gram);
    auto cert = certify_resolution(model.alg, res);
    bool ok = cert.d0_after_d_zero && cert.d_after_r_zero && cert.r_after_s_zero &&
              cert.s_after_theta_zero && cert.exact_at_p0 && cert.exact_at_p1 &&
              cert.exact_at_p2 && cert.rank_theta == 72 && cert.omega4_isomorphic;
    std::string note;
    ok &= ext_multiplicity_crosscheck(model.alg, tetrahedral_quiver(), &note);
    if (!ok) {
        detail = "certificate flags: ranks d0/d/R/S/theta = " + std::to_string(cert.rank_d0) +
                 "/" + std::to_string(cert.rank_d) + "/" + std::to_string(cert.rank_r) + "/" +
                 std::to_string(cert.rank_s) + "/" + std::to_string(cert.rank_theta) + " " + note;
        return false;
    }
    detail = "chain conditions, exactness by ranks, theta: 72 = dim Ker S";
    return true;
}

bool crit_families(std::string& detail)
{
    const auto& f = fp();
    VerifyConfig cfg;
    cfg.m = 2;
    cfg.lambda_text = "1";
    cfg.checks = {"families"};
    cfg.checks_explicit = true;
    auto out = run_verify(f, cfg);
    if (!out.all_pass) {
        detail = "families check failed; see report";
        return false;
    }
    detail = "Omega/Sigma dims 165, corner and table isos, biserial and scaling evidence";
    return true;
}

bool crit_reproducibility(std::string& detail)
{
    const auto& f = fp();
    {
        VerifyConfig cfg;
        cfg.m = 2;
        cfg.lambda_text = "1";
        cfg.seed = 31415;
        cfg.checks = {"dims", "simples"};
        cfg.checks_explicit = true;
        auto a = run_verify(f, cfg);
        auto b = run_verify(f, cfg);
        if (a.report.serialize() != b.report.serialize()) {
            detail = "two runs with the same seed differ";
            return false;
        }
    }
    // rationals vs F_p agreement for the structural checks
    RationalField q;
    struct Cfg {
        int m;
        int lam;
        std::vector<std::string> checks;
    };
    std::vector<Cfg> plans = {
        {2, 0, {"dims", "basis-crosscheck", "symmetry", "lemmas4"}},
        {2, 1, {"dims", "basis-crosscheck", "symmetry", "lemmas4"}},
        {3, 0, {"dims", "basis-crosscheck", "symmetry"}},
        {3, 1, {"dims", "basis-crosscheck", "symmetry"}},
        {4, 0, {"dims"}},
        {4, 1, {"dims"}},
    };
    for (const auto& plan : plans) {
        VerifyConfig cfg;
        cfg.m = plan.m;
        cfg.lambda_text = std::to_string(plan.lam);
        cfg.checks = plan.checks;
        cfg.checks_explicit = true;
        auto over_fp = run_verify(fp(), cfg);
        auto over_q = run_verify(q, cfg);
        if (!over_fp.all_pass || !over_q.all_pass) {
            detail = "cross-check run failed at m=" + std::to_string(plan.m);
            return false;
        }
        // compare the check sections (config differs in the field line)
        auto sections_of = [](const Report& r) {
            std::string s;
            for (const auto& sec : r.sections)
                if (sec.name.rfind("check ", 0) == 0) {
                    s += "[" + sec.name + "]\n";
                    for (const auto& [k, v] : sec.entries) s += k + " = " + v + "\n";
                }
            return s;
        };
        if (sections_of(over_fp.report) != sections_of(over_q.report)) {
            detail = "field-dependent discrepancy at m=" + std::to_string(plan.m) +
                     ", lambda=" + std::to_string(plan.lam);
            return false;
        }
    }
    detail = "byte-identical reports; F_p and rational evidence agree";
    return true;
}

const Criterion criteria[] = {
    {1, "dimension 36m for (m,lambda) in {2,3,4}x{0,1}", 60.0, crit_dimensions},
    {2, "basis cross-check (m = 2, 3)", 30.0, crit_basis_crosscheck},
    {3, "symmetrizing form (m = 2, 3)", 60.0, crit_symmetry},
    {4, "length-wise path identity suite (m = 2)", 60.0, crit_path_identities},
    {5, "period four for the non-singular algebras (m = 2, 3)", 120.0, crit_period_four},
    {6, "singular case: no periodic simple", 120.0, crit_singular_failure},
    {7, "bimodule resolution certificate (m = 2)", 600.0, crit_bimodule},
    {8, "one-parameter families and blowup constructions", 300.0, crit_families},
    {9, "reproducibility and field cross-check", 300.0, crit_reproducibility},
};

} // namespace

int main()
{
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        auto t0 = Clock::now();
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool within = secs <= c.budget_seconds;
        if (!within) detail += " [exceeded " + std::to_string(c.budget_seconds) + "s budget]";
        bool ok = pass && within;
        std::printf("criterion %d: %s  %-55s (%.2fs)%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.label, secs, detail.empty() ? "" : "  -- ", detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(sizeof(criteria) / sizeof(criteria[0])) - failures,
                sizeof(criteria) / sizeof(criteria[0]));
    return failures == 0 ? 0 : 1;
}
