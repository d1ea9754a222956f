// Batch verification driver for the higher tetrahedral algebra engine.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tetra/algebra.hpp"
#include "tetra/families.hpp"
#include "tetra/fp.hpp"
#include "tetra/presentation_io.hpp"
#include "tetra/rational.hpp"
#include "tetra/verify.hpp"

namespace {

using namespace tetra;

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_out(const std::string& path, const std::string& text)
{
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

template <class F>
int emit_mode(const F& f, const std::string& which, const VerifyConfig& cfg,
              const std::string& out_path)
{
    auto lam = f.parse(cfg.lambda_text);
    if (!lam) throw std::runtime_error("bad lambda scalar");
    Presentation<F> pres;
    if (which == "lambda") pres = tetrahedral_relations(f, cfg.m, *lam);
    else if (which == "omega") pres = build_omega(f, cfg.m);
    else if (which == "sigma") pres = build_sigma(f, cfg.m, *lam);
    else if (which == "gamma")
        pres = quotient_by_arrow_ideal(f, tetrahedral_relations(f, cfg.m, *lam),
                                       {"delta", "nu", "epsilon", "rho"});
    else throw std::runtime_error("unknown presentation '" + which + "'");
    auto text = emit_presentation(f, pres);
    if (out_path.empty()) std::cout << text;
    else write_out(out_path, text);
    return 0;
}

template <class F>
int presentation_mode(const F& f, const std::string& path, const VerifyConfig& cfg,
                      const std::string& out_path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto pres = parse_presentation(f, ss.str());

    Report rep;
    rep.put("config", "presentation", path);
    rep.put("config", "field", f.name());
    rep.put("config", "headroom", cfg.headroom);
    bool pass = true;
    try {
        QuotientDiagnostics diag;
        auto alg = quotient_basis(f, pres, cfg.headroom, &diag);
        rep.put("presentation", "dim", alg.dim());
        auto cm = cartan_matrix(alg);
        std::vector<std::string> rows;
        for (int v = 0; v < pres.quiver.num_vertices(); ++v) {
            int r = 0;
            for (int w = 0; w < pres.quiver.num_vertices(); ++w) r += cm[v][w];
            rows.push_back(pres.quiver.vertex_names[v] + ":" + std::to_string(r));
        }
        rep.put("presentation", "vertex_dims", verify_detail::join_s(rows, " "));
        rep.put_bool("presentation", "long_paths_vanish", diag.long_paths_vanish);
        try {
            auto loewy = socle_and_radical_series(alg);
            rep.put("presentation", "loewy_length", loewy.loewy_length);
            rep.put("presentation", "socle_dims", verify_detail::join(loewy.socle_dims));
        } catch (const std::exception& e) {
            rep.put("presentation", "loewy_note", e.what());
        }
        auto sb = special_biserial_check(f, pres, cfg.headroom);
        rep.put_bool("presentation", "special_biserial", sb.ok());
    } catch (const std::exception& e) {
        rep.put("presentation", "error", e.what());
        pass = false;
    }
    rep.put("summary", "overall", pass ? "pass" : "fail");
    auto text = rep.serialize();
    if (out_path.empty()) std::cout << text;
    else write_out(out_path, text);
    return pass ? 0 : 1;
}

template <class F>
int verify_mode(const F& f, const VerifyConfig& cfg, const std::string& out_path)
{
    auto outcome = run_verify(f, cfg);
    for (const auto& r : outcome.results) {
        if (!r.ran) std::printf("%-18s skipped\n", r.name.c_str());
        else
            std::printf("%-18s %s   (%.2fs)%s%s\n", r.name.c_str(), r.pass ? "pass" : "FAIL",
                        r.seconds, r.error.empty() ? "" : "  error: ", r.error.c_str());
    }
    std::printf("overall: %s\n", outcome.all_pass ? "pass" : "FAIL");
    if (!out_path.empty()) write_out(out_path, outcome.report.serialize());
    return outcome.all_pass ? 0 : 1;
}

struct FieldSpec {
    bool rational = false;
    std::uint64_t p = 1000003;
};

FieldSpec parse_field(const std::string& s)
{
    if (s == "q") return {true, 0};
    if (s.rfind("fp:", 0) == 0) {
        FieldSpec fs;
        fs.p = std::stoull(s.substr(3));
        return fs;
    }
    throw std::runtime_error("field must be 'fp:<prime>' or 'q'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification engine for the higher tetrahedral algebras"};

    VerifyConfig cfg;
    std::string field = "fp:1000003";
    std::string checks;
    std::string out_path;
    std::string presentation_path;
    std::string emit_which;

    app.add_option("--m", cfg.m, "family parameter m >= 2")->capture_default_str();
    app.add_option("--lambda", cfg.lambda_text, "parameter lambda (integer or fraction)")
        ->capture_default_str();
    app.add_option("--field", field, "coefficient field: fp:<prime> or q")
        ->capture_default_str();
    app.add_option(
        "--checks", checks,
        "comma list from dims,basis-crosscheck,symmetry,lemmas4,simples,bimodule,families");
    app.add_option("--max-syzygy", cfg.max_syzygy, "syzygy iteration bound")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized isomorphism tests")
        ->capture_default_str();
    app.add_option("--headroom", cfg.headroom, "extra path-length headroom for the ideal closure")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the machine-readable report to this path");
    app.add_option("--presentation", presentation_path,
                   "analyze a presentation file instead of the built-in family");
    app.add_option("--emit-presentation", emit_which,
                   "print a built-in presentation (lambda|omega|sigma|gamma) and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.checks = split_commas(checks);
        cfg.checks_explicit = !cfg.checks.empty();
        auto fs = parse_field(field);
        if (!emit_which.empty()) {
            if (fs.rational) return emit_mode(tetra::RationalField{}, emit_which, cfg, out_path);
            return emit_mode(tetra::PrimeField{fs.p}, emit_which, cfg, out_path);
        }
        if (!presentation_path.empty()) {
            if (fs.rational)
                return presentation_mode(tetra::RationalField{}, presentation_path, cfg, out_path);
            return presentation_mode(tetra::PrimeField{fs.p}, presentation_path, cfg, out_path);
        }
        if (fs.rational) return verify_mode(tetra::RationalField{}, cfg, out_path);
        return verify_mode(tetra::PrimeField{fs.p}, cfg, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
