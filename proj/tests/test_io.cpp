#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tetra/families.hpp"
#include "tetra/fp.hpp"
#include "tetra/presentation_io.hpp"
#include "tetra/rational.hpp"
#include "tetra/report.hpp"

using namespace tetra;

namespace {
const PrimeField& fp()
{
    static PrimeField f(1000003);
    return f;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("emit/parse round trip for the built-in presentations")
{
    const auto& f = fp();
    for (int m : {2, 3}) {
        auto pres = tetrahedral_relations(f, m, f.one());
        auto text = emit_presentation(f, pres);
        auto back = parse_presentation(f, text);
        CHECK(presentation_eq(f, pres, back));
    }
    auto omega = build_omega(f, 2);
    CHECK(presentation_eq(f, omega, parse_presentation(f, emit_presentation(f, omega))));
    auto sigma = build_sigma(f, 2, f.one());
    CHECK(presentation_eq(f, sigma, parse_presentation(f, emit_presentation(f, sigma))));

    RationalField q;
    auto presq = tetrahedral_relations(q, 2, q.parse("2/3").value());
    CHECK(presentation_eq(q, presq, parse_presentation(q, emit_presentation(q, presq))));
}

TEST_CASE("relation grammar")
{
    const auto& f = fp();
    auto pres = tetrahedral_relations(f, 2, f.one());
    const Quiver& q = pres.quiver;

    // the m=2 gamma relation written with the l symbol and a power
    auto r = parse_relation_expr(
        f, q, f.one(), "gamma*delta - beta*epsilon - l*(beta*rho*omega)^1*beta*epsilon", 1);
    bool found = false;
    for (const auto& rel : pres.relations)
        found |= fe_eq(f, rel, r);
    CHECK(found);

    // ^k and explicit repetition parse identically
    auto a = parse_relation_expr(f, q, f.one(), "(beta*rho*omega)^2*beta*epsilon", 1);
    auto b = parse_relation_expr(f, q, f.one(),
                                 "beta*rho*omega*beta*rho*omega*beta*epsilon", 1);
    CHECK(fe_eq(f, a, b));

    // whitespace-insensitive
    auto c = parse_relation_expr(f, q, f.one(), "  gamma * delta-beta*epsilon ", 1);
    auto d = parse_relation_expr(f, q, f.one(), "gamma*delta - beta*epsilon", 1);
    CHECK(fe_eq(f, c, d));

    // scalar coefficients, fractions over q
    RationalField qq;
    auto e = parse_relation_expr(qq, q, qq.one(), "2/3*gamma*delta + beta*epsilon", 1);
    CHECK(e.terms.size() == 2);

    // errors: non-composable path, unknown arrow, mixed endpoints
    CHECK_THROWS_AS(parse_relation_expr(f, q, f.one(), "delta*alpha", 1), ParseError);
    CHECK_THROWS_AS(parse_relation_expr(f, q, f.one(), "delta*zeta", 1), ParseError);
    CHECK_THROWS_AS(parse_relation_expr(f, q, f.one(), "gamma*delta - delta*eta", 1), ParseError);
}

TEST_CASE("parse errors carry positions")
{
    const auto& f = fp();
    try {
        parse_presentation(f, "tetra-presentation v1\nvertex a\narrow x a b\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_presentation(f, "not-a-header\n"), ParseError);
    // field mismatch is refused
    CHECK_THROWS_AS(parse_presentation(f, "tetra-presentation v1\nfield q\n"), ParseError);
}

TEST_CASE("report serialization is deterministic")
{
    Report r;
    r.put("config", "m", 2);
    r.put("check dims", "dim", 72);
    r.put_bool("check dims", "ok", true);
    auto s1 = r.serialize();
    auto s2 = r.serialize();
    CHECK(s1 == s2);
    CHECK(s1.find("tetra-report v1\n") == 0);
    CHECK(s1.find("[check dims]\ndim = 72\nok = true\n") != std::string::npos);
}

#ifdef TETRA_CLI_PATH
TEST_CASE("cli runs are byte-identical for a fixed seed")
{
    std::string cli = TETRA_CLI_PATH;
    std::string base = cli + " --m 2 --lambda 1 --checks dims,symmetry --seed 99";
    REQUIRE(std::system((base + " --out /tmp/tetra_r1.txt > /dev/null").c_str()) == 0);
    REQUIRE(std::system((base + " --out /tmp/tetra_r2.txt > /dev/null").c_str()) == 0);
    CHECK(slurp("/tmp/tetra_r1.txt") == slurp("/tmp/tetra_r2.txt"));
    CHECK(!slurp("/tmp/tetra_r1.txt").empty());
}

TEST_CASE("cli exit status reflects failures")
{
    std::string cli = TETRA_CLI_PATH;
    // unknown check is a usage error
    CHECK(std::system((cli + " --checks nonsense > /dev/null 2>&1").c_str()) != 0);

    // emitted presentations re-parse through the presentation mode
    REQUIRE(std::system(
                (cli + " --emit-presentation lambda --m 2 --lambda 1 --out /tmp/tetra_p.txt")
                    .c_str()) == 0);
    CHECK(std::system(
              (cli + " --presentation /tmp/tetra_p.txt --out /tmp/tetra_pr.txt > /dev/null")
                  .c_str()) == 0);
    auto rep = slurp("/tmp/tetra_pr.txt");
    CHECK(rep.find("dim = 72") != std::string::npos);
}
#endif
