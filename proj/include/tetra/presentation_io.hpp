#pragma once

#include <cctype>
#include <functional>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/free_element.hpp"
#include "tetra/quiver.hpp"

namespace tetra {

struct ParseError : std::runtime_error {
    int line = 0, col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_)
    {
    }
};

namespace io_detail {

struct Token {
    enum Kind { name, number, sym, end } kind = end;
    std::string text;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& s, int line);

} // namespace io_detail

/// Relation expression grammar, whitespace-insensitive:
///   expr   := ['-'] product (('+'|'-') product)*
///   product:= atom ('*' atom)*
///   atom   := scalar | arrowname | '(' product ')' ['^' int] | arrowname '^' int
///   scalar := int | int '/' int | 'l'    (l is the presentation parameter)
/// A product multiplies its scalar atoms into the coefficient and
/// concatenates its path atoms.
template <class F>
FreeElem<F> parse_relation_expr(const F& f, const Quiver& q, typename F::Elem param,
                                const std::string& text, int line)
{
    using io_detail::Token;
    auto toks = io_detail::tokenize(text, line);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto advance = [&]() -> const Token& { return toks[pos++]; };
    auto expect_sym = [&](const char* s) {
        if (peek().kind != Token::sym || peek().text != s)
            throw ParseError(std::string("expected '") + s + "'", line, peek().col);
        ++pos;
    };

    struct Atom {
        bool is_scalar = false;
        typename F::Elem scalar{};
        std::vector<int> arrows;
    };

    std::function<Atom()> parse_atom = [&]() -> Atom {
        Atom a;
        const Token& t = peek();
        if (t.kind == Token::number) {
            advance();
            long long num = 0;
            try {
                num = std::stoll(t.text);
            } catch (const std::exception&) {
                throw ParseError("bad integer '" + t.text + "'", line, t.col);
            }
            a.is_scalar = true;
            a.scalar = f.from_long(num);
            if (peek().kind == Token::sym && peek().text == "/") {
                advance();
                if (peek().kind != Token::number)
                    throw ParseError("expected denominator", line, peek().col);
                const Token& d = advance();
                long long den = std::stoll(d.text);
                if (den == 0) throw ParseError("zero denominator", line, d.col);
                a.scalar = f.div(a.scalar, f.from_long(den));
            }
        } else if (t.kind == Token::name) {
            advance();
            if (t.text == "l") {
                a.is_scalar = true;
                a.scalar = param;
            } else {
                int idx = q.arrow_index(t.text);
                if (idx < 0) throw ParseError("unknown arrow '" + t.text + "'", line, t.col);
                a.arrows.push_back(idx);
            }
        } else if (t.kind == Token::sym && t.text == "(") {
            advance();
            // a parenthesized product of path atoms
            Atom inner = parse_atom();
            if (inner.is_scalar)
                throw ParseError("scalar inside path parentheses", line, t.col);
            while (peek().kind == Token::sym && peek().text == "*") {
                advance();
                Atom nxt = parse_atom();
                if (nxt.is_scalar)
                    throw ParseError("scalar inside path parentheses", line, peek().col);
                inner.arrows.insert(inner.arrows.end(), nxt.arrows.begin(), nxt.arrows.end());
            }
            expect_sym(")");
            a = inner;
        } else {
            throw ParseError("unexpected token '" + t.text + "'", line, t.col);
        }
        if (peek().kind == Token::sym && peek().text == "^") {
            advance();
            if (peek().kind != Token::number)
                throw ParseError("expected exponent", line, peek().col);
            const Token& e = advance();
            long long k = std::stoll(e.text);
            if (k < 0) throw ParseError("negative exponent", line, e.col);
            if (a.is_scalar) {
                auto base = a.scalar;
                a.scalar = f.one();
                for (long long i = 0; i < k; ++i) a.scalar = f.mul(a.scalar, base);
            } else {
                auto base = a.arrows;
                a.arrows.clear();
                for (long long i = 0; i < k; ++i)
                    a.arrows.insert(a.arrows.end(), base.begin(), base.end());
            }
        }
        return a;
    };

    std::vector<std::pair<Path, typename F::Elem>> terms;
    bool first = true;
    while (peek().kind != Token::end) {
        auto sign = f.one();
        if (peek().kind == Token::sym && (peek().text == "+" || peek().text == "-")) {
            if (peek().text == "-") sign = f.neg(sign);
            advance();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", line, peek().col);
        }
        first = false;
        auto coeff = sign;
        std::vector<int> arrows;
        bool any = false;
        while (true) {
            Atom a = parse_atom();
            any = true;
            if (a.is_scalar) coeff = f.mul(coeff, a.scalar);
            else arrows.insert(arrows.end(), a.arrows.begin(), a.arrows.end());
            if (peek().kind == Token::sym && peek().text == "*") advance();
            else break;
        }
        if (!any || arrows.empty())
            throw ParseError("relation term with no path part", line, peek().col);
        // validate composability, locate the source
        int src = q.arrows[arrows[0]].src;
        if (!composable(q, arrows, src))
            throw ParseError("non-composable path in relation", line, peek().col);
        terms.push_back({make_path(q, src, arrows), coeff});
    }
    auto fe = fe_canonical(f, std::move(terms));
    if (!fe_homogeneous_ends(fe))
        throw ParseError("relation terms have mixed endpoints", line, 1);
    return fe;
}

/// Text format:
///   tetra-presentation v1
///   field fp 1000003 | field q      (optional; must match when present)
///   param <scalar>                  (bound to "l"; optional, default 0)
///   m <int>
///   length_bound <int>
///   vertex <name>
///   arrow <name> <src> <tgt>
///   rel <expr>
/// '#' starts a comment; blank lines ignored.
template <class F>
Presentation<F> parse_presentation(const F& f, const std::string& text)
{
    Presentation<F> pres;
    pres.param = f.zero();
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header = false;
    std::vector<std::pair<std::string, int>> rel_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string word;
        if (!(ls >> word)) continue;
        if (!header) {
            std::string ver;
            if (word != "tetra-presentation" || !(ls >> ver) || ver != "v1")
                throw ParseError("expected header 'tetra-presentation v1'", lineno, 1);
            header = true;
            continue;
        }
        if (word == "field") {
            std::string kind;
            ls >> kind;
            std::string spec = kind;
            std::string p;
            if (ls >> p) spec += ":" + p;
            if (spec != f.name())
                throw ParseError("presentation field '" + spec + "' does not match " + f.name(),
                                 lineno, 1);
        } else if (word == "param") {
            std::string v;
            if (!(ls >> v)) throw ParseError("missing param value", lineno, 1);
            auto s = f.parse(v);
            if (!s) throw ParseError("bad scalar '" + v + "'", lineno, 1);
            pres.param = *s;
        } else if (word == "m") {
            if (!(ls >> pres.m)) throw ParseError("missing m", lineno, 1);
        } else if (word == "length_bound") {
            if (!(ls >> pres.length_bound)) throw ParseError("missing length_bound", lineno, 1);
        } else if (word == "vertex") {
            std::string name;
            if (!(ls >> name)) throw ParseError("missing vertex name", lineno, 1);
            if (pres.quiver.vertex_index(name) >= 0)
                throw ParseError("duplicate vertex '" + name + "'", lineno, 1);
            pres.quiver.vertex_names.push_back(name);
        } else if (word == "arrow") {
            std::string name, s, t;
            if (!(ls >> name >> s >> t)) throw ParseError("arrow needs name src tgt", lineno, 1);
            if (name == "l") throw ParseError("'l' is reserved for the parameter", lineno, 1);
            if (pres.quiver.arrow_index(name) >= 0)
                throw ParseError("duplicate arrow '" + name + "'", lineno, 1);
            int si = pres.quiver.vertex_index(s), ti = pres.quiver.vertex_index(t);
            if (si < 0 || ti < 0) throw ParseError("arrow references unknown vertex", lineno, 1);
            pres.quiver.arrows.push_back({name, si, ti});
        } else if (word == "rel") {
            std::string rest;
            std::getline(ls, rest);
            rel_lines.push_back({rest, lineno});
        } else {
            throw ParseError("unknown directive '" + word + "'", lineno, 1);
        }
    }
    if (!header) throw ParseError("empty presentation", 1, 1);
    for (const auto& [expr, ln] : rel_lines)
        pres.relations.push_back(parse_relation_expr(f, pres.quiver, pres.param, expr, ln));
    return pres;
}

template <class F>
std::string emit_presentation(const F& f, const Presentation<F>& pres)
{
    std::ostringstream out;
    out << "tetra-presentation v1\n";
    out << "field " << [&] {
        auto n = f.name();
        auto c = n.find(':');
        return c == std::string::npos ? n : n.substr(0, c) + " " + n.substr(c + 1);
    }() << "\n";
    out << "param " << f.to_string(pres.param) << "\n";
    out << "m " << pres.m << "\n";
    out << "length_bound " << pres.length_bound << "\n";
    for (const auto& v : pres.quiver.vertex_names) out << "vertex " << v << "\n";
    for (const auto& a : pres.quiver.arrows)
        out << "arrow " << a.name << " " << pres.quiver.vertex_names[a.src] << " "
            << pres.quiver.vertex_names[a.tgt] << "\n";
    for (const auto& r : pres.relations) out << "rel " << fe_to_string(f, pres.quiver, r) << "\n";
    return out.str();
}

} // namespace tetra
