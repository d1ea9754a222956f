#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/quiver.hpp"

namespace tetra {

/// Formal linear combination of paths, canonical: terms sorted in path
/// order, no zero coefficients.
template <class F>
struct FreeElem {
    using Elem = typename F::Elem;
    std::vector<std::pair<Path, Elem>> terms;

    bool zero() const { return terms.empty(); }
};

template <class F>
FreeElem<F> fe_canonical(const F& f, std::vector<std::pair<Path, typename F::Elem>> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return path_cmp(a.first, b.first) < 0; });
    FreeElem<F> out;
    for (auto& t : terms) {
        if (!out.terms.empty() && path_cmp(out.terms.back().first, t.first) == 0)
            out.terms.back().second = f.add(out.terms.back().second, t.second);
        else
            out.terms.push_back(std::move(t));
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [&](const auto& t) { return f.is_zero(t.second); }),
                    out.terms.end());
    return out;
}

template <class F>
FreeElem<F> fe_path(const F& f, const Path& p, typename F::Elem c)
{
    if (f.is_zero(c)) return {};
    return FreeElem<F>{{{p, c}}};
}

template <class F>
FreeElem<F> fe_add(const F& f, const FreeElem<F>& a, const FreeElem<F>& b)
{
    auto terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return fe_canonical(f, std::move(terms));
}

template <class F>
FreeElem<F> fe_scale(const F& f, const FreeElem<F>& a, typename F::Elem c)
{
    FreeElem<F> out;
    if (f.is_zero(c)) return out;
    for (const auto& t : a.terms) out.terms.push_back({t.first, f.mul(t.second, c)});
    return out;
}

template <class F>
FreeElem<F> fe_sub(const F& f, const FreeElem<F>& a, const FreeElem<F>& b)
{
    return fe_add(f, a, fe_scale(f, b, f.neg(f.one())));
}

template <class F>
bool fe_eq(const F& f, const FreeElem<F>& a, const FreeElem<F>& b)
{
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (path_cmp(a.terms[i].first, b.terms[i].first) != 0 ||
            !f.eq(a.terms[i].second, b.terms[i].second))
            return false;
    return true;
}

/// True when all terms share one source and one target (the shape a
/// relation must have).
template <class F>
bool fe_homogeneous_ends(const FreeElem<F>& a)
{
    for (std::size_t i = 1; i < a.terms.size(); ++i)
        if (a.terms[i].first.src != a.terms[0].first.src ||
            a.terms[i].first.tgt != a.terms[0].first.tgt)
            return false;
    return true;
}

/// Quiver with parameter and relation list. length_bound is the expected
/// maximal length of a path that survives in the quotient (3m for the
/// tetrahedral family); quotient_basis certifies it.
template <class F>
struct Presentation {
    Quiver quiver;
    std::vector<FreeElem<F>> relations;
    typename F::Elem param;   // bound to "l" in the text format
    int m = 2;
    int length_bound = 6;
};

template <class F>
void validate_presentation(const F& f, const Presentation<F>& pres)
{
    for (const auto& r : pres.relations) {
        if (r.zero()) throw std::invalid_argument("presentation: zero relation");
        if (!fe_homogeneous_ends(r))
            throw std::invalid_argument("presentation: relation terms have mixed endpoints");
        for (const auto& t : r.terms) {
            if (t.first.length() < 1)
                throw std::invalid_argument("presentation: relation with a length-0 term");
            if (!composable(pres.quiver, t.first.arrows, t.first.src))
                throw std::invalid_argument("presentation: non-composable relation path");
            if (f.is_zero(t.second)) throw std::invalid_argument("presentation: zero coefficient");
        }
    }
}

template <class F>
bool presentation_eq(const F& f, const Presentation<F>& a, const Presentation<F>& b)
{
    if (!(a.quiver == b.quiver)) return false;
    if (a.relations.size() != b.relations.size()) return false;
    for (std::size_t i = 0; i < a.relations.size(); ++i)
        if (!fe_eq(f, a.relations[i], b.relations[i])) return false;
    return f.eq(a.param, b.param) && a.m == b.m && a.length_bound == b.length_bound;
}

template <class F>
std::string fe_to_string(const F& f, const Quiver& q, const FreeElem<F>& a)
{
    if (a.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        std::string c = f.to_string(a.terms[i].second);
        if (i) s += c[0] == '-' ? " - " : " + ";
        else if (c[0] == '-') s += "-";
        std::string mag = c[0] == '-' ? c.substr(1) : c;
        if (mag != "1") s += mag + "*";
        s += path_to_string(q, a.terms[i].first);
    }
    return s;
}

} // namespace tetra
