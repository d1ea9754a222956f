#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/basis_algebra.hpp"
#include "tetra/free_element.hpp"
#include "tetra/path_table.hpp"

namespace tetra {

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row vector over path ids, sorted descending (leading term first).
template <class F>
using PVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

struct QuotientDiagnostics {
    int L = 0;
    std::size_t n_paths = 0;
    std::size_t n_rows = 0;
    bool long_paths_vanish = true; // true iff every certified long path reduces to exactly 0
};

/// Ideal closure by reduced rewriting rows.
///
/// Rows live in the span of { a·r·b : r relation } and are indexed by
/// their leading (= greatest, = longest) path. New rows are reduced on
/// insertion; every inserted row is multiplied once by each arrow on both
/// sides, products whose leading would exceed the table are dropped. The
/// post-hoc certificate (see quotient_basis) makes the computed basis
/// provably correct rather than heuristically so.
template <class F>
class IdealCloser {
public:
    IdealCloser(const F& f, const PathTable& pt) : f_(f), pt_(pt)
    {
        row_at_.assign(pt.size(), NPOS);
    }

    void add_relation(const PVec<F>& v) { insert(v); }

    void close()
    {
        while (!queue_.empty()) {
            auto top = queue_.top();
            queue_.pop();
            std::uint32_t row = top.second;
            const PVec<F> v = rows_[row]; // copy: rows_ may reallocate
            std::uint32_t lead = v[0].first;
            if (static_cast<int>(pt_.len[lead]) + 1 > pt_.L) continue;
            int src = pt_.src[lead];
            int tgt = pt_.tgt[lead];
            // a term extension may hit a pruned (dead) window; such a term
            // lies in the monomial part of the ideal and is dropped
            for (int a = 0; a < pt_.na; ++a) {
                if (pt_.q->arrows[a].src == tgt) {
                    PVec<F> prod;
                    prod.reserve(v.size());
                    for (const auto& [id, c] : v) {
                        auto ext = pt_.extend(id, a);
                        if (ext != NPOS) prod.push_back({ext, c});
                    }
                    if (!prod.empty()) insert(std::move(prod));
                }
                if (pt_.q->arrows[a].tgt == src) {
                    PVec<F> prod;
                    prod.reserve(v.size());
                    for (const auto& [id, c] : v) {
                        auto ext = pt_.prefix_with(a, id);
                        if (ext != NPOS) prod.push_back({ext, c});
                    }
                    if (!prod.empty()) insert(std::move(prod));
                }
            }
        }
    }

    bool is_pivot(std::uint32_t id) const { return row_at_[id] != NPOS; }

    /// Full normal form against the row set.
    PVec<F> reduce(PVec<F> v) const
    {
        std::size_t i = 0;
        while (i < v.size()) {
            std::uint32_t r = row_at_[v[i].first];
            if (r == NPOS) {
                ++i;
                continue;
            }
            v = axpy(v, rows_[r], f_.neg(v[i].second));
            // the leading of rows_[r] cancelled v[i]; everything new is smaller
        }
        return v;
    }

    std::size_t row_count() const { return rows_.size(); }

private:
    static constexpr std::uint32_t NPOS = PathTable::NPOS;

    // dst + c*src, both sorted descending
    PVec<F> axpy(const PVec<F>& a, const PVec<F>& b, typename F::Elem c) const
    {
        PVec<F> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first > a[i].first) {
                auto v = f_.mul(b[j].second, c);
                if (!f_.is_zero(v)) out.push_back({b[j].first, v});
                ++j;
            } else {
                auto v = f_.add(a[i].second, f_.mul(b[j].second, c));
                if (!f_.is_zero(v)) out.push_back({a[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void insert(PVec<F> v)
    {
        // reduce the leading term until it is fresh, then normalize
        while (!v.empty()) {
            std::uint32_t r = row_at_[v[0].first];
            if (r == NPOS) break;
            v = axpy(v, rows_[r], f_.neg(v[0].second));
        }
        if (v.empty()) return;
        auto lead_inv = f_.inv(v[0].second);
        for (auto& t : v) t.second = f_.mul(t.second, lead_inv);
        // light tail reduction keeps rows small
        std::size_t i = 1;
        while (i < v.size()) {
            std::uint32_t r = row_at_[v[i].first];
            if (r == NPOS) {
                ++i;
                continue;
            }
            v = axpy(v, rows_[r], f_.neg(v[i].second));
        }
        std::uint32_t lead = v[0].first;
        rows_.push_back(std::move(v));
        row_at_[lead] = static_cast<std::uint32_t>(rows_.size() - 1);
        queue_.push({lead, static_cast<std::uint32_t>(rows_.size() - 1)});
    }

    const F& f_;
    const PathTable& pt_;
    std::vector<PVec<F>> rows_;
    std::vector<std::uint32_t> row_at_;
    // process shortest leadings first; pair = (leading id, row index)
    std::priority_queue<std::pair<std::uint32_t, std::uint32_t>,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>>,
                        std::greater<>>
        queue_;
};

/// Quotient of the path algebra by the relation ideal, as an explicit
/// BasisAlgebra. Throws CertificateError when the reduction certificate
/// fails at the given headroom (caller may retry with a larger one).
///
/// Correctness is sandwiched, not assumed: rows lie in the ideal (upper
/// bound on the dimension), and verify_basis_algebra establishes that the
/// candidate is an associative unital algebra in which every relation
/// vanishes and every basis label is the product of its own arrows (lower
/// bound via the evaluation epimorphism).
template <class F>
BasisAlgebra<F> quotient_basis(const F& f, const Presentation<F>& pres, int headroom = 2,
                               QuotientDiagnostics* diag = nullptr)
{
    if (headroom < 1) throw std::invalid_argument("quotient_basis: headroom must be >= 1");
    validate_presentation(f, pres);
    const int bound = pres.length_bound;
    const int L = bound + headroom;
    const int na = pres.quiver.num_arrows();

    // single-term length-2 relations become pruned windows of the path
    // table; everything passing through them sits in the ideal for free
    std::vector<bool> dead(static_cast<std::size_t>(na) * na, false);
    for (const auto& r : pres.relations)
        if (r.terms.size() == 1 && r.terms[0].first.length() == 2) {
            const auto& arid = r.terms[0].first.arrows;
            dead[arid[0] * na + arid[1]] = true;
        }
    PathTable pt = build_path_table(pres.quiver, L, &dead);

    auto contains_dead = [&](const Path& p) {
        for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
            if (dead[p.arrows[k] * na + p.arrows[k + 1]]) return true;
        return false;
    };

    IdealCloser<F> closer(f, pt);
    for (const auto& r : pres.relations) {
        PVec<F> v;
        for (const auto& [p, c] : r.terms) {
            if (contains_dead(p)) continue; // already in the monomial part
            auto id = pt.id_of(p);
            if (id == PathTable::NPOS)
                throw std::invalid_argument("relation path exceeds the path table");
            v.push_back({id, c});
        }
        if (v.empty()) continue;
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        closer.add_relation(v);
    }
    closer.close();

    // certificate: every path of length bound+1 reduces into lengths
    // <= bound (the leading term of a normal form is its longest term).
    // Longer paths follow by folding one arrow at a time, so this single
    // level is what the dimension argument needs.
    bool vanish = true;
    for (std::uint32_t id = pt.level_begin[bound + 1]; id < pt.level_end(bound + 1); ++id) {
        PVec<F> nf = closer.reduce(PVec<F>{{id, f.one()}});
        if (!nf.empty()) {
            vanish = false;
            if (static_cast<int>(pt.len[nf[0].first]) > bound)
                throw CertificateError("certificate failed: path " +
                                       path_to_string(pres.quiver, pt.path_of(id)) +
                                       " does not reduce below the length bound");
        }
    }

    // basis = non-pivot paths of length <= bound
    std::vector<std::uint32_t> basis_ids;
    for (std::uint32_t id = 0; id < pt.level_end(bound) && id < pt.size(); ++id)
        if (!closer.is_pivot(id)) basis_ids.push_back(id);

    std::vector<std::uint32_t> basis_index(pt.size(), PathTable::NPOS);
    for (std::size_t i = 0; i < basis_ids.size(); ++i)
        basis_index[basis_ids[i]] = static_cast<std::uint32_t>(i);

    const int dim = static_cast<int>(basis_ids.size());

    // one-arrow step table over basis coordinates
    auto to_svec = [&](const PVec<F>& v) {
        SVec<F> out;
        out.reserve(v.size());
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
            if (basis_index[it->first] == PathTable::NPOS)
                throw CertificateError("reduced vector leaves the basis span");
            out.push_back({basis_index[it->first], it->second});
        }
        return out;
    };
    std::vector<SVec<F>> step(static_cast<std::size_t>(dim) * na);
    for (int b = 0; b < dim; ++b) {
        std::uint32_t id = basis_ids[b];
        for (int a = 0; a < na; ++a) {
            if (pres.quiver.arrows[a].src != pt.tgt[id]) continue;
            std::uint32_t ext = pt.extend(id, a);
            if (ext == PathTable::NPOS) continue; // pruned window: the extension is 0
            step[static_cast<std::size_t>(b) * na + a] =
                to_svec(closer.reduce(PVec<F>{{ext, f.one()}}));
        }
    }

    BasisAlgebra<F> alg(f);
    alg.quiver = pres.quiver;
    alg.vertices.resize(pres.quiver.num_vertices());
    for (int v = 0; v < pres.quiver.num_vertices(); ++v) alg.vertices[v] = v;
    alg.labels.reserve(dim);
    for (auto id : basis_ids) alg.labels.push_back(pt.path_of(id));
    alg.idem.assign(pres.quiver.num_vertices(), -1);
    for (int v = 0; v < pres.quiver.num_vertices(); ++v) {
        auto bi = basis_index[v]; // trivial path ids are the vertex ids
        if (bi == PathTable::NPOS)
            throw CertificateError("trivial path eliminated; presentation ideal is not proper");
        alg.idem[v] = static_cast<int>(bi);
    }
    alg.arrow_elem.assign(na, SVec<F>{});
    for (int a = 0; a < na; ++a) {
        std::uint32_t id = pt.level_begin[1] + a;
        auto nf = closer.reduce(PVec<F>{{id, f.one()}});
        alg.arrow_elem[a] = to_svec(nf);
    }

    // structure constants by folding the right factor's arrows
    alg.table.assign(static_cast<std::size_t>(dim) * dim, SVec<F>{});
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (alg.tgt_of(i) != alg.src_of(j)) continue;
            SVec<F> acc{{static_cast<std::uint32_t>(i), f.one()}};
            for (int a : alg.labels[j].arrows) {
                SVec<F> next;
                for (const auto& [b, c] : acc)
                    next = sv_add(f, next, step[static_cast<std::size_t>(b) * na + a], c);
                acc = std::move(next);
                if (acc.empty()) break;
            }
            alg.table[static_cast<std::size_t>(i) * dim + j] = std::move(acc);
        }
    }

    if (diag) {
        diag->L = L;
        diag->n_paths = pt.size();
        diag->n_rows = closer.row_count();
        diag->long_paths_vanish = vanish;
    }

    verify_basis_algebra(alg, &pres.relations);
    return alg;
}

/// Re-run at headroom+1 and compare dimensions (a stabilization
/// diagnostic; the certificate already seals correctness).
template <class F>
bool stabilization_check(const F& f, const Presentation<F>& pres, int headroom)
{
    QuotientDiagnostics d1, d2;
    auto a = quotient_basis(f, pres, headroom, &d1);
    auto b = quotient_basis(f, pres, headroom + 1, &d2);
    return a.dim() == b.dim();
}

} // namespace tetra
