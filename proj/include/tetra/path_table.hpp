#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tetra/quiver.hpp"

namespace tetra {

/// Dense enumeration of all paths of length <= L in a quiver. Ids are
/// assigned in length-lexicographic order, so id comparison IS path-order
/// comparison; that is what the ideal closure pivots on. child/prepend
/// give O(1) one-arrow extension on either side.
struct PathTable {
    static constexpr std::uint32_t NPOS = std::numeric_limits<std::uint32_t>::max();

    const Quiver* q = nullptr;
    int L = 0;
    int na = 0;

    std::vector<std::uint8_t> src, tgt, len;
    std::vector<std::uint8_t> first_arrow, last_arrow; // 0xff for trivial paths
    std::vector<std::uint32_t> parent;                 // drop last arrow
    std::vector<std::uint32_t> suffix;                 // drop first arrow
    std::vector<std::uint32_t> child;                  // [id*na + a]
    std::vector<std::uint32_t> prepend;                // [id*na + a] -> id of a.path
    std::vector<std::uint32_t> level_begin;            // level_begin[l] = first id of length l

    std::size_t size() const { return src.size(); }
    std::uint32_t level_end(int l) const {
        return l + 1 < static_cast<int>(level_begin.size()) ? level_begin[l + 1]
                                                            : static_cast<std::uint32_t>(size());
    }

    std::uint32_t extend(std::uint32_t id, int a) const { return child[id * na + a]; }
    std::uint32_t prefix_with(int a, std::uint32_t id) const { return prepend[id * na + a]; }

    Path path_of(std::uint32_t id) const
    {
        Path p;
        p.tgt = tgt[id];
        std::vector<int> rev;
        std::uint32_t cur = id;
        while (len[cur] > 0) {
            rev.push_back(last_arrow[cur]);
            cur = parent[cur];
        }
        p.src = src[cur];
        p.arrows.assign(rev.rbegin(), rev.rend());
        return p;
    }

    std::uint32_t id_of(const Path& p) const
    {
        if (p.length() > L) return NPOS;
        std::uint32_t cur = p.src; // trivial path ids are 0..nv-1 in vertex order
        for (int a : p.arrows) {
            cur = extend(cur, a);
            if (cur == NPOS) return NPOS;
        }
        return cur;
    }
};

/// dead_pairs[a * na + b] marks two-arrow windows that are known monomial
/// relations: paths through them lie in the ideal and are pruned from the
/// enumeration entirely.
inline PathTable build_path_table(const Quiver& q, int L,
                                  const std::vector<bool>* dead_pairs = nullptr)
{
    PathTable t;
    t.q = &q;
    t.L = L;
    t.na = q.num_arrows();
    int nv = q.num_vertices();

    auto push = [&](int s, int g, int l, int fa, int la, std::uint32_t par) {
        if (t.src.size() >= 20'000'000)
            throw std::runtime_error("path table too large; lower m or the headroom");
        t.src.push_back(static_cast<std::uint8_t>(s));
        t.tgt.push_back(static_cast<std::uint8_t>(g));
        t.len.push_back(static_cast<std::uint8_t>(l));
        t.first_arrow.push_back(static_cast<std::uint8_t>(fa));
        t.last_arrow.push_back(static_cast<std::uint8_t>(la));
        t.parent.push_back(par);
        t.suffix.push_back(PathTable::NPOS);
        return static_cast<std::uint32_t>(t.src.size() - 1);
    };

    if (L > 250) throw std::invalid_argument("path table: length bound too large");

    t.level_begin.push_back(0);
    for (int v = 0; v < nv; ++v) {
        auto id = push(v, v, 0, 0xff, 0xff, PathTable::NPOS);
        t.suffix[id] = id;
    }

    // children filled level by level; level 1 is ordered by arrow id which
    // keeps the global order length-lexicographic
    std::vector<std::uint32_t> prev_level;
    t.level_begin.push_back(static_cast<std::uint32_t>(t.size()));
    std::vector<std::uint32_t> lvl1;
    for (int a = 0; a < t.na; ++a) {
        auto id = push(q.arrows[a].src, q.arrows[a].tgt, 1, a, a,
                       static_cast<std::uint32_t>(q.arrows[a].src));
        t.suffix[id] = static_cast<std::uint32_t>(q.arrows[a].tgt);
        lvl1.push_back(id);
    }
    prev_level = lvl1;

    for (int l = 2; l <= L; ++l) {
        t.level_begin.push_back(static_cast<std::uint32_t>(t.size()));
        std::vector<std::uint32_t> cur;
        for (std::uint32_t pid : prev_level) {
            for (int a = 0; a < t.na; ++a) {
                if (q.arrows[a].src != t.tgt[pid]) continue;
                if (dead_pairs && (*dead_pairs)[t.last_arrow[pid] * t.na + a]) continue;
                auto id = push(t.src[pid], q.arrows[a].tgt, l, t.first_arrow[pid], a, pid);
                cur.push_back(id);
            }
        }
        prev_level = std::move(cur);
        if (prev_level.empty()) break;
    }
    while (static_cast<int>(t.level_begin.size()) <= L + 1)
        t.level_begin.push_back(static_cast<std::uint32_t>(t.size()));

    // child table
    t.child.assign(t.size() * t.na, PathTable::NPOS);
    for (std::uint32_t id = 0; id < t.size(); ++id) {
        if (t.len[id] == 0) continue;
        t.child[t.parent[id] * t.na + t.last_arrow[id]] = id;
    }
    // suffixes need children of the suffix's parent
    for (std::uint32_t id = 0; id < t.size(); ++id) {
        if (t.len[id] < 2) continue;
        t.suffix[id] = t.child[t.suffix[t.parent[id]] * t.na + t.last_arrow[id]];
    }
    // prepend table from (first_arrow, suffix) decomposition
    t.prepend.assign(t.size() * t.na, PathTable::NPOS);
    for (std::uint32_t id = 0; id < t.size(); ++id) {
        if (t.len[id] == 0) continue;
        t.prepend[t.suffix[id] * t.na + t.first_arrow[id]] = id;
    }
    return t;
}

} // namespace tetra
