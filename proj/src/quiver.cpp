#include "tetra/quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tetra {

int Quiver::vertex_index(const std::string& name) const
{
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_names[i] == name) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const
{
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

std::vector<std::vector<int>> Quiver::arrows_from() const
{
    std::vector<std::vector<int>> out(num_vertices());
    for (int a = 0; a < num_arrows(); ++a) out[arrows[a].src].push_back(a);
    return out;
}

std::vector<std::vector<int>> Quiver::arrows_into() const
{
    std::vector<std::vector<int>> in(num_vertices());
    for (int a = 0; a < num_arrows(); ++a) in[arrows[a].tgt].push_back(a);
    return in;
}

bool Quiver::operator==(const Quiver& o) const
{
    if (vertex_names != o.vertex_names) return false;
    if (arrows.size() != o.arrows.size()) return false;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].name != o.arrows[i].name || arrows[i].src != o.arrows[i].src ||
            arrows[i].tgt != o.arrows[i].tgt)
            return false;
    }
    return true;
}

bool composable(const Quiver& q, const std::vector<int>& arrows, int src)
{
    int at = src;
    for (int a : arrows) {
        if (a < 0 || a >= q.num_arrows()) return false;
        if (q.arrows[a].src != at) return false;
        at = q.arrows[a].tgt;
    }
    return true;
}

Path make_path(const Quiver& q, int src, const std::vector<int>& arrows)
{
    if (!composable(q, arrows, src))
        throw std::invalid_argument("non-composable arrow sequence");
    Path p;
    p.src = src;
    p.arrows = arrows;
    p.tgt = arrows.empty() ? src : q.arrows[arrows.back()].tgt;
    return p;
}

Path trivial_path(int v)
{
    Path p;
    p.src = p.tgt = v;
    return p;
}

Path concat(const Quiver&, const Path& p, const Path& r)
{
    if (p.tgt != r.src) throw std::invalid_argument("concat: paths do not compose");
    Path out;
    out.src = p.src;
    out.tgt = r.tgt;
    out.arrows = p.arrows;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

int path_cmp(const Path& a, const Path& b)
{
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    if (a.arrows != b.arrows) return a.arrows < b.arrows ? -1 : 1;
    if (a.src != b.src) return a.src < b.src ? -1 : 1;
    return 0;
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.trivial()) return "e_" + q.vertex_names[p.src];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len, int min_len)
{
    if (max_len < 0) throw std::invalid_argument("enumerate_paths: max_len must be >= 0");
    std::vector<Path> out;
    auto outgoing = q.arrows_from();
    std::vector<Path> level;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (from < 0 || v == from) level.push_back(trivial_path(v));
    for (int len = 0; len <= max_len; ++len) {
        if (len >= min_len)
            for (const auto& p : level)
                if (to < 0 || p.tgt == to) out.push_back(p);
        if (len == max_len) break;
        std::vector<Path> next;
        for (const auto& p : level)
            for (int a : outgoing[p.tgt]) {
                Path np = p;
                np.arrows.push_back(a);
                np.tgt = q.arrows[a].tgt;
                next.push_back(np);
            }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), PathLess{});
    return out;
}

ValidationReport validate_triangulation(const TriangulationQuiver& tq)
{
    ValidationReport rep;
    const Quiver& q = tq.quiver;
    int na = q.num_arrows();
    auto is_perm = [&](const std::vector<int>& m) {
        if (static_cast<int>(m.size()) != na) return false;
        std::vector<bool> seen(na, false);
        for (int v : m) {
            if (v < 0 || v >= na || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    };
    if (!is_perm(tq.f) || !is_perm(tq.bar) || !is_perm(tq.g)) {
        rep.failures.push_back("f/bar/g are not arrow permutations");
        return rep;
    }
    for (int a = 0; a < na; ++a) {
        if (tq.f[tq.f[tq.f[a]]] != a) {
            rep.failures.push_back("f^3 != id at arrow " + q.arrows[a].name);
            break;
        }
    }
    for (int a = 0; a < na; ++a) {
        if (tq.bar[a] == a || tq.bar[tq.bar[a]] != a) {
            rep.failures.push_back("bar is not a fixed-point-free involution at " + q.arrows[a].name);
            break;
        }
        if (q.arrows[tq.bar[a]].src != q.arrows[a].src) {
            rep.failures.push_back("bar does not preserve sources at " + q.arrows[a].name);
            break;
        }
    }
    for (int a = 0; a < na; ++a) {
        if (tq.g[a] != tq.bar[tq.f[a]]) {
            rep.failures.push_back("g != bar∘f at arrow " + q.arrows[a].name);
            break;
        }
    }
    // arrows compose along f-orbits: t(a) = s(f(a))
    for (int a = 0; a < na; ++a) {
        if (q.arrows[a].tgt != q.arrows[tq.f[a]].src) {
            rep.failures.push_back("t(a) != s(f(a)) at arrow " + q.arrows[a].name);
            break;
        }
    }
    auto outd = q.arrows_from();
    auto ind = q.arrows_into();
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (outd[v].size() != 2 || ind[v].size() != 2) {
            rep.failures.push_back("2-regularity fails at vertex " + q.vertex_names[v]);
            break;
        }
    }
    return rep;
}

TriangulationQuiver tetrahedral_quiver()
{
    TriangulationQuiver tq;
    Quiver& q = tq.quiver;
    q.vertex_names = {"1", "2", "3", "4", "5", "6"};
    auto V = [&](int name) { return name - 1; };
    // arrows in alphabetical order; this fixes the path order everywhere
    q.arrows = {
        {"alpha", V(3), V(1)}, {"beta", V(4), V(2)},  {"gamma", V(4), V(1)},
        {"delta", V(1), V(5)}, {"epsilon", V(2), V(5)}, {"eta", V(5), V(4)},
        {"mu", V(6), V(3)},    {"nu", V(1), V(6)},     {"xi", V(5), V(3)},
        {"rho", V(2), V(6)},   {"sigma", V(3), V(2)},  {"omega", V(6), V(4)},
    };
    int na = q.num_arrows();
    auto A = [&](const char* n) { return q.arrow_index(n); };
    tq.f.assign(na, -1);
    auto cyc = [&](const char* a, const char* b, const char* c) {
        tq.f[A(a)] = A(b);
        tq.f[A(b)] = A(c);
        tq.f[A(c)] = A(a);
    };
    // the four shaded triangles
    cyc("delta", "eta", "gamma");
    cyc("nu", "mu", "alpha");
    cyc("rho", "omega", "beta");
    cyc("epsilon", "xi", "sigma");
    tq.bar.assign(na, -1);
    auto outgoing = q.arrows_from();
    for (int v = 0; v < q.num_vertices(); ++v) {
        tq.bar[outgoing[v][0]] = outgoing[v][1];
        tq.bar[outgoing[v][1]] = outgoing[v][0];
    }
    tq.g.assign(na, -1);
    for (int a = 0; a < na; ++a) tq.g[a] = tq.bar[tq.f[a]];
    return tq;
}

QuiverAutomorphism tetrahedral_phi()
{
    TriangulationQuiver tq = tetrahedral_quiver();
    const Quiver& q = tq.quiver;
    QuiverAutomorphism phi;
    phi.vertex_map.assign(q.num_vertices(), -1);
    phi.arrow_map.assign(q.num_arrows(), -1);
    auto vcyc = [&](const char* a, const char* b, const char* c) {
        phi.vertex_map[q.vertex_index(a)] = q.vertex_index(b);
        phi.vertex_map[q.vertex_index(b)] = q.vertex_index(c);
        phi.vertex_map[q.vertex_index(c)] = q.vertex_index(a);
    };
    vcyc("5", "4", "2");
    vcyc("1", "6", "3");
    auto acyc = [&](const char* a, const char* b, const char* c) {
        phi.arrow_map[q.arrow_index(a)] = q.arrow_index(b);
        phi.arrow_map[q.arrow_index(b)] = q.arrow_index(c);
        phi.arrow_map[q.arrow_index(c)] = q.arrow_index(a);
    };
    acyc("delta", "omega", "sigma");
    acyc("eta", "beta", "epsilon");
    acyc("gamma", "rho", "xi");
    acyc("nu", "mu", "alpha");
    return phi;
}

std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& perm)
{
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> orb;
        int x = static_cast<int>(s);
        while (!seen[x]) {
            seen[x] = true;
            orb.push_back(x);
            x = perm[x];
        }
        orbits.push_back(orb);
    }
    return orbits;
}

} // namespace tetra
