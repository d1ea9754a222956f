#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

/// Finite quiver: named vertices, named arrows with source/target.
/// Vertices and arrows are referred to by dense 0-based indices; names
/// exist for I/O and reports.
struct Quiver {
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;

    std::vector<std::vector<int>> arrows_from() const; // per vertex: outgoing arrow ids
    std::vector<std::vector<int>> arrows_into() const; // per vertex: incoming arrow ids

    bool operator==(const Quiver& o) const;
};

/// Path = source vertex plus a composable arrow sequence (empty = trivial
/// path e_src). Target is cached.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
};

Path make_path(const Quiver& q, int src, const std::vector<int>& arrows);
Path trivial_path(int v);
/// Concatenation p·r; requires p.tgt == r.src.
Path concat(const Quiver& q, const Path& p, const Path& r);
bool composable(const Quiver& q, const std::vector<int>& arrows, int src);

/// Length-lexicographic order on paths: by length, then by the arrow id
/// sequence, then by source (relevant only for trivial paths).
int path_cmp(const Path& a, const Path& b);
struct PathLess {
    bool operator()(const Path& a, const Path& b) const { return path_cmp(a, b) < 0; }
};

std::string path_to_string(const Quiver& q, const Path& p);

/// All paths with the given constraints, in length-lexicographic order.
/// from/to may be -1 for "any".
std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len, int min_len = 0);

/// Triangulation structure: f of order 3 (shaded triangles), bar the
/// fixed-point-free source-preserving involution, g = bar ∘ f.
struct TriangulationQuiver {
    Quiver quiver;
    std::vector<int> f;   // arrow permutation
    std::vector<int> bar; // arrow involution
    std::vector<int> g;   // arrow permutation, g = bar ∘ f
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate_triangulation(const TriangulationQuiver& tq);

/// The triangulation quiver of the tetrahedron: 6 vertices, 12 arrows
/// alpha..omega, f given by the four shaded 3-cycles, g = bar ∘ f.
TriangulationQuiver tetrahedral_quiver();

/// The order-3 quiver automorphism (5 4 2)(1 6 3) on vertices,
/// (delta omega sigma)(eta beta epsilon)(gamma rho xi)(nu mu alpha) on arrows.
struct QuiverAutomorphism {
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;
};
QuiverAutomorphism tetrahedral_phi();

std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& perm);

} // namespace tetra
