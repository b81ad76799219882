#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "cubemorse/common.hpp"

namespace cubemorse::simplicial {

// Simplicial complex of dimension <= 2 (links of vertices in a 3-dimensional
// cube complex never exceed this). Every index in 0..labels.size()-1 is a
// vertex of the complex; faces of stored simplices are always present.
struct SimplicialComplex {
    std::vector<std::string> labels;
    std::set<std::array<int, 2>> edges;      // sorted pairs
    std::set<std::array<int, 3>> triangles;  // sorted triples

    int add_vertex(const std::string& label);
    void add_edge(int u, int v);
    void add_triangle(int u, int v, int w);  // inserts boundary edges too

    std::size_t num_vertices() const { return labels.size(); }
    bool has_edge(int u, int v) const;
    bool has_triangle(int u, int v, int w) const;
    bool empty() const { return labels.empty(); }

    std::vector<std::vector<int>> adjacency() const;

    // Subcomplex induced on a vertex subset, with a map from new to old ids.
    SimplicialComplex induced(const std::vector<int>& verts,
                              std::vector<int>* new_to_old = nullptr) const;
};

// Simplices are sorted vertex-index vectors; {} is the empty simplex.
using Simplex = std::vector<int>;

bool contains_simplex(const SimplicialComplex& L, const Simplex& s);

// Lk_L(sigma) = { tau : tau disjoint from sigma, tau u sigma in L }. The
// result keeps original labels; new_to_old maps its vertex ids back into L.
// Throws if sigma is not a simplex of L.
SimplicialComplex link_of_simplex(const SimplicialComplex& L, const Simplex& sigma,
                                  std::vector<int>* new_to_old = nullptr);

// True iff L equals the clique completion of its 1-skeleton. A 4-clique in
// the 1-skeleton always fails (the completion would need a 3-simplex).
bool is_flag(const SimplicialComplex& L, std::string* witness = nullptr);

// Finest partition of the vertices into join factors; returns one group (all
// vertices) when no nontrivial join exists. Groups are sorted vertex lists.
std::vector<std::vector<int>> join_decompose(const SimplicialComplex& L);

enum class ConnLevel { Empty, Nonempty, Connected, SimplyConnected };
enum class ConnMethod { Bfs, JoinCriterion, H1PlusJoin, Inconclusive };

struct ConnectivityVerdict {
    ConnLevel level = ConnLevel::Empty;
    ConnMethod method = ConnMethod::Bfs;
    bool acyclic_only = false;  // H1 = 0 held but no join certificate for pi_1
    std::string evidence;

    // Level achieved as an integer: empty -> -2, nonempty -> -1,
    // connected -> 0, simply connected -> 1.
    int level_value() const;
    bool reaches(int target) const { return level_value() >= target; }
};

// Decides connectivity up to the requested level (-1, 0 or 1). Simple
// connectivity is only ever certified through the join criterion; a complex
// with vanishing H1 but no join certificate is reported acyclic_only.
ConnectivityVerdict connectivity(const SimplicialComplex& L, int target_level);

// Rank of H_1(L; Z) by exact integer reduction of the boundary matrices.
// has_torsion reports a nontrivial invariant factor of d2 when requested.
int h1_rank(const SimplicialComplex& L, bool* has_torsion = nullptr);

// Joins and comparisons (test support and join-law checks).
SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y);
bool isomorphic_by_labels(const SimplicialComplex& X, const SimplicialComplex& Y);

}  // namespace cubemorse::simplicial
