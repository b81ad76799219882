#include "cubemorse/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cubemorse::simplicial {

int SimplicialComplex::add_vertex(const std::string& label) {
    labels.push_back(label);
    return static_cast<int>(labels.size()) - 1;
}

void SimplicialComplex::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
}

void SimplicialComplex::add_triangle(int u, int v, int w) {
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("degenerate triangle");
    triangles.insert(t);
    add_edge(t[0], t[1]);
    add_edge(t[0], t[2]);
    add_edge(t[1], t[2]);
}

bool SimplicialComplex::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
}

bool SimplicialComplex::has_triangle(int u, int v, int w) const {
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    return triangles.count(t) > 0;
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<int>> adj(num_vertices());
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    return adj;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& verts,
                                             std::vector<int>* new_to_old) const {
    std::map<int, int> old_to_new;
    SimplicialComplex out;
    for (int v : verts)
        if (!old_to_new.count(v)) old_to_new[v] = out.add_vertex(labels[v]);
    if (new_to_old) {
        new_to_old->assign(out.num_vertices(), -1);
        for (auto [o, n] : old_to_new) (*new_to_old)[n] = o;
    }
    for (const auto& e : edges) {
        auto a = old_to_new.find(e[0]), b = old_to_new.find(e[1]);
        if (a != old_to_new.end() && b != old_to_new.end()) out.add_edge(a->second, b->second);
    }
    for (const auto& t : triangles) {
        auto a = old_to_new.find(t[0]), b = old_to_new.find(t[1]), c = old_to_new.find(t[2]);
        if (a != old_to_new.end() && b != old_to_new.end() && c != old_to_new.end())
            out.add_triangle(a->second, b->second, c->second);
    }
    return out;
}

bool contains_simplex(const SimplicialComplex& L, const Simplex& s) {
    switch (s.size()) {
        case 0: return true;
        case 1: return s[0] >= 0 && static_cast<std::size_t>(s[0]) < L.num_vertices();
        case 2: return L.has_edge(s[0], s[1]);
        case 3: return L.has_triangle(s[0], s[1], s[2]);
        default: return false;
    }
}

SimplicialComplex link_of_simplex(const SimplicialComplex& L, const Simplex& sigma,
                                  std::vector<int>* new_to_old) {
    if (!contains_simplex(L, sigma)) throw std::invalid_argument("sigma is not a simplex of L");
    if (sigma.empty()) {
        if (new_to_old) {
            new_to_old->resize(L.num_vertices());
            std::iota(new_to_old->begin(), new_to_old->end(), 0);
        }
        return L;
    }
    auto in_sigma = [&](int v) { return std::find(sigma.begin(), sigma.end(), v) != sigma.end(); };
    auto joined = [&](Simplex tau) {
        tau.insert(tau.end(), sigma.begin(), sigma.end());
        std::sort(tau.begin(), tau.end());
        return contains_simplex(L, tau);
    };
    SimplicialComplex out;
    std::map<int, int> old_to_new;
    for (int v = 0; v < static_cast<int>(L.num_vertices()); ++v)
        if (!in_sigma(v) && joined({v})) old_to_new[v] = out.add_vertex(L.labels[v]);
    for (const auto& e : L.edges) {
        if (in_sigma(e[0]) || in_sigma(e[1])) continue;
        if (old_to_new.count(e[0]) && old_to_new.count(e[1]) && joined({e[0], e[1]}))
            out.add_edge(old_to_new[e[0]], old_to_new[e[1]]);
    }
    if (new_to_old) {
        new_to_old->assign(out.num_vertices(), -1);
        for (auto [o, n] : old_to_new) (*new_to_old)[n] = o;
    }
    // Triangles only survive for the empty simplex in dimension <= 2.
    return out;
}

bool is_flag(const SimplicialComplex& L, std::string* witness) {
    auto adj = L.adjacency();
    std::vector<std::set<int>> nset(L.num_vertices());
    for (const auto& e : L.edges) {
        nset[e[0]].insert(e[1]);
        nset[e[1]].insert(e[0]);
    }
    for (const auto& e : L.edges) {
        for (int w : adj[e[0]]) {
            if (w <= e[1]) continue;
            if (!nset[e[1]].count(w)) continue;
            // 3-clique {e0, e1, w}
            if (!L.has_triangle(e[0], e[1], w)) {
                if (witness)
                    *witness = "empty 3-clique {" + L.labels[e[0]] + ", " + L.labels[e[1]] + ", " +
                               L.labels[w] + "}";
                return false;
            }
            for (int x : adj[e[0]])
                if (x > w && nset[e[1]].count(x) && nset[w].count(x)) {
                    if (witness)
                        *witness = "4-clique {" + L.labels[e[0]] + ", " + L.labels[e[1]] + ", " +
                                   L.labels[w] + ", " + L.labels[x] + "} needs a 3-simplex";
                    return false;
                }
        }
    }
    return true;
}

namespace {

// Union-find over parts.
struct Parts {
    std::vector<int> parent;
    explicit Parts(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<std::vector<int>> join_decompose(const SimplicialComplex& L) {
    const int n = static_cast<int>(L.num_vertices());
    if (n == 0) return {};
    std::vector<std::set<int>> nset(n);
    for (const auto& e : L.edges) {
        nset[e[0]].insert(e[1]);
        nset[e[1]].insert(e[0]);
    }
    // Atoms: connected components of the complement of the 1-skeleton. Any
    // join factor is a union of atoms, since non-adjacent vertices must share
    // a factor.
    Parts parts(L.num_vertices());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!nset[u].count(v)) parts.unite(u, v);

    // Merge until the partition actually realizes L as the join of its parts:
    // cross-part cliques of simplices must span simplices of L, and no
    // combination may require a 3-simplex.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<int, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) groups[parts.find(v)].push_back(v);
        std::vector<std::vector<int>> gs;
        for (auto& [root, verts] : groups) gs.push_back(verts);
        if (gs.size() < 2) break;

        std::vector<int> part_of(n);
        for (std::size_t g = 0; g < gs.size(); ++g)
            for (int v : gs[g]) part_of[v] = static_cast<int>(g);

        std::vector<std::vector<std::array<int, 2>>> inner_edges(gs.size());
        std::vector<bool> has_triangle(gs.size(), false);
        for (const auto& e : L.edges)
            if (part_of[e[0]] == part_of[e[1]]) inner_edges[part_of[e[0]]].push_back(e);
        for (const auto& t : L.triangles)
            if (part_of[t[0]] == part_of[t[1]] && part_of[t[1]] == part_of[t[2]])
                has_triangle[part_of[t[0]]] = true;

        auto merge = [&](int g1, int g2) {
            parts.unite(gs[g1][0], gs[g2][0]);
            changed = true;
        };

        for (std::size_t g1 = 0; g1 < gs.size() && !changed; ++g1) {
            for (std::size_t g2 = g1 + 1; g2 < gs.size() && !changed; ++g2) {
                // inner edge x inner edge, or inner triangle x vertex, would be
                // a 3-simplex of the join: not representable, so not a join.
                if ((!inner_edges[g1].empty() && !inner_edges[g2].empty()) ||
                    (has_triangle[g1] && !gs[g2].empty()) || (has_triangle[g2] && !gs[g1].empty())) {
                    merge(static_cast<int>(g1), static_cast<int>(g2));
                    break;
                }
                for (const auto& e : inner_edges[g1]) {
                    for (int w : gs[g2])
                        if (!L.has_triangle(e[0], e[1], w)) {
                            merge(static_cast<int>(g1), static_cast<int>(g2));
                            break;
                        }
                    if (changed) break;
                }
                for (const auto& e : inner_edges[g2]) {
                    if (changed) break;
                    for (int w : gs[g1])
                        if (!L.has_triangle(e[0], e[1], w)) {
                            merge(static_cast<int>(g1), static_cast<int>(g2));
                            break;
                        }
                }
            }
        }
        if (changed) continue;

        // Triples of parts: cross triangles must be present.
        for (std::size_t g1 = 0; g1 < gs.size() && !changed; ++g1)
            for (std::size_t g2 = g1 + 1; g2 < gs.size() && !changed; ++g2)
                for (std::size_t g3 = g2 + 1; g3 < gs.size() && !changed; ++g3)
                    for (int u : gs[g1]) {
                        for (int v : gs[g2])
                            for (int w : gs[g3])
                                if (!L.has_triangle(u, v, w)) {
                                    merge(static_cast<int>(g1), static_cast<int>(g2));
                                    parts.unite(u, w);
                                    break;
                                }
                        if (changed) break;
                    }
    }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[parts.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, verts] : groups) {
        std::sort(verts.begin(), verts.end());
        out.push_back(verts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ConnectivityVerdict::level_value() const {
    switch (level) {
        case ConnLevel::Empty: return -2;
        case ConnLevel::Nonempty: return -1;
        case ConnLevel::Connected: return 0;
        default: return 1;
    }
}

namespace {

bool is_connected_graph(const SimplicialComplex& L) {
    if (L.empty()) return false;
    auto adj = L.adjacency();
    std::vector<char> seen(L.num_vertices(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == L.num_vertices();
}

bool is_full_simplex(const SimplicialComplex& L) {
    switch (L.num_vertices()) {
        case 1: return true;
        case 2: return L.has_edge(0, 1);
        case 3: return L.has_triangle(0, 1, 2);
        default: return false;  // would need dimension > 2
    }
}

constexpr int kHighlyConnected = 99;

// Connectivity of a join factor, capped at kHighlyConnected (contractible).
int factor_connectivity(const SimplicialComplex& F, int depth = 0) {
    if (F.empty()) return -2;
    if (is_full_simplex(F)) return kHighlyConnected;
    if (!is_connected_graph(F)) return -1;
    if (depth < 4) {
        auto factors = join_decompose(F);
        if (factors.size() >= 2) {
            long total = 2 * (static_cast<long>(factors.size()) - 1);
            for (const auto& verts : factors)
                total += factor_connectivity(F.induced(verts), depth + 1);
            return static_cast<int>(std::min<long>(total, kHighlyConnected));
        }
    }
    return 0;  // connected; nothing more certified without a join
}

}  // namespace

ConnectivityVerdict connectivity(const SimplicialComplex& L, int target_level) {
    ConnectivityVerdict v;
    if (L.empty()) {
        v.level = ConnLevel::Empty;
        v.method = ConnMethod::Bfs;
        v.evidence = "no vertices";
        return v;
    }
    v.level = ConnLevel::Nonempty;
    v.evidence = std::to_string(L.num_vertices()) + " vertices";
    if (target_level <= -1) return v;

    if (!is_connected_graph(L)) {
        v.method = ConnMethod::Bfs;
        v.evidence = "1-skeleton disconnected";
        return v;
    }
    v.level = ConnLevel::Connected;
    v.method = ConnMethod::Bfs;
    if (target_level <= 0) return v;

    auto factors = join_decompose(L);
    if (factors.size() >= 2 || is_full_simplex(L)) {
        long total;
        if (factors.size() >= 2) {
            total = 2 * (static_cast<long>(factors.size()) - 1);
            for (const auto& verts : factors) total += factor_connectivity(L.induced(verts));
        } else {
            total = kHighlyConnected;
        }
        if (total >= 1) {
            v.level = ConnLevel::SimplyConnected;
            v.method = ConnMethod::JoinCriterion;
            std::ostringstream ev;
            ev << "join of " << factors.size() << " factors, connectivity >= " << std::min<long>(total, 2);
            v.evidence = factors.size() >= 2 ? ev.str() : "full simplex";
            return v;
        }
    }

    bool torsion = false;
    int rank = h1_rank(L, &torsion);
    v.method = ConnMethod::H1PlusJoin;
    if (rank == 0 && !torsion) {
        v.acyclic_only = true;
        v.evidence = "H1 = 0 but no join certificate; acyclic-only";
    } else {
        v.evidence = "H1 rank " + std::to_string(rank) + (torsion ? " with torsion" : "");
    }
    return v;
}

namespace {

// Invariant factors of an integer matrix (Smith normal form diagonal).
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> mat) {
    std::vector<Int> factors;
    std::size_t rows = mat.size();
    std::size_t cols = rows ? mat[0].size() : 0;
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // pick pivot with minimal nonzero absolute value
        std::size_t pr = rows, pc = cols;
        Int best = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = c; j < cols; ++j) {
                if (mat[i][j] == 0) continue;
                Int a = abs(mat[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        std::swap(mat[r], mat[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][c], mat[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (mat[i][c] == 0) continue;
                Int q = mat[i][c] / mat[r][c];
                for (std::size_t j = c; j < cols; ++j) mat[i][j] -= q * mat[r][j];
                if (mat[i][c] != 0) {
                    std::swap(mat[r], mat[i]);
                    clean = false;
                }
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (mat[r][j] == 0) continue;
                Int q = mat[r][j] / mat[r][c];
                for (std::size_t i = r; i < rows; ++i) mat[i][j] -= q * mat[i][c];
                if (mat[r][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][c], mat[i][j]);
                    clean = false;
                }
            }
        }
        factors.push_back(abs(mat[r][c]));
        ++r;
        ++c;
    }
    return factors;
}

}  // namespace

int h1_rank(const SimplicialComplex& L, bool* has_torsion) {
    const std::size_t V = L.num_vertices();
    std::vector<std::array<int, 2>> edge_list(L.edges.begin(), L.edges.end());
    const std::size_t E = edge_list.size();
    const std::size_t T = L.triangles.size();

    // rank d1 = V - #components (spanning forests).
    Parts uf(V);
    std::size_t components = V;
    for (const auto& e : edge_list)
        if (uf.unite(e[0], e[1])) --components;
    std::size_t rank_d1 = V - components;

    std::map<std::array<int, 2>, std::size_t> edge_index;
    for (std::size_t i = 0; i < E; ++i) edge_index[edge_list[i]] = i;
    std::vector<std::vector<Int>> d2(E, std::vector<Int>(T, 0));
    std::size_t col = 0;
    for (const auto& t : L.triangles) {
        d2[edge_index[{t[1], t[2]}]][col] += 1;
        d2[edge_index[{t[0], t[2]}]][col] -= 1;
        d2[edge_index[{t[0], t[1]}]][col] += 1;
        ++col;
    }
    auto invariants = smith_invariants(std::move(d2));
    if (has_torsion) {
        *has_torsion = false;
        for (const Int& f : invariants)
            if (f != 1) *has_torsion = true;
    }
    std::size_t rank_d2 = invariants.size();
    return static_cast<int>(E - rank_d1 - rank_d2);
}

SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y) {
    bool x_edges = !X.edges.empty(), y_edges = !Y.edges.empty();
    if ((x_edges && y_edges) || (!X.triangles.empty() && !Y.empty()) ||
        (!Y.triangles.empty() && !X.empty()))
        throw std::invalid_argument("join would exceed dimension 2");
    SimplicialComplex out;
    for (const auto& l : X.labels) out.add_vertex(l);
    int off = static_cast<int>(X.num_vertices());
    for (const auto& l : Y.labels) out.add_vertex(l);
    for (const auto& e : X.edges) out.add_edge(e[0], e[1]);
    for (const auto& t : X.triangles) out.add_triangle(t[0], t[1], t[2]);
    for (const auto& e : Y.edges) out.add_edge(e[0] + off, e[1] + off);
    for (const auto& t : Y.triangles) out.add_triangle(t[0] + off, t[1] + off, t[2] + off);
    for (int u = 0; u < static_cast<int>(X.num_vertices()); ++u)
        for (int v = 0; v < static_cast<int>(Y.num_vertices()); ++v) out.add_edge(u, v + off);
    for (const auto& e : X.edges)
        for (int v = 0; v < static_cast<int>(Y.num_vertices()); ++v)
            out.add_triangle(e[0], e[1], v + off);
    for (const auto& e : Y.edges)
        for (int u = 0; u < static_cast<int>(X.num_vertices()); ++u)
            out.add_triangle(u, e[0] + off, e[1] + off);
    return out;
}

bool isomorphic_by_labels(const SimplicialComplex& X, const SimplicialComplex& Y) {
    if (X.num_vertices() != Y.num_vertices()) return false;
    std::map<std::string, int> ymap;
    for (int v = 0; v < static_cast<int>(Y.num_vertices()); ++v) {
        if (!ymap.emplace(Y.labels[v], v).second) return false;  // labels must be unique
    }
    std::vector<int> to_y(X.num_vertices());
    for (int v = 0; v < static_cast<int>(X.num_vertices()); ++v) {
        auto it = ymap.find(X.labels[v]);
        if (it == ymap.end()) return false;
        to_y[v] = it->second;
    }
    if (X.edges.size() != Y.edges.size() || X.triangles.size() != Y.triangles.size()) return false;
    for (const auto& e : X.edges)
        if (!Y.has_edge(to_y[e[0]], to_y[e[1]])) return false;
    for (const auto& t : X.triangles)
        if (!Y.has_triangle(to_y[t[0]], to_y[t[1]], to_y[t[2]])) return false;
    return true;
}

}  // namespace cubemorse::simplicial
