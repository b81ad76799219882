#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubemorse/bigraph.hpp"
#include "cubemorse/common.hpp"
#include "cubemorse/simplicial.hpp"

namespace cubemorse::cubeworld {

// Finite multigraph used as a product factor: either the theta graph on two
// vertices with 2n labelled oriented edges, or the complete bipartite join
// A*B of a Morse graph's sides.
struct FactorGraph {
    struct Edge {
        std::string name;
        int tail = 0, head = 0;  // orientation: tail -> head
    };
    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> edges_at;  // vertex -> incident edge ids

    int other_end(int edge, int v) const {
        return edges[edge].tail == v ? edges[edge].head : edges[edge].tail;
    }
};

// Theta graph: vertices {0,1}, edges x1..xn from 0 to 1 and y1..yn from 1 to 0.
FactorGraph theta_graph(int n);

// Complete bipartite graph A*B over a Morse graph's vertex set; edge i*|B|+j
// joins A-vertex i to B-vertex j (tail in A).
FactorGraph complete_join(const bigraph::MorseGraph& g);

using Vertex3 = std::array<int, 3>;

struct CellCounts {
    Int V = 0, E = 0, F = 0, C = 0;
    Int chi() const { return V - E + F - C; }
};

// Subcomplex of a product of three factor graphs induced by a vertex rule.
// Cells are triples of factor cells; a cell is present iff all of its corner
// vertices satisfy the rule (induced subcomplex).
class ProductCubeComplex {
  public:
    enum class Rule { FullProduct, XGamma };

    static ProductCubeComplex full_product(std::array<FactorGraph, 3> factors);
    // Three copies of A*B with the five-bullet vertex rule over gamma.
    static ProductCubeComplex x_gamma(bigraph::MorseGraph gamma);

    Rule rule() const { return rule_; }
    const FactorGraph& factor(int i) const { return factors_[i]; }
    const bigraph::MorseGraph& gamma() const { return gamma_; }

    bool has_vertex(const Vertex3& v) const;
    // Enumerates the vertex set; empty optional if over budget.
    std::optional<std::vector<Vertex3>> vertices(std::size_t budget) const;

    // For x_gamma complexes the factor vertices are the gamma vertices.
    bigraph::Side side_of_factor_vertex(int fv) const;

  private:
    Rule rule_ = Rule::FullProduct;
    std::array<FactorGraph, 3> factors_;
    bigraph::MorseGraph gamma_;  // only meaningful for XGamma
};

ProductCubeComplex build_theta_cube(int n);  // requires n >= 2
ProductCubeComplex build_x_gamma(const bigraph::MorseGraph& gamma);

// Vertex link with per-link-vertex provenance: which coordinate changed,
// along which factor edge, to which factor vertex.
struct LinkVertex {
    int factor = 0;   // 0..2
    int fedge = 0;    // factor edge id
    int target = 0;   // factor vertex at the far end
};

struct VertexLink {
    Vertex3 center;
    simplicial::SimplicialComplex complex;
    std::vector<LinkVertex> vertex_info;  // parallel to complex vertices
};

VertexLink vertex_link(const ProductCubeComplex& X, const Vertex3& v);

// Every vertex link is flag; first counterexample reported otherwise.
CheckResult check_flag_links(const ProductCubeComplex& X,
                             std::size_t budget = enumeration_budget());

enum class CountMode { Enumerate, ClosedForm };

struct CellCountResult {
    CellCounts counts;
    Verdict verdict = Verdict::Pass;  // Inconclusive on budget exhaustion
    std::string note;
};

// Enumerate walks all candidate cells (budgeted); ClosedForm evaluates the
// derived formulas from the factor statistics (XGamma: |A|, |B|, |E(Gamma)|;
// FullProduct: per-factor counts).
CellCountResult cell_counts(const ProductCubeComplex& X, CountMode mode,
                            std::size_t budget = enumeration_budget());

// chi(X_Gamma) for the modular family, as the closed polynomial in (n, p).
Int euler_formula_xgamma(int n, const Int& p);
// chi of the p^3-fold ramified theta-cube cover, two algebraic routes.
Int euler_formula_Y(int n, const Int& p);
Int euler_formula_Y_decomposed(int n, const Int& p);

}  // namespace cubemorse::cubeworld
