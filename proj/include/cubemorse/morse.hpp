#pragma once

#include <string>
#include <vector>

#include "cubemorse/bigraph.hpp"
#include "cubemorse/common.hpp"
#include "cubemorse/cubeworld.hpp"
#include "cubemorse/simplicial.hpp"

namespace cubemorse::morse {

enum class Family { XGamma, Theta };

// A character up to positive scaling. The free coordinates are lambda_1..n
// for the XGamma family and lambda_2..n for the Theta family (whose first
// edge pair carries the sum of the others).
class Character {
  public:
    static Character make(Family family, int n, std::vector<Rational> lambda);

    Family family() const { return family_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(lambda_.size()); }
    const std::vector<Rational>& coords() const { return lambda_; }

    // lambda_i by 1-based index: i in 1..n (XGamma) or 2..n (Theta).
    const Rational& at(int i) const;

  private:
    Family family_ = Family::XGamma;
    int n_ = 1;
    std::vector<Rational> lambda_;  // canonical: first nonzero entry is +-1
};

// Edge class: a block pair for XGamma (canonical orientation A -> B), or a
// labelled theta edge (x_i: 0 -> 1, y_i: 1 -> 0).
struct EdgeClass {
    Family family = Family::XGamma;
    bigraph::BlockId a, b;  // XGamma
    bool theta_x = true;    // Theta
    int theta_index = 1;

    std::string name() const;
};

std::vector<EdgeClass> edge_classes(Family family, int n);

// Signed weight along the class's canonical orientation.
Rational edge_weight(const EdgeClass& cls, const Character& chi);

// Minimum |weight| over edge classes of nonzero weight. Throws if every
// class is dead (impossible for a nonzero character; asserted).
Rational compute_cmin(Family family, const Character& chi);

// Functionals whose sign pattern determines every split: XGamma uses
// {lambda_i} u {lambda_i + lambda_j : i < j}; Theta uses {lambda_2..n, sum}.
// Coefficient vectors are over the character's free coordinates.
struct Functional {
    std::string name;
    std::vector<Rational> coeffs;
};
std::vector<Functional> functional_list(Family family, int n);

std::vector<int> sign_vector(const Character& chi);  // -1/0/+1 per functional

struct SignChamber {
    std::vector<int> signs;
    Character representative;
};

// All realizable nonzero sign vectors with exact interior representatives
// (Gaussian elimination on the zero set, Fourier-Motzkin on the strict part).
// Throws for n > 4.
std::vector<SignChamber> enumerate_chambers(Family family, int n);

// A link whose vertices carry edge classes and a local orientation:
// away_is_forward is true when moving away from the link's center traverses
// the class in its canonical direction.
struct LinkLabel {
    EdgeClass cls;
    bool away_is_forward = true;
};

struct LabeledLink {
    std::string center_desc;
    simplicial::SimplicialComplex complex;
    std::vector<LinkLabel> labels;  // parallel to complex vertices
};

// Signed weight of a link vertex in the direction away from the center.
Rational away_weight(const LinkLabel& label, const Character& chi);

// L-dagger and the two living links as full subcomplexes, with vertex maps
// back into the ambient link.
struct SplitLinks {
    simplicial::SimplicialComplex dead, ascending, descending;
    std::vector<int> dead_to_link, asc_to_link, desc_to_link;
};
SplitLinks living_dead_split(const LabeledLink& link, const Character& chi);

// Labeled links of the two families. XGamma centers must be vertices of the
// complex; Theta centers are corners of the 3-torus of theta factors.
LabeledLink labeled_link_xgamma(const cubeworld::ProductCubeComplex& X,
                                const cubeworld::Vertex3& v);
LabeledLink labeled_link_theta(int n, const cubeworld::Vertex3& v);

enum class Engine { Explicit, Symbolic, Both };

struct HypoCheck {
    std::string vertex_type;  // e.g. "(A1+, B1-, A2+)" or "corner (0,1,0)"
    std::string sigma;        // "{}", "{d}", dead-edge description
    std::string direction;    // "up" or "down"
    CheckResult result;
};

struct VerificationReport {
    std::string engine;
    std::vector<HypoCheck> checks;
    Verdict overall() const;
    std::string first_witness() const;
};

struct HypothesisOptions {
    Engine engine = Engine::Symbolic;
    bool exhaustive = false;  // explicit engine: every vertex, not one per type
    std::size_t budget = enumeration_budget();
};

// Hypothesis checks at level m = 1: over every vertex type and every dead
// simplex sigma (empty / vertex / edge), both living links reach connectivity
// level m - dim(sigma) - 1. The symbolic engine reasons over block labels and
// requires a passing sizeability certificate; the explicit engine builds the
// links and defers to the simplicial module.
VerificationReport check_theorem_hypotheses_xgamma(const bigraph::MorseGraph& gamma,
                                                   const bigraph::SizeabilityReport* certificate,
                                                   const Character& chi, int m,
                                                   const HypothesisOptions& opts);

// Theta-family corner vertices (the ramified vertices are covered elsewhere).
VerificationReport check_theorem_hypotheses_theta(int n, const Character& chi, int m,
                                                  const HypothesisOptions& opts);

// Every simplex of the link spanned by dead vertices lies in the dead
// subcomplex (fullness of L-dagger).
CheckResult check_dead_links_full(const LabeledLink& link, const Character& chi);
CheckResult check_dead_links_full_xgamma(const bigraph::MorseGraph& gamma, const Character& chi,
                                         std::size_t budget = enumeration_budget());
CheckResult check_dead_links_full_theta(int n, const Character& chi);

}  // namespace cubemorse::morse
