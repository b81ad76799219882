#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubemorse/common.hpp"

namespace cubemorse::bigraph {

enum class Side { A, B };
enum class Sign { Minus, Plus };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

// One block of the Morse-suited partition, e.g. A2- or B1+.
struct BlockId {
    Side side = Side::A;
    int index = 1;  // 1..n
    Sign sign = Sign::Plus;

    auto operator<=>(const BlockId&) const = default;
};

std::string to_string(const BlockId& b);              // "A1+", "B2-"
std::optional<BlockId> parse_block(const std::string& s);

// Blocks ordered A1- < A1+ < A2- < ... within a side.
struct BlockLess {
    bool operator()(const BlockId& x, const BlockId& y) const {
        if (x.side != y.side) return x.side < y.side;
        if (x.index != y.index) return x.index < y.index;
        return x.sign < y.sign;
    }
};

std::vector<BlockId> side_blocks(int rank, Side side);  // in block order

// Bipartite graph on A ⊔ B with block partitions. Vertices are indexed; each
// vertex carries a name and (nominally) belongs to one block via `blocks`.
// The structure is not validated on construction; verify_morse_suited checks
// the partition axioms so that broken inputs yield verdicts, not exceptions.
struct MorseGraph {
    int rank = 1;
    std::vector<std::string> vertex_names;
    std::map<BlockId, std::vector<int>, BlockLess> blocks;
    std::vector<std::pair<int, int>> edges;  // (A-side vertex, B-side vertex)

    int add_vertex(const BlockId& block, const std::string& name);
    void add_edge(int a, int b);
    void finalize();  // builds adjacency; call after all edges added

    std::size_t num_vertices() const { return vertex_names.size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    // Block of a vertex; meaningful once the partition axioms hold.
    BlockId block_of(int v) const { return vertex_block_[v]; }
    Side side_of(int v) const { return vertex_block_[v].side; }
    int vertex_by_name(const std::string& name) const;

    std::vector<int> side_vertices(Side s) const;

  private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::set<int>> adj_set_;
    std::vector<BlockId> vertex_block_;
    std::map<std::string, int> by_name_;
};

// Template edge of the complete bipartite graph K on the 2n A-blocks and
// 2n B-blocks.
struct TemplateEdge {
    BlockId a, b;
    auto operator<=>(const TemplateEdge&) const = default;
};

std::vector<TemplateEdge> template_edges(int rank);  // lex order, A-major

// Residue-set presentation of a modular Morse-suited graph: blocks are copies
// of Z/p and a_i^s(k) ~ b_j^t(l) iff l-k mod p lies in sigma of that block pair.
struct ModularSpec {
    int rank = 1;
    Int modulus;                             // prime p
    std::vector<std::vector<Int>> sigma;     // residues, indexed like template_edges(rank)

    const std::vector<Int>& sigma_of(const BlockId& a, const BlockId& b) const;
    bool adjacent(const BlockId& a, const Int& k, const BlockId& b, const Int& l) const;
};

// Runs the doubling recurrence sigma(e1)={0,1}, sigma(e_i)={2m_i,4m_i} over
// the fixed lex edge order and picks p as the smallest prime above 8*m_last
// (unless overridden).
ModularSpec build_modular_spec(int n, std::optional<Int> p_override = std::nullopt);

// Explicit graph with |A_i^s| = |B_j^t| = p. Throws if the vertex count
// exceeds the graph budget.
MorseGraph realize(const ModularSpec& spec);

Verdict verify_morse_suited(const MorseGraph& g, std::string* witness = nullptr);

enum class Backend { Explicit, Arithmetic, Both };

struct SizeabilityReport {
    Backend backend = Backend::Explicit;
    CheckResult morse_suited;
    CheckResult four_cycle_free;
    std::vector<CheckResult> span_connectivity;  // one per block pair
    Verdict overall() const;
    std::string first_witness() const;
};

SizeabilityReport verify_sizeable_explicit(const MorseGraph& g);
SizeabilityReport verify_sizeable_arithmetic(const ModularSpec& spec);

// Dispatch on backend; Both requires a realizable spec and demands agreement
// of the two conclusive verdict sets.
SizeabilityReport verify_sizeable(const ModularSpec& spec, Backend backend);

}  // namespace cubemorse::bigraph
