#include "cubemorse/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubemorse::morse {

using bigraph::BlockId;
using bigraph::MorseGraph;
using bigraph::Side;
using bigraph::Sign;
using cubeworld::ProductCubeComplex;
using cubeworld::Vertex3;
using simplicial::SimplicialComplex;

// ---------------------------------------------------------------- Character

Character Character::make(Family family, int n, std::vector<Rational> lambda) {
    int want = family == Family::XGamma ? n : n - 1;
    if (family == Family::Theta && n < 2) throw std::invalid_argument("theta family needs n >= 2");
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (static_cast<int>(lambda.size()) != want)
        throw std::invalid_argument("character has wrong length");
    auto first = std::find_if(lambda.begin(), lambda.end(),
                              [](const Rational& q) { return q != 0; });
    if (first == lambda.end()) throw std::invalid_argument("character must be nonzero");
    Rational scale = abs(*first);
    for (Rational& q : lambda) q /= scale;
    Character c;
    c.family_ = family;
    c.n_ = n;
    c.lambda_ = std::move(lambda);
    return c;
}

const Rational& Character::at(int i) const {
    int base = family_ == Family::XGamma ? 1 : 2;
    if (i < base || i > n_) throw std::out_of_range("character index");
    return lambda_[i - base];
}

// --------------------------------------------------------------- EdgeClass

std::string EdgeClass::name() const {
    if (family == Family::XGamma) return bigraph::to_string(a) + "|" + bigraph::to_string(b);
    return (theta_x ? "x" : "y") + std::to_string(theta_index);
}

std::vector<EdgeClass> edge_classes(Family family, int n) {
    std::vector<EdgeClass> out;
    if (family == Family::XGamma) {
        for (const BlockId& a : bigraph::side_blocks(n, Side::A))
            for (const BlockId& b : bigraph::side_blocks(n, Side::B)) {
                EdgeClass c;
                c.family = family;
                c.a = a;
                c.b = b;
                out.push_back(c);
            }
    } else {
        for (bool x : {true, false})
            for (int i = 1; i <= n; ++i) {
                EdgeClass c;
                c.family = family;
                c.theta_x = x;
                c.theta_index = i;
                out.push_back(c);
            }
    }
    return out;
}

Rational edge_weight(const EdgeClass& cls, const Character& chi) {
    if (cls.family != chi.family()) throw std::invalid_argument("family mismatch");
    if (cls.family == Family::XGamma) {
        int st = bigraph::sign_value(cls.a.sign) * bigraph::sign_value(cls.b.sign);
        Rational w = chi.at(cls.a.index);
        if (cls.b.index != cls.a.index) w += chi.at(cls.b.index);
        return st * w;
    }
    if (cls.theta_index == 1) {
        Rational s = 0;
        for (int i = 2; i <= chi.n(); ++i) s += chi.at(i);
        return s;
    }
    return chi.at(cls.theta_index);
}

Rational compute_cmin(Family family, const Character& chi) {
    bool found = false;
    Rational best = 0;
    for (const EdgeClass& c : edge_classes(family, chi.n())) {
        Rational w = abs(edge_weight(c, chi));
        if (w == 0) continue;
        if (!found || w < best) best = w;
        found = true;
    }
    if (!found) throw std::domain_error("all edge classes are dead");
    return best;
}

// -------------------------------------------------------------- Functionals

std::vector<Functional> functional_list(Family family, int n) {
    std::vector<Functional> out;
    if (family == Family::XGamma) {
        for (int i = 1; i <= n; ++i) {
            Functional f;
            f.name = "lambda" + std::to_string(i);
            f.coeffs.assign(n, 0);
            f.coeffs[i - 1] = 1;
            out.push_back(std::move(f));
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Functional f;
                f.name = "lambda" + std::to_string(i) + "+lambda" + std::to_string(j);
                f.coeffs.assign(n, 0);
                f.coeffs[i - 1] = 1;
                f.coeffs[j - 1] = 1;
                out.push_back(std::move(f));
            }
    } else {
        int d = n - 1;
        for (int i = 2; i <= n; ++i) {
            Functional f;
            f.name = "lambda" + std::to_string(i);
            f.coeffs.assign(d, 0);
            f.coeffs[i - 2] = 1;
            out.push_back(std::move(f));
        }
        Functional f;
        f.name = "sum";
        f.coeffs.assign(d, 1);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> sign_vector(const Character& chi) {
    std::vector<int> out;
    for (const Functional& f : functional_list(chi.family(), chi.n())) {
        Rational v = 0;
        for (int i = 0; i < chi.dim(); ++i) v += f.coeffs[i] * chi.coords()[i];
        out.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
    }
    return out;
}

// -------------------------------------------------- exact chamber feasibility

namespace {

// Nullspace basis of the rows (each of length dim), as column vectors.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int dim) {
    int nr = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < dim && r < nr; ++c) {
        int pr = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        Rational inv = rows[r][c];
        for (int j = c; j < dim; ++j) rows[r][j] /= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < dim; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(dim, 0);
        v[fc] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -rows[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Feasibility of the strict homogeneous system c.z > 0, with an exact
// interior point on success (Fourier-Motzkin elimination, back-substituted).
bool feasible_strict(const std::vector<std::vector<Rational>>& rows0, int dim,
                     std::vector<Rational>* point) {
    std::vector<std::vector<std::vector<Rational>>> stage(dim + 1);
    stage[0] = rows0;
    auto all_zero = [&](const std::vector<Rational>& r) {
        return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
    };
    for (const auto& r : stage[0])
        if (all_zero(r)) return false;
    for (int k = 0; k < dim; ++k) {
        std::vector<std::vector<Rational>> pos, neg, next;
        for (const auto& row : stage[k]) {
            if (row[k] > 0)
                pos.push_back(row);
            else if (row[k] < 0)
                neg.push_back(row);
            else
                next.push_back(row);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                std::vector<Rational> row(dim, 0);
                for (int j = k + 1; j < dim; ++j) row[j] = -q[k] * p[j] + p[k] * q[j];
                if (all_zero(row)) return false;
                next.push_back(std::move(row));
            }
        stage[k + 1] = std::move(next);
    }
    if (!point) return true;
    std::vector<Rational> z(dim, 0);
    for (int k = dim - 1; k >= 0; --k) {
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const auto& row : stage[k]) {
            if (row[k] == 0) continue;
            Rational rest = 0;
            for (int j = k + 1; j < dim; ++j) rest += row[j] * z[j];
            Rational bound = -rest / row[k];
            if (row[k] > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo && has_hi)
            z[k] = (lo + hi) / 2;
        else if (has_lo)
            z[k] = lo + 1;
        else if (has_hi)
            z[k] = hi - 1;
        else
            z[k] = 1;
    }
    *point = std::move(z);
    return true;
}

}  // namespace

std::vector<SignChamber> enumerate_chambers(Family family, int n) {
    if (n > 4) throw std::invalid_argument("chamber enumeration limited to n <= 4");
    auto fns = functional_list(family, n);
    int d = family == Family::XGamma ? n : n - 1;
    int F = static_cast<int>(fns.size());
    std::vector<SignChamber> out;
    std::vector<int> s(F, -1);
    while (true) {
        bool nonzero = std::any_of(s.begin(), s.end(), [](int v) { return v != 0; });
        if (nonzero) {
            std::vector<std::vector<Rational>> eq;
            for (int j = 0; j < F; ++j)
                if (s[j] == 0) eq.push_back(fns[j].coeffs);
            auto basis = nullspace(std::move(eq), d);
            if (!basis.empty()) {
                int bd = static_cast<int>(basis.size());
                std::vector<std::vector<Rational>> strict;
                for (int j = 0; j < F; ++j) {
                    if (s[j] == 0) continue;
                    std::vector<Rational> row(bd, 0);
                    for (int b = 0; b < bd; ++b)
                        for (int i = 0; i < d; ++i) row[b] += fns[j].coeffs[i] * basis[b][i];
                    for (Rational& q : row) q *= s[j];
                    strict.push_back(std::move(row));
                }
                std::vector<Rational> z;
                if (feasible_strict(strict, bd, &z)) {
                    std::vector<Rational> x(d, 0);
                    for (int b = 0; b < bd; ++b)
                        for (int i = 0; i < d; ++i) x[i] += z[b] * basis[b][i];
                    Character rep = Character::make(family, n, std::move(x));
                    if (sign_vector(rep) != s)
                        throw std::logic_error("chamber representative sign mismatch");
                    out.push_back({s, std::move(rep)});
                }
            }
        }
        int k = F - 1;
        while (k >= 0 && s[k] == 1) s[k--] = -1;
        if (k < 0) break;
        ++s[k];
    }
    return out;
}

// ------------------------------------------------------------ labeled links

Rational away_weight(const LinkLabel& label, const Character& chi) {
    Rational w = edge_weight(label.cls, chi);
    return label.away_is_forward ? w : -w;
}

SplitLinks living_dead_split(const LabeledLink& link, const Character& chi) {
    std::vector<int> dead, asc, desc;
    for (int i = 0; i < static_cast<int>(link.labels.size()); ++i) {
        Rational w = away_weight(link.labels[i], chi);
        if (w == 0)
            dead.push_back(i);
        else if (w > 0)
            asc.push_back(i);
        else
            desc.push_back(i);
    }
    SplitLinks out;
    out.dead = link.complex.induced(dead, &out.dead_to_link);
    out.ascending = link.complex.induced(asc, &out.asc_to_link);
    out.descending = link.complex.induced(desc, &out.desc_to_link);
    return out;
}

LabeledLink labeled_link_xgamma(const ProductCubeComplex& X, const Vertex3& v) {
    if (X.rule() != ProductCubeComplex::Rule::XGamma)
        throw std::invalid_argument("expected an induced complex over a Morse graph");
    cubeworld::VertexLink raw = cubeworld::vertex_link(X, v);
    const MorseGraph& g = X.gamma();
    LabeledLink out;
    out.complex = std::move(raw.complex);
    out.center_desc = "(" + g.vertex_names[v[0]] + ", " + g.vertex_names[v[1]] + ", " +
                      g.vertex_names[v[2]] + ")";
    for (const cubeworld::LinkVertex& lv : raw.vertex_info) {
        const auto& fe = X.factor(lv.factor).edges[lv.fedge];
        LinkLabel lab;
        lab.cls.family = Family::XGamma;
        lab.cls.a = g.block_of(fe.tail);
        lab.cls.b = g.block_of(fe.head);
        lab.away_is_forward = (v[lv.factor] == fe.tail);
        out.labels.push_back(lab);
    }
    return out;
}

LabeledLink labeled_link_theta(int n, const Vertex3& v) {
    if (n < 2) throw std::invalid_argument("theta family needs n >= 2");
    for (int c : v)
        if (c != 0 && c != 1) throw std::invalid_argument("theta corner coordinates must be 0/1");
    LabeledLink out;
    out.center_desc = "corner (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                      std::to_string(v[2]) + ")";
    std::vector<std::vector<int>> factor_verts(3);
    for (int j = 0; j < 3; ++j) {
        for (bool x : {true, false})
            for (int i = 1; i <= n; ++i) {
                LinkLabel lab;
                lab.cls.family = Family::Theta;
                lab.cls.theta_x = x;
                lab.cls.theta_index = i;
                // x edges run 0 -> 1, y edges 1 -> 0.
                lab.away_is_forward = x ? (v[j] == 0) : (v[j] == 1);
                int id = out.complex.add_vertex(lab.cls.name() + "@" + std::to_string(j + 1));
                out.labels.push_back(lab);
                factor_verts[j].push_back(id);
            }
    }
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2)
            for (int u : factor_verts[j1])
                for (int w : factor_verts[j2]) out.complex.add_edge(u, w);
    for (int u : factor_verts[0])
        for (int w : factor_verts[1])
            for (int t : factor_verts[2]) out.complex.add_triangle(u, w, t);
    return out;
}

// ------------------------------------------------------------------ reports

Verdict VerificationReport::overall() const {
    Verdict v = Verdict::Pass;
    for (const HypoCheck& c : checks) v = combine(v, c.result.verdict);
    return v;
}

std::string VerificationReport::first_witness() const {
    for (const HypoCheck& c : checks)
        if (c.result.verdict != Verdict::Pass)
            return c.vertex_type + " sigma=" + c.sigma + " " + c.direction + ": " +
                   c.result.witness;
    return "";
}

// ---------------------------------------------------------- explicit engine

namespace {

std::string sigma_desc(const LabeledLink& link, const std::vector<int>& sigma) {
    if (sigma.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) s += ", ";
        s += link.complex.labels[sigma[i]];
    }
    return s + "}";
}

void run_explicit_checks(const LabeledLink& link, const Character& chi, int m,
                         const std::string& vertex_type, std::vector<HypoCheck>& out) {
    SplitLinks split = living_dead_split(link, chi);

    std::vector<std::vector<int>> sigmas;
    sigmas.push_back({});
    for (int d = 0; d < static_cast<int>(split.dead.num_vertices()); ++d)
        sigmas.push_back({split.dead_to_link[d]});
    for (const auto& e : split.dead.edges)
        sigmas.push_back({std::min(split.dead_to_link[e[0]], split.dead_to_link[e[1]]),
                          std::max(split.dead_to_link[e[0]], split.dead_to_link[e[1]])});

    for (const std::vector<int>& sigma : sigmas) {
        int target = m - static_cast<int>(sigma.size());  // m - dim(sigma) - 1
        if (target < -1) continue;
        std::vector<int> lk_to_link;
        SimplicialComplex lk = simplicial::link_of_simplex(link.complex, sigma, &lk_to_link);
        for (bool up : {true, false}) {
            std::vector<int> living;
            for (int i = 0; i < static_cast<int>(lk.num_vertices()); ++i) {
                Rational w = away_weight(link.labels[lk_to_link[i]], chi);
                if ((up && w > 0) || (!up && w < 0)) living.push_back(i);
            }
            SimplicialComplex sub = lk.induced(living, nullptr);
            simplicial::ConnectivityVerdict conn = simplicial::connectivity(sub, target);
            HypoCheck hc;
            hc.vertex_type = vertex_type;
            hc.sigma = sigma_desc(link, sigma);
            hc.direction = up ? "up" : "down";
            hc.result.name = "living link connectivity";
            if (conn.reaches(target)) {
                hc.result.verdict = Verdict::Pass;
            } else if (conn.method == simplicial::ConnMethod::Inconclusive || conn.acyclic_only) {
                hc.result.verdict = Verdict::Inconclusive;
                hc.result.witness = "connectivity level " + std::to_string(target) +
                                    " not certified: " + conn.evidence;
            } else {
                hc.result.verdict = Verdict::Fail;
                hc.result.witness = "needs level " + std::to_string(target) + ", got " +
                                    std::to_string(conn.level_value()) + " (" + conn.evidence +
                                    ")";
            }
            out.push_back(std::move(hc));
        }
    }
}

struct TypeRep {
    std::string type;
    Vertex3 v;
};

std::string block_triple_name(const BlockId& b1, const BlockId& b2, const BlockId& b3) {
    return "(" + bigraph::to_string(b1) + ", " + bigraph::to_string(b2) + ", " +
           bigraph::to_string(b3) + ")";
}

// One representative vertex per block-triple type. Mixed types need an edge
// between the governing pair of blocks; unrealized types are skipped.
std::vector<TypeRep> xgamma_type_reps(const MorseGraph& g) {
    int n = g.rank;
    auto ablocks = bigraph::side_blocks(n, Side::A);
    auto bblocks = bigraph::side_blocks(n, Side::B);
    auto first_of = [&](const BlockId& b) { return g.blocks.at(b).front(); };
    auto edge_in = [&](const BlockId& a, const BlockId& b) -> std::optional<std::pair<int, int>> {
        for (int u : g.blocks.at(a))
            for (int w : g.neighbors(u))
                if (g.block_of(w) == b) return std::make_pair(u, w);
        return std::nullopt;
    };

    std::vector<TypeRep> reps;
    for (const BlockId& b1 : ablocks)
        for (const BlockId& b2 : ablocks)
            for (const BlockId& b3 : ablocks)
                reps.push_back({block_triple_name(b1, b2, b3),
                                {first_of(b1), first_of(b2), first_of(b3)}});
    for (const BlockId& b1 : bblocks)
        for (const BlockId& b2 : bblocks)
            for (const BlockId& b3 : bblocks)
                reps.push_back({block_triple_name(b1, b2, b3),
                                {first_of(b1), first_of(b2), first_of(b3)}});

    // Mixed patterns: the A/B assignment fixes which coordinate pair must be
    // an edge of the graph (cyclic rules of the vertex set).
    struct Pattern {
        std::array<Side, 3> sides;
        int apos, bpos;  // governed pair: coordinate in A, coordinate in B
    };
    const std::vector<Pattern> patterns = {
        {{Side::A, Side::B, Side::A}, 0, 1}, {{Side::A, Side::B, Side::B}, 0, 1},
        {{Side::A, Side::A, Side::B}, 1, 2}, {{Side::B, Side::A, Side::B}, 1, 2},
        {{Side::B, Side::A, Side::A}, 2, 0}, {{Side::B, Side::B, Side::A}, 2, 0}};
    for (const Pattern& pat : patterns) {
        int free_pos = 3 - pat.apos - pat.bpos;
        auto& free_blocks = pat.sides[free_pos] == Side::A ? ablocks : bblocks;
        for (const BlockId& ab : ablocks)
            for (const BlockId& bb : bblocks) {
                auto e = edge_in(ab, bb);
                if (!e) continue;
                for (const BlockId& fb : free_blocks) {
                    std::array<BlockId, 3> blocks;
                    Vertex3 v;
                    blocks[pat.apos] = ab;
                    v[pat.apos] = e->first;
                    blocks[pat.bpos] = bb;
                    v[pat.bpos] = e->second;
                    blocks[free_pos] = fb;
                    v[free_pos] = first_of(fb);
                    reps.push_back({block_triple_name(blocks[0], blocks[1], blocks[2]), v});
                }
            }
    }
    return reps;
}

// Candidate cell count of a link, to keep explicit link construction within
// the enumeration budget.
Int link_cell_estimate(const ProductCubeComplex& X, const Vertex3& v) {
    std::array<Int, 3> s;
    for (int j = 0; j < 3; ++j) {
        int count = 0;
        const auto& f = X.factor(j);
        for (int e : f.edges_at[v[j]]) {
            Vertex3 u = v;
            u[j] = f.other_end(e, v[j]);
            if (X.has_vertex(u)) ++count;
        }
        s[j] = count;
    }
    return s[0] + s[1] + s[2] + s[0] * s[1] + s[1] * s[2] + s[2] * s[0] + s[0] * s[1] * s[2];
}

void run_explicit_engine_xgamma(const MorseGraph& g, const Character& chi, int m,
                                const HypothesisOptions& opts, VerificationReport& rep) {
    ProductCubeComplex X = cubeworld::build_x_gamma(g);
    std::vector<TypeRep> work;
    if (opts.exhaustive) {
        auto verts = X.vertices(opts.budget);
        if (!verts) {
            rep.checks.push_back({"(all)", "-", "-",
                                  {"vertex enumeration", Verdict::Inconclusive,
                                   "vertex budget exceeded"}});
            return;
        }
        for (const Vertex3& v : *verts) {
            std::string t = block_triple_name(g.block_of(v[0]), g.block_of(v[1]),
                                              g.block_of(v[2])) +
                            " at (" + g.vertex_names[v[0]] + ", " + g.vertex_names[v[1]] + ", " +
                            g.vertex_names[v[2]] + ")";
            work.push_back({std::move(t), v});
        }
    } else {
        work = xgamma_type_reps(g);
    }
    for (const TypeRep& tr : work) {
        if (link_cell_estimate(X, tr.v) > Int(opts.budget)) {
            rep.checks.push_back({tr.type, "-", "-",
                                  {"link construction", Verdict::Inconclusive,
                                   "link budget exceeded"}});
            continue;
        }
        LabeledLink link = labeled_link_xgamma(X, tr.v);
        run_explicit_checks(link, chi, m, tr.type, rep.checks);
    }
}

// --------------------------------------------------------- symbolic engine

// Signed weight of stepping from a vertex of block `from` into the opposite
// block `to`.
Rational block_away_weight(const BlockId& from, const BlockId& to, const Character& chi) {
    EdgeClass c;
    c.family = Family::XGamma;
    if (from.side == Side::A) {
        c.a = from;
        c.b = to;
        return edge_weight(c, chi);
    }
    c.a = to;
    c.b = from;
    return -edge_weight(c, chi);
}

struct BlockSplit {
    std::vector<BlockId> asc, desc, dead;
};

BlockSplit block_split(const BlockId& from, const Character& chi) {
    BlockSplit out;
    for (const BlockId& to : bigraph::side_blocks(chi.n(), bigraph::opposite(from.side))) {
        Rational w = block_away_weight(from, to, chi);
        if (w > 0)
            out.asc.push_back(to);
        else if (w < 0)
            out.desc.push_back(to);
        else
            out.dead.push_back(to);
    }
    return out;
}

std::string block_set_name(const std::vector<BlockId>& blocks) {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ", ";
        s += bigraph::to_string(blocks[i]);
    }
    return s + "}";
}

void push_symbolic(std::vector<HypoCheck>& out, const std::string& type, const std::string& sigma,
                   bool up, const std::string& check_name, bool ok, const std::string& why_pass,
                   const std::string& why_fail) {
    HypoCheck hc;
    hc.vertex_type = type;
    hc.sigma = sigma;
    hc.direction = up ? "up" : "down";
    hc.result.name = check_name;
    hc.result.verdict = ok ? Verdict::Pass : Verdict::Fail;
    hc.result.witness = ok ? why_pass : why_fail;
    out.push_back(std::move(hc));
}

void run_symbolic_engine_xgamma(const MorseGraph& g, const Character& chi,
                                VerificationReport& rep) {
    int n = g.rank;
    auto ablocks = bigraph::side_blocks(n, Side::A);
    auto bblocks = bigraph::side_blocks(n, Side::B);
    std::map<BlockId, BlockSplit, bigraph::BlockLess> splits;
    for (const BlockId& b : ablocks) splits[b] = block_split(b, chi);
    for (const BlockId& b : bblocks) splits[b] = block_split(b, chi);
    auto dir_set = [&](const BlockId& from, bool up) -> const std::vector<BlockId>& {
        return up ? splits[from].asc : splits[from].desc;
    };

    // Pure types: the link is a join of three discrete sets, the set in
    // coordinate j weighted from coordinate j's block and meeting every
    // opposite block (span-connectivity certificate).
    auto pure_type = [&](const std::array<BlockId, 3>& blocks) {
        std::string type = block_triple_name(blocks[0], blocks[1], blocks[2]);
        for (bool up : {true, false}) {
            std::array<const std::vector<BlockId>*, 3> sets;
            std::array<const std::vector<BlockId>*, 3> deads;
            for (int j = 0; j < 3; ++j) {
                sets[j] = &dir_set(blocks[j], up);
                deads[j] = &splits[blocks[j]].dead;
            }
            bool all3 = !sets[0]->empty() && !sets[1]->empty() && !sets[2]->empty();
            std::string setdesc = block_set_name(*sets[0]) + " * " + block_set_name(*sets[1]) +
                                  " * " + block_set_name(*sets[2]);
            push_symbolic(rep.checks, type, "{}", up, "join of three nonempty sets", all3,
                          setdesc, "empty join factor: " + setdesc);
            for (int j = 0; j < 3; ++j) {
                if (deads[j]->empty()) continue;
                int o1 = (j + 1) % 3, o2 = (j + 2) % 3;
                bool ok = !sets[o1]->empty() && !sets[o2]->empty();
                push_symbolic(rep.checks, type,
                              "{dead vertex in coordinate " + std::to_string(j + 1) + ", classes " +
                                  block_set_name(*deads[j]) + "}",
                              up, "join of two nonempty sets", ok,
                              block_set_name(*sets[o1]) + " * " + block_set_name(*sets[o2]),
                              "empty join factor");
                for (int o = j + 1; o < 3; ++o) {
                    if (o == j || deads[o]->empty()) continue;
                    int third = 3 - j - o;
                    push_symbolic(rep.checks, type,
                                  "{dead edge in coordinates " + std::to_string(j + 1) + "," +
                                      std::to_string(o + 1) + "}",
                                  up, "nonempty remaining factor", !sets[third]->empty(),
                                  block_set_name(*sets[third]), "empty remaining factor");
                }
            }
        }
    };
    for (const BlockId& b1 : ablocks)
        for (const BlockId& b2 : ablocks)
            for (const BlockId& b3 : ablocks) pure_type({b1, b2, b3});
    for (const BlockId& b1 : bblocks)
        for (const BlockId& b2 : bblocks)
            for (const BlockId& b3 : bblocks) pure_type({b1, b2, b3});

    // Mixed types: the link is (graph factor) * (restricted discrete factor).
    // The graph factor's A side comes from one coordinate and its B side from
    // another; being a union of whole blocks on each side, it is connected as
    // soon as both sides are nonempty, by span connectivity.
    struct MixedRoles {
        std::array<Side, 3> sides;
        int v_coord, ga_coord, gb_coord;
    };
    const std::vector<MixedRoles> mixed = {
        {{Side::A, Side::B, Side::A}, 0, 1, 2}, {{Side::B, Side::B, Side::A}, 0, 1, 2},
        {{Side::A, Side::A, Side::B}, 1, 2, 0}, {{Side::A, Side::B, Side::B}, 1, 2, 0},
        {{Side::B, Side::A, Side::A}, 2, 0, 1}, {{Side::B, Side::A, Side::B}, 2, 0, 1}};
    for (const MixedRoles& mr : mixed) {
        std::array<std::vector<BlockId>, 3> choice;
        for (int j = 0; j < 3; ++j) choice[j] = mr.sides[j] == Side::A ? ablocks : bblocks;
        for (const BlockId& b1 : choice[0])
            for (const BlockId& b2 : choice[1])
                for (const BlockId& b3 : choice[2]) {
                    std::array<BlockId, 3> blocks{b1, b2, b3};
                    std::string type = block_triple_name(b1, b2, b3);
                    const BlockId& nu = blocks[mr.v_coord];
                    const BlockId& ga = blocks[mr.ga_coord];  // B-block; moves give A vertices
                    const BlockId& gb = blocks[mr.gb_coord];  // A-block; moves give B vertices
                    for (bool up : {true, false}) {
                        const auto& aset = dir_set(ga, up);
                        const auto& bset = dir_set(gb, up);
                        const auto& vset = dir_set(nu, up);
                        bool graph_ok = !aset.empty() && !bset.empty();
                        std::string gdesc = "graph factor on " + block_set_name(aset) + " u " +
                                            block_set_name(bset);
                        push_symbolic(rep.checks, type, "{}", up,
                                      "connected graph factor joined to nonempty set",
                                      graph_ok && !vset.empty(),
                                      gdesc + " * " + block_set_name(vset),
                                      "empty side: " + gdesc + " * " + block_set_name(vset));
                        if (!splits[nu].dead.empty())
                            push_symbolic(rep.checks, type, "{dead vertex, restricted factor}", up,
                                          "connected graph factor", graph_ok, gdesc,
                                          "graph factor side empty: " + gdesc);
                        if (!splits[ga].dead.empty())
                            push_symbolic(rep.checks, type, "{dead vertex, graph factor A side}",
                                          up, "join of two nonempty sets",
                                          !bset.empty() && !vset.empty(),
                                          block_set_name(bset) + " * " + block_set_name(vset),
                                          "empty join factor");
                        if (!splits[gb].dead.empty())
                            push_symbolic(rep.checks, type, "{dead vertex, graph factor B side}",
                                          up, "join of two nonempty sets",
                                          !aset.empty() && !vset.empty(),
                                          block_set_name(aset) + " * " + block_set_name(vset),
                                          "empty join factor");
                        if (!splits[ga].dead.empty() && !splits[gb].dead.empty())
                            push_symbolic(rep.checks, type, "{dead edge inside graph factor}", up,
                                          "nonempty restricted factor", !vset.empty(),
                                          block_set_name(vset), "restricted factor empty");
                        if (!splits[ga].dead.empty() && !splits[nu].dead.empty())
                            push_symbolic(rep.checks, type,
                                          "{dead edge, graph A side x restricted}", up,
                                          "nonempty remaining side", !bset.empty(),
                                          block_set_name(bset), "remaining side empty");
                        if (!splits[gb].dead.empty() && !splits[nu].dead.empty())
                            push_symbolic(rep.checks, type,
                                          "{dead edge, graph B side x restricted}", up,
                                          "nonempty remaining side", !aset.empty(),
                                          block_set_name(aset), "remaining side empty");
                    }
                }
    }
}

Verdict aggregate_type(const VerificationReport& rep, std::map<std::string, Verdict>& out) {
    Verdict overall = Verdict::Pass;
    for (const HypoCheck& c : rep.checks) {
        std::string key = c.vertex_type.substr(0, c.vertex_type.find(" at ("));
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, c.result.verdict);
        else
            it->second = combine(it->second, c.result.verdict);
        overall = combine(overall, c.result.verdict);
    }
    return overall;
}

}  // namespace

VerificationReport check_theorem_hypotheses_xgamma(const MorseGraph& gamma,
                                                   const bigraph::SizeabilityReport* certificate,
                                                   const Character& chi, int m,
                                                   const HypothesisOptions& opts) {
    if (m != 1) throw std::invalid_argument("only hypothesis level m = 1 is supported");
    if (chi.family() != Family::XGamma || chi.n() != gamma.rank)
        throw std::invalid_argument("character does not match the graph family");

    if (opts.engine == Engine::Both) {
        HypothesisOptions sub = opts;
        sub.engine = Engine::Explicit;
        VerificationReport ex = check_theorem_hypotheses_xgamma(gamma, certificate, chi, m, sub);
        sub.engine = Engine::Symbolic;
        VerificationReport sy = check_theorem_hypotheses_xgamma(gamma, certificate, chi, m, sub);
        VerificationReport merged;
        merged.engine = "both";
        std::map<std::string, Verdict> ex_types, sy_types;
        aggregate_type(ex, ex_types);
        aggregate_type(sy, sy_types);
        for (auto& c : ex.checks) merged.checks.push_back(std::move(c));
        for (auto& c : sy.checks) merged.checks.push_back(std::move(c));
        HypoCheck agree;
        agree.vertex_type = "(all)";
        agree.sigma = "-";
        agree.direction = "-";
        agree.result.name = "engine agreement";
        agree.result.verdict = Verdict::Pass;
        for (const auto& [type, ev] : ex_types) {
            auto it = sy_types.find(type);
            if (it == sy_types.end() || ev == Verdict::Inconclusive ||
                it->second == Verdict::Inconclusive)
                continue;
            if (ev != it->second) {
                agree.result.verdict = Verdict::Fail;
                agree.result.witness = "engines disagree on " + type + ": explicit " +
                                       to_string(ev) + ", symbolic " + to_string(it->second);
                break;
            }
        }
        merged.checks.push_back(std::move(agree));
        return merged;
    }

    VerificationReport rep;
    if (opts.engine == Engine::Explicit) {
        rep.engine = "explicit";
        run_explicit_engine_xgamma(gamma, chi, m, opts, rep);
    } else {
        rep.engine = "symbolic";
        // The block-level arguments use the partition axioms and span
        // connectivity; 4-cycle freeness is not needed for them.
        bool cert_ok = certificate && certificate->morse_suited.verdict == Verdict::Pass &&
                       std::all_of(certificate->span_connectivity.begin(),
                                   certificate->span_connectivity.end(),
                                   [](const CheckResult& c) { return c.verdict == Verdict::Pass; });
        if (!cert_ok)
            throw std::invalid_argument(
                "symbolic engine requires a certificate with connected block-pair spans");
        run_symbolic_engine_xgamma(gamma, chi, rep);
    }
    return rep;
}

VerificationReport check_theorem_hypotheses_theta(int n, const Character& chi, int m,
                                                  const HypothesisOptions& opts) {
    if (m != 1) throw std::invalid_argument("only hypothesis level m = 1 is supported");
    if (chi.family() != Family::Theta || chi.n() != n)
        throw std::invalid_argument("character does not match the theta family");

    if (opts.engine == Engine::Both) {
        HypothesisOptions sub = opts;
        sub.engine = Engine::Explicit;
        VerificationReport ex = check_theorem_hypotheses_theta(n, chi, m, sub);
        sub.engine = Engine::Symbolic;
        VerificationReport sy = check_theorem_hypotheses_theta(n, chi, m, sub);
        VerificationReport merged;
        merged.engine = "both";
        for (auto& c : ex.checks) merged.checks.push_back(std::move(c));
        for (auto& c : sy.checks) merged.checks.push_back(std::move(c));
        HypoCheck agree;
        agree.vertex_type = "(all)";
        agree.sigma = "-";
        agree.direction = "-";
        agree.result.name = "engine agreement";
        agree.result.verdict = (ex.overall() == sy.overall()) ? Verdict::Pass : Verdict::Fail;
        if (agree.result.verdict == Verdict::Fail)
            agree.result.witness = "explicit " + std::string(to_string(ex.overall())) +
                                   ", symbolic " + to_string(sy.overall());
        merged.checks.push_back(std::move(agree));
        return merged;
    }

    VerificationReport rep;
    rep.engine = opts.engine == Engine::Explicit ? "explicit" : "symbolic";
    for (int c0 : {0, 1})
        for (int c1 : {0, 1})
            for (int c2 : {0, 1}) {
                Vertex3 v{c0, c1, c2};
                if (opts.engine == Engine::Explicit) {
                    LabeledLink link = labeled_link_theta(n, v);
                    run_explicit_checks(link, chi, m, link.center_desc, rep.checks);
                    continue;
                }
                // Symbolic: each factor is the same discrete 2n-set with
                // orientations fixed by the corner coordinate.
                std::string type = "corner (" + std::to_string(c0) + "," + std::to_string(c1) +
                                   "," + std::to_string(c2) + ")";
                std::array<std::vector<std::string>, 3> asc, desc, dead;
                for (int j = 0; j < 3; ++j) {
                    for (const EdgeClass& cls : edge_classes(Family::Theta, n)) {
                        LinkLabel lab;
                        lab.cls = cls;
                        lab.away_is_forward = cls.theta_x ? (v[j] == 0) : (v[j] == 1);
                        Rational w = away_weight(lab, chi);
                        if (w > 0)
                            asc[j].push_back(cls.name());
                        else if (w < 0)
                            desc[j].push_back(cls.name());
                        else
                            dead[j].push_back(cls.name());
                    }
                }
                auto setname = [](const std::vector<std::string>& s) {
                    std::string out = "{";
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        if (i) out += ", ";
                        out += s[i];
                    }
                    return out + "}";
                };
                for (bool up : {true, false}) {
                    auto& sets = up ? asc : desc;
                    bool all3 = !sets[0].empty() && !sets[1].empty() && !sets[2].empty();
                    push_symbolic(rep.checks, type, "{}", up, "join of three nonempty sets", all3,
                                  setname(sets[0]) + " * " + setname(sets[1]) + " * " +
                                      setname(sets[2]),
                                  "empty join factor");
                    for (int j = 0; j < 3; ++j) {
                        if (dead[j].empty()) continue;
                        int o1 = (j + 1) % 3, o2 = (j + 2) % 3;
                        push_symbolic(rep.checks, type,
                                      "{dead vertex in factor " + std::to_string(j + 1) + "}", up,
                                      "join of two nonempty sets",
                                      !sets[o1].empty() && !sets[o2].empty(),
                                      setname(sets[o1]) + " * " + setname(sets[o2]),
                                      "empty join factor");
                        for (int o = j + 1; o < 3; ++o) {
                            if (dead[o].empty()) continue;
                            int third = 3 - j - o;
                            push_symbolic(rep.checks, type,
                                          "{dead edge in factors " + std::to_string(j + 1) + "," +
                                              std::to_string(o + 1) + "}",
                                          up, "nonempty remaining factor", !sets[third].empty(),
                                          setname(sets[third]), "empty remaining factor");
                        }
                    }
                }
            }
    return rep;
}

// ----------------------------------------------------------- dead fullness

CheckResult check_full_subcomplex(const SimplicialComplex& L, const std::vector<int>& sub_vertices,
                                  const SimplicialComplex& sub) {
    CheckResult res{"full subcomplex", Verdict::Pass, ""};
    if (sub.num_vertices() != sub_vertices.size()) {
        res.verdict = Verdict::Fail;
        res.witness = "vertex count mismatch";
        return res;
    }
    int k = static_cast<int>(sub_vertices.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool in_L = L.has_edge(sub_vertices[i], sub_vertices[j]);
            if (in_L != sub.has_edge(i, j)) {
                res.verdict = Verdict::Fail;
                res.witness = "edge {" + L.labels[sub_vertices[i]] + ", " +
                              L.labels[sub_vertices[j]] + "} " +
                              (in_L ? "missing from subcomplex" : "not induced");
                return res;
            }
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                bool in_L = L.has_triangle(sub_vertices[i], sub_vertices[j], sub_vertices[l]);
                if (in_L != sub.has_triangle(i, j, l)) {
                    res.verdict = Verdict::Fail;
                    res.witness = "triangle {" + L.labels[sub_vertices[i]] + ", " +
                                  L.labels[sub_vertices[j]] + ", " + L.labels[sub_vertices[l]] +
                                  "} " + (in_L ? "missing from subcomplex" : "not induced");
                    return res;
                }
            }
    return res;
}

CheckResult check_dead_links_full(const LabeledLink& link, const Character& chi) {
    SplitLinks split = living_dead_split(link, chi);
    CheckResult res = check_full_subcomplex(link.complex, split.dead_to_link, split.dead);
    res.name = "dead link fullness";
    return res;
}

CheckResult check_dead_links_full_xgamma(const MorseGraph& gamma, const Character& chi,
                                         std::size_t budget) {
    ProductCubeComplex X = cubeworld::build_x_gamma(gamma);
    CheckResult out{"dead link fullness", Verdict::Pass, ""};
    for (const TypeRep& tr : xgamma_type_reps(gamma)) {
        if (link_cell_estimate(X, tr.v) > Int(budget)) {
            out.verdict = combine(out.verdict, Verdict::Inconclusive);
            out.witness = "link budget exceeded at " + tr.type;
            continue;
        }
        LabeledLink link = labeled_link_xgamma(X, tr.v);
        CheckResult r = check_dead_links_full(link, chi);
        if (r.verdict == Verdict::Fail) {
            r.witness = tr.type + ": " + r.witness;
            return r;
        }
    }
    return out;
}

CheckResult check_dead_links_full_theta(int n, const Character& chi) {
    CheckResult out{"dead link fullness", Verdict::Pass, ""};
    for (int c0 : {0, 1})
        for (int c1 : {0, 1})
            for (int c2 : {0, 1}) {
                LabeledLink link = labeled_link_theta(n, {c0, c1, c2});
                CheckResult r = check_dead_links_full(link, chi);
                if (r.verdict == Verdict::Fail) return r;
            }
    return out;
}

}  // namespace cubemorse::morse
