#include "cubemorse/cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cubemorse::cover {

using morse::Character;
using morse::EdgeClass;
using morse::Family;
using morse::HypoCheck;
using morse::LinkLabel;
using morse::VerificationReport;

std::string VoltageCover::base_label(int idx) const {
    return (idx < n ? "x" : "y") + std::to_string(idx % n + 1);
}

EdgeClass VoltageCover::base_class(int idx) const {
    EdgeClass c;
    c.family = Family::Theta;
    c.theta_x = idx < n;
    c.theta_index = idx % n + 1;
    return c;
}

long VoltageCover::fiber_size() const {
    if (p > Int(1'000'000)) throw std::range_error("fiber too large to materialize");
    return static_cast<long>(p);
}

long VoltageCover::derived_vertex(int side, int idx, long k) const {
    long pp = fiber_size();
    return (static_cast<long>(side) * side_size() + idx) * pp + ((k % pp) + pp) % pp;
}

long VoltageCover::num_derived_vertices() const { return 2L * side_size() * fiber_size(); }

void VoltageCover::derived_decode(long v, int& side, int& idx, long& k) const {
    long pp = fiber_size();
    k = v % pp;
    long base = v / pp;
    idx = static_cast<int>(base % side_size());
    side = static_cast<int>(base / side_size());
}

std::vector<long> VoltageCover::derived_neighbors(long v) const {
    int side, idx;
    long k;
    derived_decode(v, side, idx, k);
    long pp = fiber_size();
    std::vector<long> out;
    for (int o = 0; o < side_size(); ++o) {
        long volt = static_cast<long>(side == 0 ? voltage[idx][o] : voltage[o][idx]);
        long k2 = side == 0 ? k + volt : k - volt;
        out.push_back(derived_vertex(1 - side, o, ((k2 % pp) + pp) % pp));
    }
    return out;
}

VoltageCover build_voltage_cover(int n, const Int& p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (p <= Int(2 * n)) throw std::invalid_argument("need p > 2n");
    VoltageCover c;
    c.n = n;
    c.p = p;
    c.voltage.assign(2 * n, std::vector<Int>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) c.voltage[i][j] = mod_reduce(Int(i + 1) * (j + 1), p);
    return c;
}

Verdict CoverReport::overall() const {
    return combine(covering.verdict, combine(connected.verdict, four_cycle_lifts.verdict));
}

std::string CoverReport::first_witness() const {
    for (const CheckResult* c : {&covering, &connected, &four_cycle_lifts})
        if (c->verdict != Verdict::Pass) return c->name + ": " + c->witness;
    return "";
}

CoverReport verify_cover_properties(const VoltageCover& cover) {
    CoverReport rep;
    rep.covering = {"covering", Verdict::Pass, ""};
    rep.connected = {"connectivity", Verdict::Pass, ""};
    rep.four_cycle_lifts = {"4-cycle lifts", Verdict::Pass, ""};
    int m = cover.side_size();
    if (static_cast<int>(cover.voltage.size()) != m) {
        rep.covering = {"covering", Verdict::Fail, "voltage table has wrong shape"};
        return rep;
    }
    for (const auto& row : cover.voltage)
        if (static_cast<int>(row.size()) != m) {
            rep.covering = {"covering", Verdict::Fail, "voltage table has wrong shape"};
            return rep;
        }

    long N = cover.num_derived_vertices();
    // Local bijectivity: the star of every derived vertex projects bijectively
    // onto the base star.
    for (long v = 0; v < N && rep.covering.verdict == Verdict::Pass; ++v) {
        auto nb = cover.derived_neighbors(v);
        std::vector<bool> seen(m, false);
        for (long w : nb) {
            int side, idx;
            long k;
            cover.derived_decode(w, side, idx, k);
            if (seen[idx]) {
                rep.covering.verdict = Verdict::Fail;
                rep.covering.witness = "two edges over the same base edge at fiber vertex";
                break;
            }
            seen[idx] = true;
        }
        if (static_cast<int>(nb.size()) != m) {
            rep.covering.verdict = Verdict::Fail;
            rep.covering.witness = "degree mismatch with the base";
        }
    }

    // Connectivity.
    std::vector<char> vis(N, 0);
    std::deque<long> q{0};
    vis[0] = 1;
    long cnt = 0;
    while (!q.empty()) {
        long v = q.front();
        q.pop_front();
        ++cnt;
        for (long w : cover.derived_neighbors(v))
            if (!vis[w]) {
                vis[w] = 1;
                q.push_back(w);
            }
    }
    if (cnt != N) {
        rep.connected.verdict = Verdict::Fail;
        rep.connected.witness = "derived graph has " + std::to_string(N - cnt) +
                                " vertices unreachable from (" + cover.base_label(0) + ", 0)";
    }

    // Every base 4-cycle must lift to a single 4p-cycle.
    long pp = cover.fiber_size();
    for (int i = 0; i < m && rep.four_cycle_lifts.verdict == Verdict::Pass; ++i)
        for (int i2 = i + 1; i2 < m && rep.four_cycle_lifts.verdict == Verdict::Pass; ++i2)
            for (int j = 0; j < m && rep.four_cycle_lifts.verdict == Verdict::Pass; ++j)
                for (int j2 = j + 1; j2 < m; ++j2) {
                    // trace the lift of (i, j, i2, j2) starting in fiber 0
                    long k = 0, steps = 0;
                    do {
                        k += static_cast<long>(cover.voltage[i][j]);
                        k -= static_cast<long>(cover.voltage[i2][j]);
                        k += static_cast<long>(cover.voltage[i2][j2]);
                        k -= static_cast<long>(cover.voltage[i][j2]);
                        k = ((k % pp) + pp) % pp;
                        steps += 4;
                    } while (k != 0);
                    if (steps != 4 * pp) {
                        rep.four_cycle_lifts.verdict = Verdict::Fail;
                        rep.four_cycle_lifts.witness =
                            "base 4-cycle (" + cover.base_label(i) + ", " + cover.base_label(j) +
                            ", " + cover.base_label(i2) + ", " + cover.base_label(j2) +
                            ") lifts to cycles of length " + std::to_string(steps);
                        break;
                    }
                }
    return rep;
}

namespace {

// BFS over the derived subgraph induced on the fibers of the given base sets.
// Returns {nonempty, connected}.
std::pair<bool, bool> induced_connectivity(const VoltageCover& cover,
                                           const std::vector<int>& f1_subset,
                                           const std::vector<int>& f2_subset) {
    long pp = cover.fiber_size();
    std::vector<char> in(cover.num_derived_vertices(), 0);
    long total = 0;
    for (int i : f1_subset)
        for (long k = 0; k < pp; ++k) in[cover.derived_vertex(0, i, k)] = 1, ++total;
    for (int j : f2_subset)
        for (long k = 0; k < pp; ++k) in[cover.derived_vertex(1, j, k)] = 1, ++total;
    if (total == 0) return {false, false};
    long start = -1;
    for (long v = 0; v < static_cast<long>(in.size()); ++v)
        if (in[v]) {
            start = v;
            break;
        }
    std::vector<char> vis(in.size(), 0);
    std::deque<long> q{start};
    vis[start] = 1;
    long cnt = 0;
    while (!q.empty()) {
        long v = q.front();
        q.pop_front();
        ++cnt;
        for (long w : cover.derived_neighbors(v))
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                q.push_back(w);
            }
    }
    return {true, cnt == total};
}

}  // namespace

bool preimage_join_connected(const VoltageCover& cover, const std::vector<int>& f1_subset,
                             const std::vector<int>& f2_subset) {
    if (f1_subset.empty() || f2_subset.empty()) return false;
    auto [nonempty, connected] = induced_connectivity(cover, f1_subset, f2_subset);
    return nonempty && connected;
}

CheckResult verify_deck_invariance(const VoltageCover& cover, const Character& chi) {
    CheckResult res{"deck invariance", Verdict::Pass, ""};
    long pp = cover.fiber_size();
    long N = cover.num_derived_vertices();
    for (long v = 0; v < N; ++v) {
        int side, idx;
        long k;
        cover.derived_decode(v, side, idx, k);
        long tv = cover.derived_vertex(side, idx, k + 1);
        auto nb = cover.derived_neighbors(v);
        auto tnb = cover.derived_neighbors(tv);
        for (long w : nb) {
            int ws, wi;
            long wk;
            cover.derived_decode(w, ws, wi, wk);
            long tw = cover.derived_vertex(ws, wi, (wk + 1) % pp);
            if (std::find(tnb.begin(), tnb.end(), tw) == tnb.end()) {
                res.verdict = Verdict::Fail;
                res.witness = "fiber translation does not preserve adjacency at " +
                              cover.base_label(idx);
                return res;
            }
        }
    }
    // Living membership is a function of the base vertex, so the translation
    // preserves the living subgraphs; spot-check the weights are well defined.
    for (int idx = 0; idx < cover.side_size(); ++idx) (void)edge_weight(cover.base_class(idx), chi);
    return res;
}

VerificationReport check_type1_hypotheses(int n, const Character& chi) {
    morse::HypothesisOptions opts;
    opts.engine = morse::Engine::Both;
    return morse::check_theorem_hypotheses_theta(n, chi, 1, opts);
}

VerificationReport check_type2_hypotheses(const VoltageCover& cover, const Character& chi) {
    if (chi.family() != Family::Theta || chi.n() != cover.n)
        throw std::invalid_argument("character does not match the cover");
    VerificationReport rep;
    rep.engine = "cover";
    int m = cover.side_size();
    for (int c1 : {0, 1})
        for (int c2 : {0, 1})
            for (int c3 : {0, 1}) {
                std::array<int, 3> role{c1, c2, c3};
                std::string type = "type-2 corner (" + std::to_string(c1) + "," +
                                   std::to_string(c2) + "," + std::to_string(c3) + ")";
                // split of each factor's base set by the away weight
                std::array<std::vector<int>, 3> asc, desc, dead;
                for (int f = 0; f < 3; ++f)
                    for (int idx = 0; idx < m; ++idx) {
                        LinkLabel lab;
                        lab.cls = cover.base_class(idx);
                        lab.away_is_forward = lab.cls.theta_x ? (role[f] == 0) : (role[f] == 1);
                        Rational w = morse::away_weight(lab, chi);
                        if (w > 0)
                            asc[f].push_back(idx);
                        else if (w < 0)
                            desc[f].push_back(idx);
                        else
                            dead[f].push_back(idx);
                    }
                auto names = [&](const std::vector<int>& s) {
                    std::string out = "{";
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        if (i) out += ", ";
                        out += cover.base_label(s[i]);
                    }
                    return out + "}";
                };
                for (bool up : {true, false}) {
                    const auto& s1 = up ? asc[0] : desc[0];
                    const auto& s2 = up ? asc[1] : desc[1];
                    const auto& s3 = up ? asc[2] : desc[2];
                    std::string dir = up ? "up" : "down";
                    auto push = [&](const std::string& sigma, const std::string& name, bool ok,
                                    const std::string& pass_note, const std::string& fail_note) {
                        HypoCheck hc;
                        hc.vertex_type = type;
                        hc.sigma = sigma;
                        hc.direction = dir;
                        hc.result.name = name;
                        hc.result.verdict = ok ? Verdict::Pass : Verdict::Fail;
                        hc.result.witness = ok ? pass_note : fail_note;
                        rep.checks.push_back(std::move(hc));
                    };

                    auto [g_nonempty, g_connected] = induced_connectivity(cover, s1, s2);
                    bool gamma_ok = g_nonempty && g_connected && !s1.empty() && !s2.empty();
                    std::string gdesc =
                        "living cover over " + names(s1) + " * " + names(s2);
                    push("{}", "living cover connected, discrete factor nonempty",
                         gamma_ok && !s3.empty(), gdesc + " with " + names(s3),
                         gamma_ok ? "discrete factor empty" : gdesc + " is disconnected or empty");
                    if (!dead[2].empty())
                        push("{dead vertex in the discrete factor " + names(dead[2]) + "}",
                             "living cover connected", gamma_ok, gdesc,
                             gdesc + " is disconnected or empty");
                    if (!dead[0].empty())
                        push("{dead vertex over factor 1, " + names(dead[0]) + "}",
                             "join of two nonempty sets", !s2.empty() && !s3.empty(),
                             "neighbors over " + names(s2) + " * " + names(s3),
                             "empty join factor");
                    if (!dead[1].empty())
                        push("{dead vertex over factor 2, " + names(dead[1]) + "}",
                             "join of two nonempty sets", !s1.empty() && !s3.empty(),
                             "neighbors over " + names(s1) + " * " + names(s3),
                             "empty join factor");
                    if (!dead[0].empty() && !dead[1].empty())
                        push("{dead edge inside the cover}", "nonempty discrete factor",
                             !s3.empty(), names(s3), "discrete factor empty");
                    if (!dead[0].empty() && !dead[2].empty())
                        push("{dead edge, cover x discrete}", "nonempty remaining side",
                             !s2.empty(), names(s2), "remaining side empty");
                    if (!dead[1].empty() && !dead[2].empty())
                        push("{dead edge, cover x discrete}", "nonempty remaining side",
                             !s1.empty(), names(s1), "remaining side empty");
                }
            }
    return rep;
}

}  // namespace cubemorse::cover
