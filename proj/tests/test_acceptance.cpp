// Acceptance gate: one line per criterion. Exit code is the number of
// failed criteria, so the suite stays honest about known discrepancies.
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cubemorse/bigraph.hpp"
#include "cubemorse/cover.hpp"
#include "cubemorse/cubeworld.hpp"
#include "cubemorse/morse.hpp"
#include "cubemorse/simplicial.hpp"

using namespace cubemorse;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<long> primes_up_to(long hi) {
    std::vector<long> out;
    for (long p = 2; p <= hi; ++p)
        if (is_prime(Int(p))) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------- criterion 1

Criterion construction_soundness() {
    Criterion c;
    auto spec1 = bigraph::build_modular_spec(1);
    c.require(spec1.modulus == 397, "rank-1 modulus is not 397");
    c.require(bigraph::verify_sizeable(spec1, bigraph::Backend::Both).overall() == Verdict::Pass,
              "rank-1 instance not sizeable on both backends");
    for (int n : {2, 3}) {
        auto spec = bigraph::build_modular_spec(n);
        c.require(bigraph::verify_sizeable_arithmetic(spec).overall() == Verdict::Pass,
                  "rank-" + std::to_string(n) + " instance fails the arithmetic backend");
    }

    std::mt19937 rng(20240817);
    auto primes = primes_up_to(101);
    std::vector<long> usable(primes.begin() + 2, primes.end());  // p >= 5
    int agreements = 0;
    for (int t = 0; t < 120; ++t) {
        long p = usable[rng() % usable.size()];
        bigraph::ModularSpec spec;
        spec.rank = 1;
        spec.modulus = p;
        for (int e = 0; e < 4; ++e) {
            long r1 = rng() % p, r2 = rng() % p;
            if (r1 == r2) r2 = (r2 + 1) % p;
            spec.sigma.push_back({Int(r1), Int(r2)});
        }
        auto a = bigraph::verify_sizeable_arithmetic(spec);
        auto e = bigraph::verify_sizeable_explicit(bigraph::realize(spec));
        bool agree = a.four_cycle_free.verdict == e.four_cycle_free.verdict;
        for (std::size_t i = 0; agree && i < a.span_connectivity.size(); ++i)
            agree = a.span_connectivity[i].verdict == e.span_connectivity[i].verdict;
        if (agree) ++agreements;
    }
    c.require(agreements == 120, "backend disagreement on random modular specs");
    return c;
}

// ---------------------------------------------------------------- criterion 2

bigraph::MorseGraph random_bipartite(std::mt19937& rng) {
    bigraph::MorseGraph g;
    g.rank = 1;
    int a = 1 + static_cast<int>(rng() % 4);
    int b = 1 + static_cast<int>(rng() % 4);
    std::vector<int> as, bs;
    for (int i = 0; i < a; ++i)
        as.push_back(g.add_vertex({bigraph::Side::A, 1, i % 2 ? bigraph::Sign::Plus : bigraph::Sign::Minus},
                                  "a" + std::to_string(i)));
    for (int i = 0; i < b; ++i)
        bs.push_back(g.add_vertex({bigraph::Side::B, 1, i % 2 ? bigraph::Sign::Plus : bigraph::Sign::Minus},
                                  "b" + std::to_string(i)));
    for (int i : as)
        for (int j : bs)
            if (rng() % 2) g.add_edge(i, j);
    g.finalize();
    return g;
}

Criterion euler_identities() {
    Criterion c;

    // (a) enumeration vs closed-form counts on random bipartite graphs
    std::mt19937 rng(20240818);
    for (int t = 0; t < 120; ++t) {
        bigraph::MorseGraph g = random_bipartite(rng);
        auto X = cubeworld::build_x_gamma(g);
        auto en = cubeworld::cell_counts(X, cubeworld::CountMode::Enumerate);
        auto cl = cubeworld::cell_counts(X, cubeworld::CountMode::ClosedForm);
        bool same = en.verdict == Verdict::Pass && en.counts.V == cl.counts.V &&
                    en.counts.E == cl.counts.E && en.counts.F == cl.counts.F &&
                    en.counts.C == cl.counts.C;
        c.require(same, "count modes disagree on a random bipartite graph (trial " +
                            std::to_string(t) + ")");
        if (!c.ok) break;
    }

    // (b) counted chi of the realized rank-1 modular graph against the closed
    // polynomial (this is a faithful transcription; it does not hold)
    for (long p : primes_up_to(101)) {
        if (p < 5) continue;
        auto g = bigraph::realize(bigraph::build_modular_spec(1, Int(p)));
        auto cl = cubeworld::cell_counts(cubeworld::build_x_gamma(g),
                                         cubeworld::CountMode::ClosedForm);
        c.require(cl.counts.chi() == cubeworld::euler_formula_xgamma(1, p),
                  "chi(X) at (1," + std::to_string(p) + ") is " + cl.counts.chi().str() +
                      ", polynomial gives " + cubeworld::euler_formula_xgamma(1, p).str());
    }

    // (c) the two closed routes to chi of the ramified cover agree
    for (int n = 2; n <= 5; ++n)
        for (long p : {5L, 7L, 11L, 13L})
            c.require(cubeworld::euler_formula_Y(n, p) == cubeworld::euler_formula_Y_decomposed(n, p),
                      "cover chi routes disagree at n=" + std::to_string(n));
    c.require(cubeworld::euler_formula_Y(2, 5) == -400, "cover chi at (2,5) is not -400");

    // (d) negativity on the stated ranges
    for (int n = 1; n <= 6; ++n)
        for (long p : primes_up_to(101)) {
            if (p < 5) continue;
            c.require(cubeworld::euler_formula_xgamma(n, p) < 0, "xgamma polynomial not negative");
            if (n >= 2) c.require(cubeworld::euler_formula_Y(n, p) < 0, "cover polynomial not negative");
        }
    return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion hypothesis_certificates() {
    Criterion c;
    // smallest sizeable rank-1 modular instance (p = 11; nothing exists at 5, 7)
    bigraph::ModularSpec spec;
    spec.rank = 1;
    spec.modulus = 11;
    spec.sigma = {{Int(0), Int(1)}, {Int(0), Int(2)}, {Int(0), Int(2)}, {Int(5), Int(6)}};
    auto g = bigraph::realize(spec);
    auto cert = bigraph::verify_sizeable(spec, bigraph::Backend::Both);
    c.require(cert.overall() == Verdict::Pass, "p=11 fixture is not sizeable");
    morse::HypothesisOptions opts;
    opts.engine = morse::Engine::Both;
    for (const auto& ch : morse::enumerate_chambers(morse::Family::XGamma, 1)) {
        auto rep = morse::check_theorem_hypotheses_xgamma(g, &cert, ch.representative, 1, opts);
        c.require(rep.overall() == Verdict::Pass,
                  "xgamma hypothesis grid failed: " + rep.first_witness());
    }

    for (auto [n, p] : {std::pair<int, long>{2, 5}, {3, 7}}) {
        auto cov = cover::build_voltage_cover(n, Int(p));
        c.require(cover::verify_cover_properties(cov).overall() == Verdict::Pass,
                  "voltage cover verification failed");
        for (const auto& ch : morse::enumerate_chambers(morse::Family::Theta, n)) {
            c.require(cover::check_type1_hypotheses(n, ch.representative).overall() == Verdict::Pass,
                      "type-1 corner checks failed");
            c.require(cover::check_type2_hypotheses(cov, ch.representative).overall() == Verdict::Pass,
                      "type-2 cover checks failed");
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion negative_controls() {
    Criterion c;
    bigraph::ModularSpec degenerate;
    degenerate.rank = 2;
    degenerate.modulus = 5;
    degenerate.sigma.assign(16, {Int(0)});
    c.require(bigraph::verify_sizeable(degenerate, bigraph::Backend::Both).overall() == Verdict::Fail,
              "degenerate spec passed sizeability");
    auto g = bigraph::realize(degenerate);
    auto cert = bigraph::verify_sizeable_explicit(g);
    morse::HypothesisOptions opts;
    opts.engine = morse::Engine::Explicit;
    bool saw_disconnected_witness = false;
    for (const auto& ch : morse::enumerate_chambers(morse::Family::XGamma, 2)) {
        auto rep = morse::check_theorem_hypotheses_xgamma(g, &cert, ch.representative, 1, opts);
        c.require(rep.overall() == Verdict::Fail, "degenerate spec passed the hypothesis grid");
        std::string w = rep.first_witness();
        if (w.find("disconnected") != std::string::npos || w.find("H1") != std::string::npos)
            saw_disconnected_witness = true;
    }
    c.require(saw_disconnected_witness, "no disconnected-living-link witness reported");

    auto cov = cover::build_voltage_cover(2, Int(5));
    for (auto& row : cov.voltage)
        for (auto& v : row) v = 0;
    c.require(cover::verify_cover_properties(cov).overall() == Verdict::Fail,
              "zero-voltage cover passed verification");

    simplicial::SimplicialComplex hollow;
    hollow.add_vertex("u");
    hollow.add_vertex("v");
    hollow.add_vertex("w");
    hollow.add_edge(0, 1);
    hollow.add_edge(1, 2);
    hollow.add_edge(2, 0);
    c.require(!simplicial::is_flag(hollow), "hollow triangle passed the flag check");
    return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion invariant_suites() {
    Criterion c;
    std::mt19937 rng(20240819);

    // scaling invariance: splits depend only on the ray of the character
    auto link = morse::labeled_link_theta(3, {0, 1, 1});
    for (int t = 0; t < 50; ++t) {
        long i = static_cast<long>(rng() % 9) - 4, j = static_cast<long>(rng() % 9) - 4;
        if (i == 0 && j == 0) i = 1;
        long s = 1 + rng() % 7;
        auto chi = morse::Character::make(morse::Family::Theta, 3, {Rational(i), Rational(j)});
        auto chi_scaled =
            morse::Character::make(morse::Family::Theta, 3, {Rational(i * s), Rational(j * s)});
        auto a = morse::living_dead_split(link, chi);
        auto b = morse::living_dead_split(link, chi_scaled);
        c.require(a.asc_to_link == b.asc_to_link && a.desc_to_link == b.desc_to_link &&
                      a.dead_to_link == b.dead_to_link,
                  "living/dead split not scaling invariant");
    }

    // chamber completeness and sufficiency, 10^4 samples
    for (morse::Family fam : {morse::Family::XGamma, morse::Family::Theta}) {
        int n = fam == morse::Family::XGamma ? 2 : 3;
        std::set<std::vector<int>> table;
        for (const auto& ch : morse::enumerate_chambers(fam, n)) {
            c.require(morse::sign_vector(ch.representative) == ch.signs,
                      "chamber representative has the wrong sign vector");
            table.insert(ch.signs);
        }
        for (int t = 0; t < 10000; ++t) {
            std::vector<Rational> coords(2);
            bool all_zero = true;
            for (auto& q : coords) {
                long num = static_cast<long>(rng() % 41) - 20;
                long den = 1 + rng() % 9;
                q = Rational(num, den);
                if (num != 0) all_zero = false;
            }
            if (all_zero) continue;
            auto chi = morse::Character::make(fam, n, coords);
            c.require(table.count(morse::sign_vector(chi)) == 1,
                      "sampled character missed the chamber table");
            if (!c.ok) return c;
        }
    }

    // link composition: Lk_{Lk(v)}(w) = Lk(v u w) under the vertex maps
    auto oct = simplicial::join(
        simplicial::join(
            [] { simplicial::SimplicialComplex L; L.add_vertex("x0"); L.add_vertex("x1"); return L; }(),
            [] { simplicial::SimplicialComplex L; L.add_vertex("y0"); L.add_vertex("y1"); return L; }()),
        [] { simplicial::SimplicialComplex L; L.add_vertex("z0"); L.add_vertex("z1"); return L; }());
    std::vector<int> back;
    auto lk_v = simplicial::link_of_simplex(oct, {0}, &back);
    for (std::size_t w = 0; w < lk_v.num_vertices(); ++w) {
        auto inner = simplicial::link_of_simplex(lk_v, {static_cast<int>(w)});
        auto direct = simplicial::link_of_simplex(oct, {0, back[w]});
        c.require(simplicial::isomorphic_by_labels(inner, direct),
                  "link composition law violated");
    }

    // join criterion consistency: certified simple connectivity implies H1 = 0
    for (int t = 0; t < 100; ++t) {
        simplicial::SimplicialComplex A, B, C2;
        for (int i = 0, m = 1 + rng() % 3; i < m; ++i) A.add_vertex("a" + std::to_string(i));
        for (int i = 0, m = 1 + rng() % 3; i < m; ++i) B.add_vertex("b" + std::to_string(i));
        for (int i = 0, m = 1 + rng() % 3; i < m; ++i) C2.add_vertex("c" + std::to_string(i));
        auto j3 = simplicial::join(simplicial::join(A, B), C2);
        auto v = simplicial::connectivity(j3, 1);
        if (v.reaches(1)) c.require(simplicial::h1_rank(j3) == 0, "join criterion vs H1 mismatch");
    }

    // deck invariance of the living subgraphs over the cover
    auto cov = cover::build_voltage_cover(2, Int(7));
    for (const auto& ch : morse::enumerate_chambers(morse::Family::Theta, 2))
        c.require(cover::verify_deck_invariance(cov, ch.representative).verdict == Verdict::Pass,
                  "deck invariance failed");

    // dead-link fullness across chambers of both families
    auto g5 = bigraph::realize(bigraph::build_modular_spec(1, Int(5)));
    for (const auto& ch : morse::enumerate_chambers(morse::Family::XGamma, 1))
        c.require(morse::check_dead_links_full_xgamma(g5, ch.representative).verdict == Verdict::Pass,
                  "dead subcomplex not full (xgamma)");
    for (const auto& ch : morse::enumerate_chambers(morse::Family::Theta, 3))
        c.require(morse::check_dead_links_full_theta(3, ch.representative).verdict == Verdict::Pass,
                  "dead subcomplex not full (theta)");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    Entry entries[] = {
        {"criterion 1 (construction soundness)", construction_soundness},
        {"criterion 2 (euler identities)", euler_identities},
        {"criterion 3 (hypothesis certificates)", hypothesis_certificates},
        {"criterion 4 (negative controls)", negative_controls},
        {"criterion 5 (invariant suites)", invariant_suites},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        Criterion c = e.run();
        std::cout << e.name << ": " << (c.ok ? "pass" : "FAIL") << "\n";
        if (!c.ok) {
            std::cout << "    " << c.detail << "\n";
            ++failures;
        }
    }
    return failures;
}
