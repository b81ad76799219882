#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace cubemorse {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

// Combine sub-verdicts: any fail dominates, then any inconclusive.
inline Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string witness;  // empty on pass
};

// Enumeration budget. Operations that would materialize more cells than this
// degrade to arithmetic mode or report "budget exceeded".
inline std::size_t enumeration_budget() {
    if (const char* env = std::getenv("CUBEMORSE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

inline std::size_t graph_vertex_budget() { return 1'000'000; }

// Miller-Rabin, deterministic for n < 3.3e24, extremely small error beyond.
bool is_prime(const Int& n);
Int next_prime_above(Int n);

// Exact positive mod.
inline Int mod_reduce(Int x, const Int& p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

std::string rational_to_string(const Rational& q);
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace cubemorse
