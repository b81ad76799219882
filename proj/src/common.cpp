#include "cubemorse/common.hpp"

#include <array>

namespace cubemorse {

namespace {

Int pow_mod(Int base, Int exp, const Int& mod) {
    Int result = 1;
    base %= mod;
    while (exp > 0) {
        if (bit_test(exp, 0)) result = (result * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const std::array<int, 15> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3.3*10^24 with the first 13 bases; the extra
    // bases keep the error negligible for the ~10^30 construction primes.
    for (int a : small) {
        if (miller_rabin_witness(n, Int(a), d, r)) return false;
    }
    static const std::array<int, 10> extra = {53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int a : extra) {
        if (miller_rabin_witness(n, Int(a), d, r)) return false;
    }
    return true;
}

Int next_prime_above(Int n) {
    Int c = n + 1;
    if (c <= 2) return 2;
    if (!bit_test(c, 0)) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

std::string rational_to_string(const Rational& q) {
    Int num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace cubemorse
