#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <vector>

#include "csl/errors.hpp"

// Arbitrary-precision integer/rational scalars and small number-theory
// helpers shared across the library. Rational is kept canonical (reduced,
// positive denominator) by the backing type.

namespace csl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

inline Int abs_of(const Int& n) { return boost::multiprecision::abs(n); }
inline Rational abs_of(const Rational& q) { return boost::multiprecision::abs(q); }

inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_of(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Floor square root; exact when n is a perfect square.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// sqrt of a nonnegative rational when it is again rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(numerator_of(q), &rn)) return std::nullopt;
    if (!is_perfect_square(denominator_of(q), &rd)) return std::nullopt;
    return Rational(rn, rd);
}

// Distinct prime divisors of n (n may be negative; 0 and +-1 give {}).
// Trial division; inputs here are desk scale.
inline std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> primes;
    n = abs_of(n);
    if (n <= 1) return primes;
    while (n % 2 == 0) {
        n /= 2;
        if (primes.empty()) primes.push_back(2);
    }
    for (Int p = 3; p * p <= n; p += 2) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

// Primes dividing the denominator of the reduced form of q.
inline std::set<Int> prime_support(const Rational& q) {
    auto ps = prime_divisors(denominator_of(q));
    return std::set<Int>(ps.begin(), ps.end());
}

inline bool is_square_free(long long d) {
    if (d < 1) return false;
    if (d % 4 == 0) return false;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

} // namespace csl
