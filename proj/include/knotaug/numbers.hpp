#ifndef KNOTAUG_NUMBERS_HPP
#define KNOTAUG_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"

namespace knotaug {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer int_gcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }
inline Integer int_abs(const Integer& a) { return boost::multiprecision::abs(a); }

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parse "p", "-p" or "p/q" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw usage_error("parse_rational: zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw usage_error("parse_rational: cannot parse '" + text + "'");
    }
}

/// All positive divisors of |n|, n != 0.  Trial division; fine for the
/// coefficient sizes generated here.
inline std::vector<Integer> positive_divisors(Integer n) {
    n = int_abs(n);
    if (n == 0) throw usage_error("positive_divisors: zero has no finite divisor list");
    std::vector<std::pair<Integer, unsigned>> factors;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) factors.emplace_back(p, e);
    };
    strip(2);
    for (Integer p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

/// Prime factorization of |n| as (prime, exponent) pairs, n != 0.
inline std::vector<std::pair<Integer, long>> factorize(Integer n) {
    n = int_abs(n);
    if (n == 0) throw usage_error("factorize: zero");
    std::vector<std::pair<Integer, long>> out;
    auto strip = [&](const Integer& p) {
        long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Integer p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Prime field F_p, p a small prime.

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t p) {
    base = mod_reduce(base, p);
    if (e < 0) {
        if (base == 0) throw domain_error("mod_pow: negative power of zero");
        return mod_pow(mod_pow(base, p - 2, p), -e, p); // Fermat inverse
    }
    std::int64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a = mod_reduce(a, p);
    if (a == 0) throw domain_error("mod_inv: zero is not invertible");
    return mod_pow(a, p - 2, p);
}

/// Element of F_p in canonical residue form.
struct PrimeFieldElem {
    std::int64_t p;
    std::int64_t value;

    PrimeFieldElem(std::int64_t prime, std::int64_t v) : p(prime), value(mod_reduce(v, prime)) {
        if (!is_prime(prime)) throw usage_error("PrimeFieldElem: modulus must be prime");
    }
    friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;
};

inline std::int64_t mod_of_integer(const Integer& n, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<Integer>(((n % p) + p) % p));
}

inline std::int64_t mod_of_rational(const Rational& q, std::int64_t p) {
    const std::int64_t den = mod_of_integer(denominator(q), p);
    if (den == 0) throw domain_error("mod_of_rational: denominator vanishes mod p");
    return mod_mul(mod_of_integer(numerator(q), p), mod_inv(den, p), p);
}

} // namespace knotaug

#endif
