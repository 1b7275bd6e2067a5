#ifndef KNOTAUG_UNI_POLY_HPP
#define KNOTAUG_UNI_POLY_HPP

#include <set>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"
#include "knotaug/numbers.hpp"

namespace knotaug {

/// Univariate polynomial over Q, coefficient at index i = coefficient of T^i.
/// Canonical form: leading coefficient nonzero unless the polynomial is zero.
class RationalUniPoly {
  public:
    RationalUniPoly() = default;
    explicit RationalUniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalUniPoly zero() { return {}; }
    static RationalUniPoly constant(Rational v) { return RationalUniPoly({std::move(v)}); }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& t) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
        return v;
    }

    friend bool operator==(const RationalUniPoly&, const RationalUniPoly&) = default;

    RationalUniPoly& operator+=(const RationalUniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RationalUniPoly& operator-=(const RationalUniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RationalUniPoly operator+(RationalUniPoly a, const RationalUniPoly& b) { return a += b; }
    friend RationalUniPoly operator-(RationalUniPoly a, const RationalUniPoly& b) { return a -= b; }
    friend RationalUniPoly operator*(const RationalUniPoly& a, const RationalUniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RationalUniPoly(std::move(r));
    }

    RationalUniPoly scaled(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& v : r) v *= s;
        return RationalUniPoly(std::move(r));
    }
    RationalUniPoly monic() const {
        if (is_zero()) return {};
        return scaled(Rational(1) / leading());
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<RationalUniPoly, RationalUniPoly> divmod(const RationalUniPoly& d) const {
        if (d.is_zero()) throw usage_error("divmod: division by zero polynomial");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1,
                                  Rational(0));
        while (rem.size() >= d.c_.size() && !rem.empty()) {
            Rational f = rem.back() / d.c_.back();
            std::size_t shift = rem.size() - d.c_.size();
            quo[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {RationalUniPoly(std::move(quo)), RationalUniPoly(std::move(rem))};
    }

    std::string str(const std::string& var = "T") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            const bool neg = c_[k] < 0;
            const Rational a = neg ? Rational(-c_[k]) : c_[k];
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (k == 0) {
                out += to_string(a);
            } else {
                if (a != 1) out += to_string(a) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Monic gcd via the Euclidean algorithm with exact rationals.
inline RationalUniPoly uni_gcd(RationalUniPoly f, RationalUniPoly g) {
    if (f.is_zero() && g.is_zero()) throw usage_error("uni_gcd: gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        auto [q, r] = f.divmod(g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// Clear denominators and content: the primitive integer polynomial obtained
/// from f by multiplying with a positive rational (sign pattern preserved).
inline std::vector<Integer> primitive_integer_form(const RationalUniPoly& f) {
    if (f.is_zero()) throw usage_error("primitive_integer_form: zero polynomial");
    Integer lcm = 1;
    for (const auto& c : f.coefficients()) {
        Integer d = denominator(c);
        lcm = lcm / int_gcd(lcm, d) * d;
    }
    std::vector<Integer> out;
    out.reserve(f.coefficients().size());
    Integer content = 0;
    for (const auto& c : f.coefficients()) {
        Integer v = numerator(c) * (lcm / denominator(c));
        out.push_back(v);
        content = int_gcd(content, v);
    }
    for (auto& v : out) v /= content;
    return out;
}

inline Integer eval_integer_poly(const std::vector<Integer>& coeffs, const Integer& num,
                                 const Integer& den) {
    // sum coeffs[i] * num^i * den^(d-i); nonzero iff num/den is not a root
    Integer acc = 0;
    const std::size_t d = coeffs.size() - 1;
    Integer npow = 1;
    std::vector<Integer> dpow(d + 1);
    dpow[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) dpow[i] = dpow[i - 1] * den;
    for (std::size_t i = 0; i <= d; ++i) {
        acc += coeffs[i] * npow * dpow[d - i];
        npow *= num;
    }
    return acc;
}

/// Exact set of rational roots via the rational root theorem: divisor pairs
/// (p, q) of the constant and leading coefficients, deduplicated in lowest
/// terms, each candidate verified by exact evaluation.  Zero is reported as a
/// root iff the constant term vanishes.
inline std::set<Rational> rational_roots(const RationalUniPoly& f) {
    if (f.is_zero()) throw usage_error("rational_roots: zero polynomial");
    std::set<Rational> roots;
    std::vector<Integer> coeffs = primitive_integer_form(f);
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low; // factor out T^low
    if (low > 0) {
        roots.insert(Rational(0));
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
    }
    if (coeffs.size() == 1) return roots;
    std::set<Rational> candidates;
    for (const Integer& p : positive_divisors(coeffs.front()))
        for (const Integer& q : positive_divisors(coeffs.back())) {
            Rational r(p, q);
            candidates.insert(r);
            candidates.insert(-r);
        }
    for (const Rational& r : candidates)
        if (eval_integer_poly(coeffs, numerator(r), denominator(r)) == 0) roots.insert(r);
    return roots;
}

} // namespace knotaug

#endif
