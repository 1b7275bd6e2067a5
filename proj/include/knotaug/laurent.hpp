#ifndef KNOTAUG_LAURENT_HPP
#define KNOTAUG_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "knotaug/errors.hpp"
#include "knotaug/numbers.hpp"

namespace knotaug {

/// Exponent triple (e_lambda, e_mu, e_U) of a Laurent monomial.
struct ExpTriple {
    std::int64_t l = 0;
    std::int64_t m = 0;
    std::int64_t u = 0;
    friend auto operator<=>(const ExpTriple&, const ExpTriple&) = default;
};

/// Element of the Laurent ring Z[lambda^, mu^, U^] (rational coefficients
/// allowed).  Canonical form: no zero coefficients; terms kept sorted by
/// exponent triple, so equality and serialization are structural.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1); }
    static LaurentPoly lambda(std::int64_t e = 1) { return monomial(1, e, 0, 0); }
    static LaurentPoly mu(std::int64_t e = 1) { return monomial(1, 0, e, 0); }
    static LaurentPoly U(std::int64_t e = 1) { return monomial(1, 0, 0, e); }

    static LaurentPoly monomial(Rational c, std::int64_t el = 0, std::int64_t em = 0,
                                std::int64_t eu = 0) {
        LaurentPoly r;
        if (c != 0) r.terms_[{el, em, eu}] = std::move(c);
        return r;
    }
    static LaurentPoly constant(Rational c) { return monomial(std::move(c)); }

    const std::map<ExpTriple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == one(); }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Multiplicative inverse, defined for monomials with unit coefficient fraction.
    LaurentPoly monomial_inverse() const {
        if (!is_monomial()) throw usage_error("monomial_inverse: not a monomial");
        const auto& [e, c] = *terms_.begin();
        return monomial(Rational(1) / c, -e.l, -e.m, -e.u);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.l + eb.l, ea.m + eb.m, ea.u + eb.u}, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Exact evaluation over Q.  A symbol appearing with a negative exponent
    /// must receive a nonzero value.
    Rational eval_q(const Rational& lv, const Rational& mv, const Rational& uv) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_)
            sum += c * pow_q(lv, e.l, "lambda") * pow_q(mv, e.m, "mu") * pow_q(uv, e.u, "U");
        return sum;
    }

    /// Evaluation in F_p; lambda, mu, U values must be units when inverted.
    std::int64_t eval_mod(std::int64_t lv, std::int64_t mv, std::int64_t uv,
                          std::int64_t p) const {
        std::int64_t sum = 0;
        for (const auto& [e, c] : terms_) {
            std::int64_t t = mod_of_rational(c, p);
            t = mod_mul(t, mod_pow(lv, e.l, p), p);
            t = mod_mul(t, mod_pow(mv, e.m, p), p);
            t = mod_mul(t, mod_pow(uv, e.u, p), p);
            sum = (sum + t) % p;
        }
        return sum;
    }

    /// Partial substitution mu = value (a nonzero rational when mu is inverted).
    LaurentPoly substitute_mu(const Rational& v) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term({e.l, 0, e.u}, c * pow_q(v, e.m, "mu"));
        return r;
    }
    /// Partial substitution U = value.
    LaurentPoly substitute_U(const Rational& v) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term({e.l, e.m, 0}, c * pow_q(v, e.u, "U"));
        return r;
    }

    bool involves_lambda() const {
        for (const auto& [e, c] : terms_)
            if (e.l != 0) return true;
        return false;
    }

    /// The unique rational value of a constant polynomial.
    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first == ExpTriple{})
            return terms_.begin()->second;
        return std::nullopt;
    }

    /// Canonical text, terms in ascending exponent order:
    /// "1 - mu + 2*lambda*mu^-1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::string syms = symbol_string(e);
            if (syms.empty()) {
                os << to_string(a);
            } else {
                if (a != 1) os << to_string(a) << "*";
                os << syms;
            }
        }
        return os.str();
    }

  private:
    std::map<ExpTriple, Rational> terms_;

    void add_term(const ExpTriple& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    static Rational pow_q(const Rational& v, std::int64_t e, const char* sym) {
        if (e == 0) return 1;
        if (v == 0) {
            if (e < 0) throw domain_error(std::string("evaluate: zero assigned to inverted symbol ") + sym);
            return 0;
        }
        Rational base = e > 0 ? v : Rational(1) / v;
        std::int64_t n = e > 0 ? e : -e;
        Rational r = 1;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    static std::string symbol_string(const ExpTriple& e) {
        std::ostringstream os;
        bool any = false;
        auto emit = [&](const char* name, std::int64_t exp) {
            if (exp == 0) return;
            if (any) os << "*";
            any = true;
            os << name;
            if (exp != 1) os << "^" << exp;
        };
        emit("lambda", e.l);
        emit("mu", e.m);
        emit("U", e.u);
        return os.str();
    }
};

} // namespace knotaug

#endif
