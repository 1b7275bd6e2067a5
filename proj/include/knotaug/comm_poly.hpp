#ifndef KNOTAUG_COMM_POLY_HPP
#define KNOTAUG_COMM_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"
#include "knotaug/laurent.hpp"

namespace knotaug {

/// A fixed, ordered variable list shared by all elements of one polynomial
/// ring instance R[x_1, ..., x_k] over the Laurent ring R.
class CommRing {
  public:
    explicit CommRing(std::vector<std::string> names) : names_(std::move(names)) {}
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index_of(const std::string& n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) throw usage_error("CommRing: unknown variable " + n);
        return static_cast<std::size_t>(it - names_.begin());
    }

  private:
    std::vector<std::string> names_;
};

using CommRingPtr = std::shared_ptr<const CommRing>;

inline CommRingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const CommRing>(std::move(names));
}

/// Sparse commutative polynomial with LaurentPoly coefficients; exponent
/// vectors are nonnegative and indexed by the ring's variable list.
class CommPoly {
  public:
    using Monomial = std::vector<std::uint32_t>;

    explicit CommPoly(CommRingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw usage_error("CommPoly: null ring");
    }

    static CommPoly constant(CommRingPtr ring, LaurentPoly c) {
        CommPoly r(std::move(ring));
        if (!c.is_zero()) r.terms_.emplace(Monomial(r.ring_->size(), 0), std::move(c));
        return r;
    }
    static CommPoly variable(CommRingPtr ring, std::size_t index, std::uint32_t power = 1) {
        CommPoly r(std::move(ring));
        if (index >= r.ring_->size()) throw usage_error("CommPoly: variable index out of range");
        Monomial m(r.ring_->size(), 0);
        m[index] = power;
        r.terms_.emplace(std::move(m), LaurentPoly::one());
        return r;
    }
    static CommPoly variable(const CommRingPtr& ring, const std::string& name) {
        return variable(ring, ring->index_of(name));
    }
    static CommPoly term(CommRingPtr ring, Monomial m, LaurentPoly c) {
        CommPoly r(std::move(ring));
        if (m.size() != r.ring_->size()) throw usage_error("CommPoly::term: bad monomial size");
        if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
        return r;
    }

    const CommRingPtr& ring() const { return ring_; }
    const std::map<Monomial, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CommPoly& operator+=(const CommPoly& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    CommPoly operator-() const {
        CommPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        a.require_same_ring(b);
        CommPoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }

    friend CommPoly operator*(const LaurentPoly& c, const CommPoly& p) {
        CommPoly r(p.ring_);
        for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
        return r;
    }

    /// Equality is structural; both operands must share the ring instance.
    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        a.require_same_ring(b);
        return a.terms_ == b.terms_;
    }

    LaurentPoly coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LaurentPoly::zero() : it->second;
    }

    /// Coefficient of x_index^power with all other variables at exponent 0.
    LaurentPoly univariate_coefficient(std::size_t index, std::uint32_t power) const {
        Monomial m(ring_->size(), 0);
        m[index] = power;
        return coefficient(m);
    }

    std::uint32_t degree_in(std::size_t index) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
        return d;
    }

    /// Substitute one variable by a polynomial of the same ring.
    CommPoly substitute(std::size_t index, const CommPoly& value) const {
        value.require_same_ring(*this);
        CommPoly r(ring_);
        for (const auto& [m, c] : terms_) {
            CommPoly t = CommPoly::constant(ring_, c);
            Monomial rest = m;
            const std::uint32_t e = rest[index];
            rest[index] = 0;
            CommPoly mono(ring_);
            mono.terms_.emplace(std::move(rest), LaurentPoly::one());
            t *= mono;
            for (std::uint32_t i = 0; i < e; ++i) t *= value;
            r += t;
        }
        return r;
    }

    /// Substitute a variable by a Laurent-ring value.
    CommPoly substitute_scalar(std::size_t index, const LaurentPoly& value) const {
        return substitute(index, CommPoly::constant(ring_, value));
    }

    /// Apply a Laurent-coefficient map (e.g. U = 1) to every coefficient.
    template <typename Fn>
    CommPoly map_coefficients(Fn&& fn) const {
        CommPoly r(ring_);
        for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
        return r;
    }

    /// Exact evaluation over Q at unit values plus variable values.
    Rational eval_q(const Rational& lv, const Rational& mv, const Rational& uv,
                    const std::vector<Rational>& vars) const {
        if (vars.size() != ring_->size()) throw usage_error("eval_q: wrong assignment size");
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c.eval_q(lv, mv, uv);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::uint32_t k = 0; k < m[i]; ++k) t *= vars[i];
            sum += t;
        }
        return sum;
    }

    std::int64_t eval_mod(std::int64_t lv, std::int64_t mv, std::int64_t uv,
                          const std::vector<std::int64_t>& vars, std::int64_t p) const {
        if (vars.size() != ring_->size()) throw usage_error("eval_mod: wrong assignment size");
        std::int64_t sum = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t t = c.eval_mod(lv, mv, uv, p);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t = mod_mul(t, mod_pow(vars[i], m[i], p), p);
            sum = (sum + t) % p;
        }
        return sum;
    }

    /// Canonical text, terms in descending exponent order, multi-term Laurent
    /// coefficients parenthesized: "-mu*T^2 + (-U + 3*mu - mu^2)*T + ...".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const std::string vs = monomial_string(m);
            const bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
            const LaurentPoly abs_c = negative ? -c : c;
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (vs.empty()) {
                os << (abs_c.terms().size() > 1 ? "(" + abs_c.str() + ")" : abs_c.str());
            } else if (abs_c.is_one()) {
                os << vs;
            } else if (abs_c.terms().size() > 1) {
                os << "(" << abs_c.str() << ")*" << vs;
            } else {
                os << abs_c.str() << "*" << vs;
            }
        }
        return os.str();
    }

  private:
    CommRingPtr ring_;
    std::map<Monomial, LaurentPoly> terms_;

    void require_same_ring(const CommPoly& o) const {
        if (ring_ != o.ring_ && ring_->names() != o.ring_->names())
            throw usage_error("CommPoly: mismatched ring instances");
    }

    void add_term(const Monomial& m, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string monomial_string(const Monomial& m) const {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (any) os << "*";
            any = true;
            os << ring_->name(i);
            if (m[i] != 1) os << "^" << m[i];
        }
        return os.str();
    }
};

} // namespace knotaug

#endif
