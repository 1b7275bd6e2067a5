#ifndef KNOTAUG_FREE_ALG_HPP
#define KNOTAUG_FREE_ALG_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"
#include "knotaug/laurent.hpp"

namespace knotaug {

/// Index context for the free algebra A_n: generators a_{i,j} with
/// 1 <= i, j <= strands (+ the starred strand, labelled strands+1, when
/// present), i != j.
struct FreeContext {
    int strands = 1;
    bool star = false;

    int star_index() const { return strands + 1; }
    int max_index() const { return star ? strands + 1 : strands; }
    friend bool operator==(const FreeContext&, const FreeContext&) = default;
};

/// A generator a_{i,j}, packed for compact word storage.
using Gen = char16_t;

inline Gen make_gen(int i, int j) { return static_cast<Gen>((i << 7) | j); }
inline int gen_first(Gen g) { return static_cast<int>(g) >> 7; }
inline int gen_second(Gen g) { return static_cast<int>(g) & 0x7f; }

/// Word in the generators; empty word = unit.  The packed representation
/// makes equality, hashing and lexicographic order cheap even when phi images
/// blow up (practical limit for full PhiL extraction is around 12-14
/// crossings).
using Word = std::u16string;

inline std::string gen_str(Gen g, const FreeContext& ctx) {
    std::ostringstream os;
    const int i = gen_first(g), j = gen_second(g);
    os << "a[" << (ctx.star && i == ctx.star_index() ? std::string("*") : std::to_string(i)) << ","
       << (ctx.star && j == ctx.star_index() ? std::string("*") : std::to_string(j)) << "]";
    return os.str();
}

/// Element of the free noncommutative unital algebra over the Laurent ring.
class FreeAlgElement {
  public:
    explicit FreeAlgElement(FreeContext ctx) : ctx_(ctx) {}

    static FreeAlgElement zero(FreeContext ctx) { return FreeAlgElement(ctx); }
    static FreeAlgElement unit(FreeContext ctx) { return scalar(ctx, LaurentPoly::one()); }
    static FreeAlgElement scalar(FreeContext ctx, LaurentPoly c) {
        FreeAlgElement r(ctx);
        if (!c.is_zero()) r.terms_.emplace(Word(), std::move(c));
        return r;
    }
    static FreeAlgElement generator(FreeContext ctx, int i, int j) {
        validate_gen(ctx, i, j);
        FreeAlgElement r(ctx);
        r.terms_.emplace(Word(1, make_gen(i, j)), LaurentPoly::one());
        return r;
    }

    const FreeContext& context() const { return ctx_; }
    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeAlgElement& operator+=(const FreeAlgElement& o) {
        require_same_context(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    FreeAlgElement& operator-=(const FreeAlgElement& o) {
        require_same_context(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend FreeAlgElement operator+(FreeAlgElement a, const FreeAlgElement& b) { return a += b; }
    friend FreeAlgElement operator-(FreeAlgElement a, const FreeAlgElement& b) { return a -= b; }
    FreeAlgElement operator-() const {
        FreeAlgElement r(ctx_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    /// Noncommutative product: word concatenation, bilinear extension.
    friend FreeAlgElement operator*(const FreeAlgElement& a, const FreeAlgElement& b) {
        a.require_same_context(b);
        FreeAlgElement r(a.ctx_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    FreeAlgElement& operator*=(const FreeAlgElement& o) { return *this = *this * o; }

    friend FreeAlgElement operator*(const LaurentPoly& c, const FreeAlgElement& x) {
        FreeAlgElement r(x.ctx_);
        for (const auto& [w, xc] : x.terms_) r.add_term(w, c * xc);
        return r;
    }

    friend bool operator==(const FreeAlgElement& a, const FreeAlgElement& b) {
        a.require_same_context(b);
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            std::string ws;
            for (Gen g : w) {
                if (!ws.empty()) ws += " ";
                ws += gen_str(g, ctx_);
            }
            // pull the sign out of single-monomial coefficients
            const bool negative = c.terms().size() == 1 && c.terms().begin()->second < 0;
            const LaurentPoly abs_c = negative ? -c : c;
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (ws.empty()) {
                os << (abs_c.terms().size() > 1 ? "(" + abs_c.str() + ")" : abs_c.str());
            } else if (abs_c.is_one()) {
                os << ws;
            } else if (abs_c.terms().size() > 1) {
                os << "(" << abs_c.str() << ")*" << ws;
            } else {
                os << abs_c.str() << "*" << ws;
            }
        }
        return os.str();
    }

    static void validate_gen(const FreeContext& ctx, int i, int j) {
        if (i == j || i < 1 || j < 1 || i > ctx.max_index() || j > ctx.max_index())
            throw usage_error("invalid generator a[" + std::to_string(i) + "," +
                              std::to_string(j) + "] for context");
    }

  private:
    FreeContext ctx_;
    std::map<Word, LaurentPoly> terms_;

    void require_same_context(const FreeAlgElement& o) const {
        if (!(ctx_ == o.ctx_)) throw usage_error("FreeAlgElement: context mismatch");
    }
    void add_term(const Word& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

/// Endomorphism of the free algebra, given by generator images and extended
/// multiplicatively.
class Endomorphism {
  public:
    explicit Endomorphism(FreeContext ctx) : ctx_(ctx) {}

    static Endomorphism identity(FreeContext ctx) {
        Endomorphism e(ctx);
        for (int i = 1; i <= ctx.max_index(); ++i)
            for (int j = 1; j <= ctx.max_index(); ++j)
                if (i != j) e.set(i, j, FreeAlgElement::generator(ctx, i, j));
        return e;
    }

    const FreeContext& context() const { return ctx_; }

    void set(int i, int j, FreeAlgElement image) {
        FreeAlgElement::validate_gen(ctx_, i, j);
        if (!(image.context() == ctx_)) throw usage_error("Endomorphism: image context mismatch");
        images_.insert_or_assign(make_gen(i, j), std::move(image));
    }

    const FreeAlgElement& image(int i, int j) const {
        auto it = images_.find(make_gen(i, j));
        if (it == images_.end())
            throw usage_error("Endomorphism: no image for a[" + std::to_string(i) + "," +
                              std::to_string(j) + "]");
        return it->second;
    }

    FreeAlgElement operator()(const FreeAlgElement& x) const {
        if (!(x.context() == ctx_)) throw usage_error("apply_endo: context mismatch");
        FreeAlgElement out(ctx_);
        for (const auto& [w, c] : x.terms()) {
            FreeAlgElement t = FreeAlgElement::scalar(ctx_, c);
            for (Gen g : w) {
                auto it = images_.find(g);
                if (it == images_.end())
                    throw usage_error("apply_endo: missing image for " + gen_str(g, ctx_));
                t *= it->second;
            }
            out += t;
        }
        return out;
    }

    /// outer o inner.
    friend Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
        if (!(outer.ctx_ == inner.ctx_)) throw usage_error("compose: context mismatch");
        Endomorphism e(outer.ctx_);
        for (const auto& [g, img] : inner.images_) e.images_.emplace(g, outer(img));
        return e;
    }

  private:
    FreeContext ctx_;
    std::map<Gen, FreeAlgElement> images_;
};

/// Decompose x = sum_j c_j * a_{j,*} where every word of x carries exactly
/// one starred generator a_{j,*} in the rightmost slot.  Returns the c_j for
/// j = 1..strands; any other shape raises structure_error (this is the
/// left-linearity hypothesis behind the PhiL matrix).
inline std::vector<FreeAlgElement> left_star_coefficients(const FreeAlgElement& x) {
    const FreeContext& ctx = x.context();
    if (!ctx.star) throw usage_error("left_star_coefficients: context has no star strand");
    const int star = ctx.star_index();
    const FreeContext inner{ctx.strands, false};
    std::vector<FreeAlgElement> out(static_cast<std::size_t>(ctx.strands),
                                    FreeAlgElement::zero(inner));
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) throw structure_error("left_star_coefficients: unit word has no star");
        const Gen last = w.back();
        const int j = gen_first(last);
        if (gen_second(last) != star || j == star)
            throw structure_error("left_star_coefficients: word does not end in a[j,*]");
        Word head = w.substr(0, w.size() - 1);
        for (Gen g : head)
            if (gen_first(g) == star || gen_second(g) == star)
                throw structure_error("left_star_coefficients: starred generator not rightmost");
        FreeAlgElement word_elem = FreeAlgElement::unit(inner);
        for (Gen g : head)
            word_elem *= FreeAlgElement::generator(inner, gen_first(g), gen_second(g));
        out[static_cast<std::size_t>(j - 1)] += FreeAlgElement::scalar(inner, c) * word_elem;
    }
    return out;
}

/// Re-embed an element of A_n into a larger context (extra strands or star).
inline FreeAlgElement embed(const FreeAlgElement& x, FreeContext target) {
    if (x.context().max_index() > target.max_index())
        throw usage_error("embed: target context too small");
    FreeAlgElement out(target);
    for (const auto& [w, c] : x.terms()) {
        FreeAlgElement t = FreeAlgElement::scalar(target, c);
        for (Gen g : w)
            t *= FreeAlgElement::generator(target, gen_first(g), gen_second(g));
        out += t;
    }
    return out;
}

} // namespace knotaug

#endif
