#ifndef KNOTAUG_BRAID_HPP
#define KNOTAUG_BRAID_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"
#include "knotaug/free_alg.hpp"

namespace knotaug {

/// Braid word on n strands: letter k > 0 is sigma_k, k < 0 is sigma_|k|^{-1}.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int writhe() const {
        int w = 0;
        for (int l : letters) w += l > 0 ? 1 : -1;
        return w;
    }

    /// Permutation induced on strands; perm[i-1] = image of strand i.
    std::vector<int> permutation() const {
        std::vector<int> p(static_cast<std::size_t>(strands));
        std::iota(p.begin(), p.end(), 1);
        for (int l : letters) {
            const int k = l > 0 ? l : -l;
            std::swap(p[k - 1], p[k]);
        }
        return p;
    }
};

inline BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw usage_error("parse_braid: strand count must be >= 1");
    BraidWord b;
    b.strands = strands;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw usage_error("parse_braid: bad letter '" + tok + "'");
        }
        if (v == 0 || v > strands - 1 || v < -(strands - 1))
            throw usage_error("parse_braid: letter " + tok + " out of range for " +
                              std::to_string(strands) + " strands");
        b.letters.push_back(v);
    }
    return b;
}

/// True iff the closure of b is a knot (strand permutation is one cycle).
inline bool closure_is_knot(const BraidWord& b) {
    const std::vector<int> p = b.permutation();
    int count = 0;
    int i = 1;
    do {
        i = p[static_cast<std::size_t>(i - 1)];
        ++count;
    } while (i != 1 && count <= b.strands);
    return count == b.strands;
}

/// The action phi_{sigma_k} (sign +1) or its two-sided inverse (sign -1) on
/// the free algebra of the given context.  For sign +1 this is the standard
/// seven-case table:
///
///   a_{i,j}   -> a_{i,j}                      i, j  not in {k, k+1}
///   a_{k+1,i} -> a_{k,i}
///   a_{i,k+1} -> a_{i,k}
///   a_{k,k+1} -> -a_{k+1,k}
///   a_{k+1,k} -> -a_{k,k+1}
///   a_{k,i}   -> a_{k+1,i} - a_{k+1,k} a_{k,i}
///   a_{i,k}   -> a_{i,k+1} - a_{i,k} a_{k,k+1}
///
/// The inverse table is solved from this one; tests pin it against the known
/// partial images and verify the two-sided composition to the identity.
inline Endomorphism phi_generator(int k, int sign, FreeContext ctx) {
    if (k < 1 || k > ctx.strands - 1)
        throw usage_error("phi_generator: index " + std::to_string(k) + " out of range");
    if (sign != 1 && sign != -1) throw usage_error("phi_generator: sign must be +-1");
    const int k1 = k + 1;
    auto gen = [&](int i, int j) { return FreeAlgElement::generator(ctx, i, j); };
    Endomorphism e(ctx);
    for (int i = 1; i <= ctx.max_index(); ++i) {
        for (int j = 1; j <= ctx.max_index(); ++j) {
            if (i == j) continue;
            const bool ik = i == k, ik1 = i == k1, jk = j == k, jk1 = j == k1;
            if (sign == 1) {
                if (!ik && !ik1 && !jk && !jk1) e.set(i, j, gen(i, j));
                else if (ik && jk1)             e.set(i, j, -gen(k1, k));
                else if (ik1 && jk)             e.set(i, j, -gen(k, k1));
                else if (ik1)                   e.set(i, j, gen(k, j));
                else if (jk1)                   e.set(i, j, gen(i, k));
                else if (ik)                    e.set(i, j, gen(k1, j) - gen(k1, k) * gen(k, j));
                else                            e.set(i, j, gen(i, k1) - gen(i, k) * gen(k, k1));
            } else {
                if (!ik && !ik1 && !jk && !jk1) e.set(i, j, gen(i, j));
                else if (ik && jk1)             e.set(i, j, -gen(k1, k));
                else if (ik1 && jk)             e.set(i, j, -gen(k, k1));
                else if (ik)                    e.set(i, j, gen(k1, j));
                else if (jk)                    e.set(i, j, gen(i, k1));
                else if (ik1)                   e.set(i, j, gen(k, j) - gen(k, k1) * gen(k1, j));
                else                            e.set(i, j, gen(i, k) - gen(i, k1) * gen(k1, k));
            }
        }
    }
    return e;
}

/// phi_B for a braid word, with phi_{B B'} = phi_B o phi_{B'}: the word
/// sigma_{i_1} ... sigma_{i_l} composes as phi_{sigma_{i_1}} o ... o
/// phi_{sigma_{i_l}}.  The context may add extra strands (and the star);
/// letters act trivially on the extra generators.
inline Endomorphism phi_braid(const BraidWord& b, FreeContext ctx) {
    if (ctx.strands < b.strands)
        throw usage_error("phi_braid: context smaller than the braid");
    Endomorphism e = Endomorphism::identity(ctx);
    for (int l : b.letters) e = compose(e, phi_generator(l > 0 ? l : -l, l > 0 ? 1 : -1, ctx));
    return e;
}

} // namespace knotaug

#endif
