#ifndef KNOTAUG_H0_HPP
#define KNOTAUG_H0_HPP

#include <string>
#include <utility>
#include <vector>

#include "knotaug/braid.hpp"
#include "knotaug/comm_poly.hpp"
#include "knotaug/errors.hpp"
#include "knotaug/free_alg.hpp"

namespace knotaug {

using FreeMatrix = std::vector<std::vector<FreeAlgElement>>;

/// A_{i,j}: a_{i,j} above the diagonal, 1-mu on it, -mu a_{i,j} below.
inline FreeMatrix build_A(int n) {
    const FreeContext ctx{n, false};
    FreeMatrix A(static_cast<std::size_t>(n),
                 std::vector<FreeAlgElement>(static_cast<std::size_t>(n), FreeAlgElement::zero(ctx)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto& e = A[i - 1][j - 1];
            if (i == j)
                e = FreeAlgElement::scalar(ctx, LaurentPoly::one() - LaurentPoly::mu());
            else if (i < j)
                e = FreeAlgElement::generator(ctx, i, j);
            else
                e = (-LaurentPoly::mu()) * FreeAlgElement::generator(ctx, i, j);
        }
    return A;
}

/// Ahat_{i,j}: U a_{i,j} above the diagonal, U-mu on it, -mu a_{i,j} below.
inline FreeMatrix build_Ahat(int n) {
    const FreeContext ctx{n, false};
    FreeMatrix A(static_cast<std::size_t>(n),
                 std::vector<FreeAlgElement>(static_cast<std::size_t>(n), FreeAlgElement::zero(ctx)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto& e = A[i - 1][j - 1];
            if (i == j)
                e = FreeAlgElement::scalar(ctx, LaurentPoly::U() - LaurentPoly::mu());
            else if (i < j)
                e = LaurentPoly::U() * FreeAlgElement::generator(ctx, i, j);
            else
                e = (-LaurentPoly::mu()) * FreeAlgElement::generator(ctx, i, j);
        }
    return A;
}

/// Lambda_{1,1} = lambda mu^w U^{-(w-n+1)/2}; the remaining diagonal entries
/// are 1.  Requires the closure to be a knot, which forces the exponent to be
/// integral.
inline LaurentPoly lambda_entry(const BraidWord& b) {
    if (!closure_is_knot(b))
        throw domain_error("Lambda exponent non-integral / multi-component closure");
    const int w = b.writhe();
    // knot closure forces w - n + 1 even; asserted rather than trusted
    if ((w - b.strands + 1) % 2 != 0)
        throw domain_error("Lambda exponent non-integral despite knot closure");
    return LaurentPoly::monomial(1, 1, w, -(static_cast<std::int64_t>(w) - b.strands + 1) / 2);
}

struct H0Matrices {
    FreeMatrix A;
    FreeMatrix Ahat;
    LaurentPoly lambda11;
};

inline H0Matrices build_matrices(const BraidWord& b) {
    return {build_A(b.strands), build_Ahat(b.strands), lambda_entry(b)};
}

/// PhiL: row i holds the left coefficients of phi_B(a_{i,*}) over the a_{j,*}.
/// A row failing the left-linear star shape raises structure_error.
inline FreeMatrix phiL_matrix(const BraidWord& b) {
    if (!closure_is_knot(b)) throw domain_error("phiL_matrix: closure is not a knot");
    const int n = b.strands;
    const FreeContext star_ctx{n, true};
    const Endomorphism phi = phi_braid(b, star_ctx);
    FreeMatrix rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const FreeAlgElement img = phi(FreeAlgElement::generator(star_ctx, i, star_ctx.star_index()));
        rows.push_back(left_star_coefficients(img));
    }
    return rows;
}

/// The two matrices of ideal generators:
///   A - Lambda phi_B(A) Lambda^{-1}   and   Ahat - Lambda PhiL A.
inline std::pair<FreeMatrix, FreeMatrix> h0_generators(const BraidWord& b) {
    const int n = b.strands;
    const H0Matrices mats = build_matrices(b);
    const LaurentPoly lam = mats.lambda11;
    const LaurentPoly lam_inv = lam.monomial_inverse();
    const FreeContext ctx{n, false};
    const Endomorphism phi = phi_braid(b, ctx);
    const FreeMatrix phiL = phiL_matrix(b);

    FreeMatrix first(static_cast<std::size_t>(n),
                     std::vector<FreeAlgElement>(static_cast<std::size_t>(n), FreeAlgElement::zero(ctx)));
    FreeMatrix second = first;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            FreeAlgElement t = phi(mats.A[i][j]);
            if (i == 0) t = lam * t;
            if (j == 0) t = lam_inv * t;
            first[i][j] = mats.A[i][j] - t;

            FreeAlgElement s = FreeAlgElement::zero(ctx);
            for (int k = 0; k < n; ++k) s += phiL[i][k] * mats.A[k][j];
            if (i == 0) s = lam * s;
            second[i][j] = mats.Ahat[i][j] - s;
        }
    }
    return {std::move(first), std::move(second)};
}

/// Polynomial ring R[a_{i,j} | 1 <= i,j <= n, i != j], variables ordered (i,j).
inline CommRingPtr h0_ring(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) names.push_back("a[" + std::to_string(i) + "," + std::to_string(j) + "]");
    return make_ring(std::move(names));
}

/// The abelianization map pi_n into the commutative polynomial ring.
inline CommPoly abelianize(const FreeAlgElement& x, const CommRingPtr& ring) {
    const FreeContext& ctx = x.context();
    CommPoly out(ring);
    for (const auto& [w, c] : x.terms()) {
        CommPoly::Monomial mono(ring->size(), 0);
        for (Gen g : w) {
            const int i = gen_first(g), j = gen_second(g);
            if (ctx.star && (i == ctx.star_index() || j == ctx.star_index()))
                throw usage_error("abelianize: starred generator present");
            mono[ring->index_of("a[" + std::to_string(i) + "," + std::to_string(j) + "]")] += 1;
        }
        out += CommPoly::term(ring, std::move(mono), c);
    }
    return out;
}

/// Presentation of HC_0^ab: matrices retained for audit, generators = nonzero
/// abelianized entries of both generator matrices.
struct H0Presentation {
    BraidWord braid;
    H0Matrices matrices;
    FreeMatrix phiL;
    FreeMatrix gens_first;
    FreeMatrix gens_second;
    CommRingPtr ring;
    std::vector<CommPoly> generators;
};

inline H0Presentation presentation(const BraidWord& b) {
    H0Presentation p{b, build_matrices(b), phiL_matrix(b), {}, {}, h0_ring(b.strands), {}};
    auto [first, second] = h0_generators(b);
    p.gens_first = std::move(first);
    p.gens_second = std::move(second);
    for (const FreeMatrix* m : {&p.gens_first, &p.gens_second})
        for (const auto& row : *m)
            for (const auto& e : row) {
                CommPoly g = abelianize(e, p.ring);
                if (!g.is_zero()) p.generators.push_back(std::move(g));
            }
    return p;
}

} // namespace knotaug

#endif
