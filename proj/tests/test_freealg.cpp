#include <catch_amalgamated.hpp>

#include <random>

#include "knotaug/braid.hpp"
#include "knotaug/free_alg.hpp"

using namespace knotaug;

namespace {

std::mt19937 rng(771255);

FreeAlgElement random_element(FreeContext ctx, int max_terms = 3, int max_len = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms), len(0, max_len),
        idx(1, ctx.max_index()), coeff(-3, 3);
    FreeAlgElement out = FreeAlgElement::zero(ctx);
    for (int t = 0, n = nterms(rng); t < n; ++t) {
        FreeAlgElement w = FreeAlgElement::scalar(ctx, LaurentPoly::constant(coeff(rng)));
        for (int k = 0, l = len(rng); k < l; ++k) {
            int i = idx(rng), j = idx(rng);
            if (i == j) j = j % ctx.max_index() + 1;
            if (i == j) continue;
            w *= FreeAlgElement::generator(ctx, i, j);
        }
        out += w;
    }
    return out;
}

} // namespace

TEST_CASE("free product is noncommutative with central unit") {
    const FreeContext ctx{2, false};
    const FreeAlgElement a12 = FreeAlgElement::generator(ctx, 1, 2);
    const FreeAlgElement a21 = FreeAlgElement::generator(ctx, 2, 1);
    CHECK(a12 * a21 != a21 * a12);
    CHECK(FreeAlgElement::unit(ctx) * a12 == a12);
    CHECK((a12 + FreeAlgElement::unit(ctx)) * (a12 - FreeAlgElement::unit(ctx)) ==
          a12 * a12 - FreeAlgElement::unit(ctx));
}

TEST_CASE("context mismatch raises") {
    const FreeAlgElement x = FreeAlgElement::generator({2, false}, 1, 2);
    const FreeAlgElement y = FreeAlgElement::generator({3, false}, 1, 2);
    CHECK_THROWS_AS(x * y, usage_error);
    CHECK_THROWS_AS(FreeAlgElement::generator({2, false}, 1, 1), usage_error);
    CHECK_THROWS_AS(FreeAlgElement::generator({2, false}, 0, 1), usage_error);
    CHECK_THROWS_AS(FreeAlgElement::generator({2, false}, 1, 3), usage_error);
}

TEST_CASE("associativity and unit laws on random triples") {
    const FreeContext ctx{3, false};
    for (int i = 0; i < 100; ++i) {
        const FreeAlgElement a = random_element(ctx), b = random_element(ctx),
                             c = random_element(ctx);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(FreeAlgElement::unit(ctx) * a == a);
        CHECK(a * FreeAlgElement::unit(ctx) == a);
    }
}

TEST_CASE("endomorphisms are multiplicative and compose") {
    const FreeContext ctx{3, false};
    const Endomorphism e = phi_generator(1, 1, ctx);
    const Endomorphism f = phi_generator(2, 1, ctx);
    for (int i = 0; i < 60; ++i) {
        const FreeAlgElement x = random_element(ctx), y = random_element(ctx);
        CHECK(e(x * y) == e(x) * e(y));
        CHECK(compose(e, f)(x) == e(f(x)));
    }
    const Endomorphism id = Endomorphism::identity(ctx);
    const FreeAlgElement x = random_element(ctx);
    CHECK(id(x) == x);
}

TEST_CASE("missing image raises") {
    const FreeContext ctx{2, false};
    Endomorphism partial(ctx);
    partial.set(1, 2, FreeAlgElement::generator(ctx, 2, 1));
    CHECK_THROWS_AS(partial(FreeAlgElement::generator(ctx, 2, 1)), usage_error);
}

TEST_CASE("phi on the two-strand table") {
    // a_{k,k+1} -> -a_{k+1,k} on A_2
    const FreeContext ctx{2, false};
    const Endomorphism e = phi_generator(1, 1, ctx);
    CHECK(e(FreeAlgElement::generator(ctx, 1, 2)) == -FreeAlgElement::generator(ctx, 2, 1));
    CHECK(e(FreeAlgElement::generator(ctx, 2, 1)) == -FreeAlgElement::generator(ctx, 1, 2));

    // a_{k,i} -> a_{k+1,i} - a_{k+1,k} a_{k,i} on A_3
    const FreeContext c3{3, false};
    const Endomorphism e3 = phi_generator(1, 1, c3);
    CHECK(e3(FreeAlgElement::generator(c3, 1, 3)) ==
          FreeAlgElement::generator(c3, 2, 3) -
              FreeAlgElement::generator(c3, 2, 1) * FreeAlgElement::generator(c3, 1, 3));
}

TEST_CASE("left star coefficients: examples and reassembly") {
    // phi_{sigma_{n+1}}(a_{n+2,*}) = a_{n+1,*} for n = 1: slot n+1 carries 1
    const FreeContext ctx{3, true};
    const Endomorphism e = phi_generator(2, 1, ctx);
    const FreeAlgElement img = e(FreeAlgElement::generator(ctx, 3, ctx.star_index()));
    const auto coeffs = left_star_coefficients(img);
    REQUIRE(coeffs.size() == 3);
    const FreeContext inner{3, false};
    CHECK(coeffs[0] == FreeAlgElement::zero(inner));
    CHECK(coeffs[1] == FreeAlgElement::unit(inner));
    CHECK(coeffs[2] == FreeAlgElement::zero(inner));

    // n = 1 identity: a_{1,*} -> (1)
    const FreeContext c1{1, true};
    const auto v = left_star_coefficients(FreeAlgElement::generator(c1, 1, 2));
    REQUIRE(v.size() == 1);
    CHECK(v[0] == FreeAlgElement::unit({1, false}));

    // reassembly reproduces the input exactly, on random star-shaped elements
    const FreeContext c3{3, true};
    const FreeContext i3{3, false};
    for (int trial = 0; trial < 50; ++trial) {
        FreeAlgElement x = FreeAlgElement::zero(c3);
        for (int j = 1; j <= 3; ++j)
            x += embed(random_element(i3), c3) *
                 FreeAlgElement::generator(c3, j, c3.star_index());
        const auto cs = left_star_coefficients(x);
        FreeAlgElement re = FreeAlgElement::zero(c3);
        for (int j = 1; j <= 3; ++j)
            re += embed(cs[j - 1], c3) * FreeAlgElement::generator(c3, j, c3.star_index());
        CHECK(re == x);
    }
}

TEST_CASE("left star coefficients reject malformed shapes") {
    const FreeContext ctx{2, true};
    const int s = ctx.star_index();
    // star in the middle
    const FreeAlgElement bad1 =
        FreeAlgElement::generator(ctx, 1, s) * FreeAlgElement::generator(ctx, 2, 1);
    CHECK_THROWS_AS(left_star_coefficients(bad1), structure_error);
    // a_{*,j} instead of a_{j,*}
    const FreeAlgElement bad2 = FreeAlgElement::generator(ctx, s, 1);
    CHECK_THROWS_AS(left_star_coefficients(bad2), structure_error);
    // unit term
    CHECK_THROWS_AS(left_star_coefficients(FreeAlgElement::unit(ctx)), structure_error);
    // two stars in a word
    const FreeAlgElement bad3 =
        FreeAlgElement::generator(ctx, 1, s) * FreeAlgElement::generator(ctx, 2, s);
    CHECK_THROWS_AS(left_star_coefficients(bad3), structure_error);
}

TEST_CASE("element text form") {
    const FreeContext ctx{2, true};
    const FreeAlgElement x =
        FreeAlgElement::generator(ctx, 1, 2) * FreeAlgElement::generator(ctx, 2, 1) -
        LaurentPoly::mu() * FreeAlgElement::generator(ctx, 1, ctx.star_index());
    CHECK(x.str() == "a[1,2] a[2,1] - mu*a[1,*]");
}
