#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hameig/constructions.hpp"
#include "hameig/operators.hpp"
#include "hameig/reduction.hpp"

using namespace hameig;

TEST_CASE("dual layer on H(2,3): frozen values, support, eigencheck") {
    const GraphParams params(2, 3);
    const VertexFunction f = construct_dual_layer(params, 1, 0, 2, 0, Rational(1));
    const std::vector<int> expected = {0, -1, -1, 1, 0, 0, 1, 0, 0};
    REQUIRE(f.size() == 9);
    for (std::int64_t x = 0; x < 9; ++x) {
        CHECK(f[x] == Rational(expected[static_cast<std::size_t>(x)]));
    }
    CHECK(support_size(f) == 4);
    CHECK(is_eigenfunction(f, 1));

    // H(3,3): support 2(q-1)q^(n-2) = 12 for any valid parameters.
    CHECK(support_size(construct_dual_layer(GraphParams(3, 3), 2, 1, 3, 2,
                                            parse_rational("3/2"))) == 12);
}

TEST_CASE("dual layer rejects bad parameters") {
    const GraphParams params(2, 3);
    CHECK_THROWS_AS(construct_dual_layer(params, 1, 0, 1, 1, Rational(1)),
                    std::invalid_argument);  // i == j
    CHECK_THROWS_AS(construct_dual_layer(params, 1, 0, 2, 0, Rational(0)),
                    std::invalid_argument);  // c == 0
    CHECK_THROWS_AS(construct_dual_layer(params, 0, 0, 2, 0, Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_dual_layer(params, 1, 3, 2, 0, Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_dual_layer(GraphParams(1, 3), 1, 0, 1, 1, Rational(1)),
                    std::invalid_argument);  // n < 2
}

TEST_CASE("single layer: support, additivity, and the negative control") {
    const GraphParams params(2, 3);
    const VertexFunction f = construct_single_layer(params, 1, 0, Rational(1));
    CHECK(support_size(f) == 3);  // q^(n-1)
    CHECK(is_additive(f));
    // Additive but NOT a lambda_1 eigenfunction: on a support vertex, Af
    // sums (n-1)(q-1) neighbors inside the layer, and 2 != 1 * 1.
    CHECK_FALSE(is_eigenfunction(f, 1));

    CHECK_THROWS_AS(construct_single_layer(params, 1, 0, Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_single_layer(params, 3, 0, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("classification recovers constructor parameters on known forms") {
    CHECK(classify_additive(VertexFunction(GraphParams(2, 3))) ==
          CanonicalForm{CanonicalForm::Tag::Zero, 0, 0, 0, 0, Rational(0)});

    const CanonicalForm single =
        classify_additive(construct_single_layer(GraphParams(3, 3), 2, 1, Rational(5)));
    CHECK(single ==
          CanonicalForm{CanonicalForm::Tag::SingleLayer, 2, 1, 0, 0, Rational(5)});

    const CanonicalForm dual = classify_additive(
        construct_dual_layer(GraphParams(2, 3), 1, 0, 2, 0, Rational(1)));
    CHECK(dual ==
          CanonicalForm{CanonicalForm::Tag::DualLayer, 1, 0, 2, 0, Rational(1)});
}

TEST_CASE("classification round-trips every form over n in {2,3}, q in {3,4,5}") {
    const std::vector<Rational> cs = {Rational(1), Rational(-1), parse_rational("3/2")};
    for (int n = 2; n <= 3; ++n) {
        for (int q = 3; q <= 5; ++q) {
            const GraphParams params(n, q);
            for (int i = 1; i <= n; ++i) {
                for (int k = 0; k < q; ++k) {
                    for (const Rational& c : cs) {
                        const CanonicalForm got = classify_additive(
                            construct_single_layer(params, i, k, c));
                        CHECK(got == CanonicalForm{CanonicalForm::Tag::SingleLayer,
                                                   i, k, 0, 0, c});
                    }
                    for (int j = 1; j <= n; ++j) {
                        if (j == i) {
                            continue;
                        }
                        for (int m = 0; m < q; ++m) {
                            const Rational c = cs[static_cast<std::size_t>(
                                (i + j + k + m) % cs.size())];
                            const CanonicalForm got = classify_additive(
                                construct_dual_layer(params, i, k, j, m, c));
                            // Canonical representative: i < j, with the sign
                            // of c flipped when the input order was swapped.
                            const CanonicalForm want =
                                i < j ? CanonicalForm{CanonicalForm::Tag::DualLayer,
                                                      i, k, j, m, c}
                                      : CanonicalForm{CanonicalForm::Tag::DualLayer,
                                                      j, m, i, k, -c};
                            CHECK(got == want);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("classification is scaling covariant") {
    const GraphParams params(3, 4);
    const VertexFunction dual = construct_dual_layer(params, 1, 2, 3, 0, Rational(2));
    for (const Rational& alpha :
         {parse_rational("1/2"), Rational(-1), Rational(3)}) {
        const CanonicalForm form = classify_additive(alpha * dual);
        CHECK(form.tag == CanonicalForm::Tag::DualLayer);
        CHECK(form.i == 1);
        CHECK(form.k == 2);
        CHECK(form.j == 3);
        CHECK(form.m == 0);
        const Rational scaled = alpha * Rational(2);
        CHECK(form.c == scaled);
    }
}

TEST_CASE("classify_additive enforces its preconditions") {
    // q = 2 and n = 1 are outside the trichotomy.
    CHECK_THROWS_AS(classify_additive(VertexFunction(GraphParams(2, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_additive(VertexFunction(GraphParams(1, 3))),
                    std::invalid_argument);
    // Support above 2(q-1)q^(n-2) is outside the trichotomy's hypothesis.
    std::vector<Rational> ones(9, Rational(1));
    CHECK_THROWS_AS(classify_additive(VertexFunction(GraphParams(2, 3), ones)),
                    std::invalid_argument);
    // Non-additive input raises the witness error.
    VertexFunction spike(GraphParams(2, 3));
    spike[0] = Rational(1);
    CHECK_THROWS_AS(classify_additive(spike), NotAdditiveError);
}

TEST_CASE("neighbor counts inside the dual layer's parts") {
    for (const auto& [n, q] : {std::pair{2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
        const GraphParams params(n, q);
        const int i = 1, k = 0, j = n, m = q - 1;
        const VertexFunction f =
            construct_dual_layer(params, i, k, j, m, Rational(1));
        for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
            const Word word = decode_vertex(x, params);
            int in_plus = 0;   // neighbors with f = +1
            int in_minus = 0;  // neighbors with f = -1
            for (const Word& y : neighbors(word, params)) {
                const Rational& v = f[encode_vertex(y, params)];
                if (v == Rational(1)) {
                    ++in_plus;
                } else if (v == Rational(-1)) {
                    ++in_minus;
                }
            }
            if (f[x] == Rational(1)) {
                // (n-1)(q-1) - 1 neighbors in its own part, none opposite.
                CHECK(in_plus == (n - 1) * (q - 1) - 1);
                CHECK(in_minus == 0);
            } else if (f[x] == Rational(-1)) {
                CHECK(in_minus == (n - 1) * (q - 1) - 1);
                CHECK(in_plus == 0);
            } else if (in_layer(word, i, k, params) && in_layer(word, j, m, params)) {
                // Zero vertices in the layers' intersection see q-1 on each side.
                CHECK(in_plus == q - 1);
                CHECK(in_minus == q - 1);
            } else {
                // Zero vertices outside both layers see exactly one on each side.
                CHECK(in_plus == 1);
                CHECK(in_minus == 1);
            }
        }
    }
}

TEST_CASE("dual layers at q = 2 keep the support formula and eigen property") {
    for (int n = 2; n <= 4; ++n) {
        const GraphParams params(n, 2);
        const VertexFunction f = construct_dual_layer(params, 1, 0, 2, 1, Rational(1));
        CHECK(is_eigenfunction(f, eigenvalue(1, params)));
        CHECK(support_size(f) == 2 * params.pow(n - 2));
    }
}
