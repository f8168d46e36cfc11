#include <gtest/gtest.h>

#include <array>

#include "support.hpp"

using namespace pcdual;
using pcdual::testing::P;

namespace {

TEST(Elimination, BinaryFormOfConicPartials) {
    // c1, c2, c3 played by eta, xi, psi
    const auto g = P("eta*x1^2 + 2*xi*x1*x2 + psi*x2^2");
    const BinaryForm d1 = as_binary_form(partial_derivative(g, Var::x1));
    ASSERT_EQ(d1.degree(), 1u);
    EXPECT_EQ(d1.coeffs[0], P("2*xi"));
    EXPECT_EQ(d1.coeffs[1], P("2*eta"));

    const BinaryForm mixed = as_binary_form(P("x1*x2"));
    ASSERT_EQ(mixed.degree(), 2u);
    EXPECT_TRUE(mixed.coeffs[0].is_zero());
    EXPECT_EQ(mixed.coeffs[1], Polynomial(1));
    EXPECT_TRUE(mixed.coeffs[2].is_zero());
}

TEST(Elimination, BinaryFormErrors) {
    EXPECT_THROW(as_binary_form(Polynomial()), InvalidArgument);
    EXPECT_THROW(as_binary_form(P("x1^2 + x2")), InvalidArgument);
    EXPECT_THROW(as_binary_form(P("x1*x3")), InvalidArgument);
    EXPECT_THROW(as_binary_form(P("x1*y")), InvalidArgument);
}

TEST(Elimination, SylvesterConic) {
    const auto g = P("eta*x1^2 + 2*xi*x1*x2 + psi*x2^2");
    const PolyMatrix s =
        sylvester_matrix(as_binary_form(partial_derivative(g, Var::x1)), as_binary_form(partial_derivative(g, Var::x2)));
    const PolyMatrix expected{{P("2*eta"), P("2*xi")}, {P("2*xi"), P("2*psi")}};
    EXPECT_EQ(s, expected);
    EXPECT_EQ(determinant(s), P("4*eta*psi - 4*xi^2"));
}

TEST(Elimination, SylvesterCubicRowPattern) {
    // c1 x1^3 + c2 x1^2 x2 + c3 x1 x2^2 + c4 x2^3 with c4 = eta*xi
    const auto g = P("eta*x1^3 + xi*x1^2*x2 + psi*x1*x2^2 + eta*xi*x2^3");
    const PolyMatrix s =
        sylvester_matrix(as_binary_form(partial_derivative(g, Var::x1)), as_binary_form(partial_derivative(g, Var::x2)));
    ASSERT_EQ(s.size(), 4u);
    const Polynomial zero;
    const std::array<Polynomial, 4> row0{P("3*eta"), P("2*xi"), P("psi"), zero};
    const std::array<Polynomial, 4> row1{zero, P("3*eta"), P("2*xi"), P("psi")};
    const std::array<Polynomial, 4> row2{P("xi"), P("2*psi"), P("3*eta*xi"), zero};
    const std::array<Polynomial, 4> row3{zero, P("xi"), P("2*psi"), P("3*eta*xi")};
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(s(0, j), row0[j]);
        EXPECT_EQ(s(1, j), row1[j]);
        EXPECT_EQ(s(2, j), row2[j]);
        EXPECT_EQ(s(3, j), row3[j]);
    }
}

TEST(Elimination, SylvesterOfCoordinateFormsIsIdentity) {
    const PolyMatrix s = sylvester_matrix(as_binary_form(P("x1")), as_binary_form(P("x2")));
    EXPECT_EQ(s, (PolyMatrix{{Polynomial(1), Polynomial()}, {Polynomial(), Polynomial(1)}}));
    EXPECT_THROW(sylvester_matrix(as_binary_form(P("eta")), as_binary_form(P("x1"))), InvalidArgument);
}

TEST(Elimination, DeterminantExamples) {
    EXPECT_EQ(determinant(PolyMatrix{{P("2"), P("3")}, {P("4"), P("5")}}), Polynomial(-2));
    const PolyMatrix m3{{P("1"), P("2"), P("3")}, {P("0"), P("1"), P("4")}, {P("5"), P("6"), P("0")}};
    EXPECT_EQ(determinant_cofactor(m3), Polynomial(1));
    EXPECT_EQ(determinant_bareiss(m3), Polynomial(1));
    // zero leading pivot forces a row swap
    const PolyMatrix swap{{P("0"), P("eta")}, {P("xi"), P("psi")}};
    EXPECT_EQ(determinant_bareiss(swap), P("-eta*xi"));
    const PolyMatrix singular{{P("eta"), P("xi")}, {P("2*eta"), P("2*xi")}};
    EXPECT_TRUE(determinant_bareiss(singular).is_zero());
    EXPECT_EQ(determinant(PolyMatrix(0)), Polynomial(1));
}

TEST(Elimination, ResultantExamples) {
    EXPECT_EQ(resultant(as_binary_form(P("x1")), as_binary_form(P("x2"))), Polynomial(1));
    EXPECT_TRUE(resultant(as_binary_form(P("(x1 - x2)*(x1 + 2*x2)")), as_binary_form(P("(x1 - x2)*x2"))).is_zero());
}

TEST(Elimination, ConicTangentResultant) {
    // homogenized, substituted conic with A1..A6 = 1, 1, -1, 0, 0, 0 (unit circle)
    const auto F = homogenize(P("x1^2 + x2^2 - 1"), Var::x3);
    const auto G = substitute(F, {{Var::x1, P("psi*x1")}, {Var::x2, P("psi*x2")}, {Var::x3, P("-eta*x1 - xi*x2")}});
    const auto r =
        resultant(as_binary_form(partial_derivative(G, Var::x1)), as_binary_form(partial_derivative(G, Var::x2)));
    // 2x2 determinant worked by hand: 4 psi^2 (psi^2 - eta^2 - xi^2)
    EXPECT_EQ(r, P("4*psi^4 - 4*psi^2*eta^2 - 4*psi^2*xi^2"));
}

// Products of random linear forms: the oracle is multiplicativity alone.

TEST(EliminationProperty, ResultantMatchesLinearFactorOracle) {
    pcdual::testing::Rng rng(31);
    int zero = 0, nonzero = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> deg(1, 4);
        const auto f = pcdual::testing::random_factors(rng, deg(rng));
        const auto g = pcdual::testing::random_factors(rng, deg(rng));
        const Integer expected = pcdual::testing::product_resultant(f, g);
        const Polynomial r =
            resultant(as_binary_form(pcdual::testing::product(f)), as_binary_form(pcdual::testing::product(g)));
        ASSERT_EQ(r, Polynomial(Rational(expected)));
        bool common = false;
        for (const auto& l : f)
            for (const auto& m : g) common = common || pcdual::testing::share_root(l, m);
        ASSERT_EQ(r.is_zero(), common);
        (common ? zero : nonzero)++;
    }
    EXPECT_GT(zero, 0);
    EXPECT_GT(nonzero, 0);
}

TEST(EliminationProperty, CommonFactorGivesZero) {
    pcdual::testing::Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const auto shared = pcdual::testing::random_factors(rng, 1);
        auto f = pcdual::testing::random_factors(rng, 2);
        auto g = pcdual::testing::random_factors(rng, 1);
        f.push_back(shared[0]);
        g.push_back(shared[0]);
        ASSERT_TRUE(
            resultant(as_binary_form(pcdual::testing::product(f)), as_binary_form(pcdual::testing::product(g))).is_zero());
    }
}

TEST(EliminationProperty, Multiplicativity) {
    pcdual::testing::Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = pcdual::testing::random_factors(rng, 2);
        const auto g = pcdual::testing::random_factors(rng, 2);
        const auto h = pcdual::testing::random_factors(rng, 1);
        const auto F = as_binary_form(pcdual::testing::product(f));
        auto gh = g;
        gh.insert(gh.end(), h.begin(), h.end());
        ASSERT_EQ(resultant(F, as_binary_form(pcdual::testing::product(gh))),
                  resultant(F, as_binary_form(pcdual::testing::product(g))) *
                      resultant(F, as_binary_form(pcdual::testing::product(h))));
    }
}

TEST(EliminationProperty, BareissAgreesWithCofactor) {
    pcdual::testing::Rng rng(43);
    constexpr std::array<Var, 3> dirs{Var::eta, Var::xi, Var::psi};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = pcdual::testing::random_polynomial(rng, dirs, 2, 2, -3, 3);
        ASSERT_EQ(determinant_bareiss(m), determinant_cofactor(m)) << "size " << n;
    }
}

TEST(EliminationProperty, RawResultantDegreeBound) {
    pcdual::testing::Rng rng(47);
    for (unsigned n : {2u, 3u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = pcdual::testing::random_dense_curve(rng, n);
            const auto G = substitute(homogenize(f, Var::x3),
                                      {{Var::x1, P("psi*x1")}, {Var::x2, P("psi*x2")}, {Var::x3, P("-eta*x1 - xi*x2")}});
            const auto r = resultant(as_binary_form(partial_derivative(G, Var::x1)),
                                     as_binary_form(partial_derivative(G, Var::x2)));
            ASSERT_FALSE(r.is_zero());
            // entries have degree n in (eta, xi, psi), and the matrix is (2n-2) x (2n-2)
            ASSERT_TRUE(is_homogeneous(r));
            ASSERT_EQ(total_degree(r), n * (2 * n - 2));
        }
    }
}

}  // namespace
