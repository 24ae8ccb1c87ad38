#include "test_support.hpp"

#include "projendo/error.hpp"
#include "projendo/form.hpp"
#include "projendo/matrix.hpp"

#include <doctest.h>

using namespace projendo;
using namespace projendo::testing;

namespace {

FieldPtr gaussian() { return NumberField::make({Rational(1), Rational(0), Rational(1)}); }
FieldPtr sqrt2() { return NumberField::make({Rational(-2), Rational(0), Rational(1)}); }

Form x(std::size_t n, std::size_t i) { return Form::variable(n, i); }

} // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("3/-6")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("field arithmetic examples") {
    const auto qi = gaussian();
    const auto i = FieldElement::generator(qi);
    CHECK((FieldElement(1) + i) * (FieldElement(1) - i) == FieldElement(2));
    CHECK(FieldElement(Rational(3, 4)) + FieldElement(Rational(1, 4)) == FieldElement(1));
    const auto r2 = FieldElement::generator(sqrt2());
    CHECK(r2 * r2 == FieldElement(2));
    CHECK(i * i == FieldElement(-1));
}

TEST_CASE("field inverse") {
    CHECK(FieldElement(2).inverse() == FieldElement(Rational(1, 2)));
    const auto i = FieldElement::generator(gaussian());
    const auto inv = (FieldElement(1) + i).inverse();
    CHECK(inv == (FieldElement(1) - i) * FieldElement(Rational(1, 2)));
    CHECK((FieldElement(1) + i) * inv == FieldElement(1));
    CHECK_THROWS_WITH_AS(FieldElement(0).inverse(), doctest::Contains("zero"), Error);
}

TEST_CASE("distinct fields never mix, Q embeds everywhere") {
    const auto i = FieldElement::generator(gaussian());
    const auto r2 = FieldElement::generator(sqrt2());
    CHECK_THROWS_AS(i + r2, Error);
    try {
        (void)(i * r2);
    } catch (const Error& e) {
        CHECK(e.code() == "field-mismatch");
    }
    CHECK((i + FieldElement(3)).coords().size() == 2);
}

TEST_CASE("number field construction verifies small-degree irreducibility") {
    CHECK(gaussian()->irreducibility_verified());
    CHECK_THROWS_AS(NumberField::make({Rational(-1), Rational(0), Rational(1)}), Error);
    // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2) has no rational root
    CHECK_THROWS_AS(NumberField::make({Rational(4), Rational(0), Rational(0), Rational(0), Rational(1)}), Error);
    CHECK(NumberField::make({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})->degree() == 4);
    CHECK(NumberField::make({Rational(-2), Rational(0), Rational(0), Rational(1)})->degree() == 3);
    CHECK(NumberField::make({Rational(3), Rational(1)})->is_rationals());
    CHECK_THROWS_AS(NumberField::make({Rational(1), Rational(2)}), Error);  // not monic
    CHECK(NumberField::cyclotomic(5)->degree() == 4);
    CHECK(NumberField::cyclotomic(12)->modulus() ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
    CHECK(NumberField::cyclotomic(8)->irreducibility_verified());
    const auto deg5 = NumberField::cyclotomic(11);
    CHECK_FALSE(deg5->irreducibility_verified());
    const auto z = FieldElement::generator(NumberField::cyclotomic(5));
    FieldElement p(1);
    for (int k = 0; k < 5; ++k) p *= z;
    CHECK(p == FieldElement(1));
}

TEST_CASE("rational roots") {
    // 6t^3 - 7t^2 + 1 = (t - 1)(2t - 1)(3t + 1)
    Poly<Rational> p({Rational(1), Rational(0), Rational(-7), Rational(6)});
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(-1, 3), Rational(1, 2), Rational(1)});
    CHECK(rational_roots(Poly<Rational>({Rational(-1), Rational(0), Rational(2)})).empty());
}

TEST_CASE("field axioms on random elements") {
    Rng rng(11);
    for (const auto& field : {NumberField::rationals(), gaussian(), sqrt2(), NumberField::cyclotomic(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_element(rng, field), b = random_element(rng, field), c = random_element(rng, field);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1));
        }
    }
}

TEST_CASE("form arithmetic examples") {
    const auto x0 = x(2, 0), x1 = x(2, 1);
    CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
    const Form z = x0 * x0 + (-(x0 * x0));
    CHECK(z.is_zero());
    CHECK(z.degree() == 2);
    CHECK((x0 * x0 * x1) * (x1 * x1) == pow(x0, 2) * pow(x1, 3));
    CHECK_THROWS_AS(x0 + x0 * x1, Error);
    CHECK_THROWS_AS(x0 * x(3, 0), Error);
}

TEST_CASE("canonical term order is graded lex with x0 dominant") {
    const auto mons = monomials_of_degree(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons.front().exponents == std::vector<unsigned>{2, 0, 0});
    CHECK(mons[1].exponents == std::vector<unsigned>{1, 1, 0});
    CHECK(mons.back().exponents == std::vector<unsigned>{0, 0, 2});
    for (std::size_t k = 0; k < mons.size(); ++k) CHECK(monomial_index(mons[k]) == k);
    CHECK(count_monomials(3, 4) == 15);
    CHECK(to_string(form(2, {{1, {0, 2}}, {-2, {1, 1}}, {3, {2, 0}}})) == "3*x0^2 - 2*x0*x1 + x1^2");
}

TEST_CASE("partial derivatives") {
    const auto x0 = x(2, 0), x1 = x(2, 1);
    CHECK(partial_derivative(pow(x0, 3) + x0 * pow(x1, 2), 0) == FieldElement(3) * pow(x0, 2) + pow(x1, 2));
    CHECK(partial_derivative(pow(x1, 5), 0).is_zero());
    const auto X = x(3, 0), Y = x(3, 1), Z = x(3, 2);
    CHECK(partial_derivative(pow(X, 4) + pow(Y, 4) + pow(Z, 4), 2) == FieldElement(4) * pow(Z, 3));
    CHECK_THROWS_AS(partial_derivative(x0, 2), Error);
}

TEST_CASE("linear substitution examples") {
    const auto x0 = x(2, 0), x1 = x(2, 1);
    CHECK(substitute_linear(x0 * x0, identity_matrix<FieldElement>(2)) == x0 * x0);
    const auto shear = rational_matrix({{1, 1}, {0, 1}});
    for (unsigned m = 1; m <= 5; ++m) CHECK(substitute_linear(pow(x0, m), shear) == pow(x0 + x1, m));
    auto d = rational_matrix({{2, 0}, {0, 1}});
    d(1, 1) = FieldElement(Rational(1, 2));
    CHECK(substitute_linear(x0 * x1, d) == x0 * x1);
    CHECK_THROWS_AS(substitute_linear(x0, identity_matrix<FieldElement>(3)), Error);
}

TEST_CASE("evaluation") {
    const auto x0 = x(2, 0), x1 = x(2, 1);
    const std::vector<FieldElement> p10{FieldElement(1), FieldElement(0)};
    CHECK(evaluate(x0 * x0 + x1 * x1, p10) == FieldElement(1));
    CHECK(evaluate(x0 * x1, p10) == FieldElement(0));
    const std::vector<FieldElement> p25{FieldElement(2), FieldElement(5)};
    CHECK(evaluate(pow(x0, 3), p25) == FieldElement(8));
    CHECK_THROWS_AS(evaluate(x0, std::vector<FieldElement>{FieldElement(1)}), Error);
}

TEST_CASE("Euler identity and commuting partials on random forms") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
        const unsigned m = static_cast<unsigned>(uniform(rng, 1, 5));
        const auto field = trial % 3 == 0 ? gaussian() : NumberField::rationals();
        const Form f = random_form(rng, n, m, field);
        Form euler(n, m);
        for (std::size_t i = 0; i < n; ++i) euler += x(n, i) * partial_derivative(f, i);
        CHECK(euler == FieldElement(static_cast<long>(m)) * f);
        if (m >= 2) {
            const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
            const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
            CHECK(partial_derivative(partial_derivative(f, i), j) == partial_derivative(partial_derivative(f, j), i));
        }
    }
}

TEST_CASE("substitution is a contravariant action") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = uniform(rng, 2, 3);
        const Form f = random_form(rng, static_cast<std::size_t>(n), static_cast<unsigned>(uniform(rng, 1, 4)));
        const auto M = random_invertible(rng, n), N = random_invertible(rng, n);
        CHECK(substitute_linear(f, M * N) == substitute_linear(substitute_linear(f, M), N));
        CHECK(substitute_linear(f, identity_matrix<FieldElement>(n)) == f);
        CHECK(substitute_linear(substitute_linear(f, M), exact_inverse(M)) == f);
    }
}

TEST_CASE("exact linear algebra against independent routes") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Index n = uniform(rng, 1, 6);
        FieldMatrix a(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) a(i, j) = FieldElement(uniform(rng, -3, 3));
        if (trial % 4 == 0 && n > 1) a.row(n - 1) = a.row(0) + a.row(1 % n);
        const FieldElement det = exact_determinant(a);
        std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(a(i, j));
        CHECK(berkowitz_determinant(rows) == det);
        // characteristic polynomial agrees with det(cI - A) at several points
        const auto chi = characteristic_polynomial(a);
        CHECK(chi.degree() == n);
        for (long c = -2; c <= 2; ++c) {
            FieldMatrix shifted = FieldElement(c) * identity_matrix<FieldElement>(n) - a;
            CHECK(chi(FieldElement(c)) == exact_determinant(shifted));
        }
        const FieldMatrix kernel = exact_nullspace(a);
        CHECK(kernel.cols() + exact_rank(a) == n);
        if (kernel.cols() > 0) CHECK(a * kernel == FieldMatrix::Zero(n, kernel.cols()));
        if (!det.is_zero()) {
            CHECK(a * exact_inverse(a) == identity_matrix<FieldElement>(n));
        } else {
            CHECK_THROWS_AS(exact_inverse(a), Error);
        }
    }
}

TEST_CASE("squarefree decomposition") {
    // (t - 1)^2 (t + 2)^3 t
    using P = Poly<Rational>;
    const P p = pow(P::linear_root(Rational(1)), 2) * pow(P::linear_root(Rational(-2)), 3) * P::linear_root(Rational(0));
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == P::linear_root(Rational(0)));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == P::linear_root(Rational(1)));
    CHECK(parts[2].second == 3);
}
