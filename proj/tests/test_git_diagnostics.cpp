#include "test_support.hpp"

#include "projendo/error.hpp"
#include "projendo/git_diagnostics.hpp"
#include "projendo/ramification.hpp"

#include <doctest.h>

using namespace projendo;
using namespace projendo::testing;

namespace {

Form x0() { return Form::variable(2, 0); }
Form x1() { return Form::variable(2, 1); }

FieldMatrix jordan_block() { return rational_matrix({{1, 1}, {0, 1}}); }

// g F(g^{-1} x) evaluated at a point, straight from the definition.
std::vector<FieldElement> conjugated_value(const FieldMatrix& g, const std::vector<Form>& tuple,
                                           const std::vector<FieldElement>& x) {
    const FieldMatrix gi = exact_inverse(g);
    const auto n = static_cast<std::size_t>(g.rows());
    std::vector<FieldElement> y(n, FieldElement(0)), fy, out(n, FieldElement(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += gi(static_cast<Index>(i), static_cast<Index>(j)) * x[j];
    for (const auto& c : tuple) fy.push_back(evaluate(c, y));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += g(static_cast<Index>(i), static_cast<Index>(j)) * fy[j];
    return out;
}

std::vector<FieldElement> tuple_value(const std::vector<Form>& tuple, const std::vector<FieldElement>& x) {
    std::vector<FieldElement> out;
    for (const auto& c : tuple) out.push_back(evaluate(c, x));
    return out;
}

std::vector<FieldElement> apply_operator(const FieldMatrix& op, const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out(v.size(), FieldElement(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += op(static_cast<Index>(i), static_cast<Index>(j)) * v[j];
    return out;
}

std::vector<Form> random_tuple(Rng& rng, std::size_t n, unsigned m) {
    std::vector<Form> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(random_form(rng, n, m, NumberField::rationals()));
    return t;
}

bool in_span(const std::vector<std::vector<Form>>& basis, const std::vector<Form>& t) {
    const auto v = tuple_coefficients(t);
    FieldMatrix a(static_cast<Index>(v.size()), static_cast<Index>(basis.size() + 1));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto b = tuple_coefficients(basis[j]);
        for (std::size_t i = 0; i < b.size(); ++i) a(static_cast<Index>(i), static_cast<Index>(j)) = b[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) a(static_cast<Index>(i), static_cast<Index>(basis.size())) = v[i];
    return exact_rank(a) == static_cast<Index>(basis.size());
}

// A certified-regular binary map of degree m from sparse random components,
// or nothing when the draw is degenerate.
std::optional<ProjectiveMap> random_regular_map(Rng& rng, unsigned m, double density) {
    try {
        auto f = certify_regular(make_map({random_form(rng, 2, m, NumberField::rationals(), 3, density),
                                           random_form(rng, 2, m, NumberField::rationals(), 3, density)}));
        if (f.is_regular() && f.degree() == m) return f;
    } catch (const Error&) {
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("coefficient round trip") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_tuple(rng, 3, 3);
        CHECK(tuple_from_coefficients(tuple_coefficients(t), 3, 3) == t);
    }
    CHECK_THROWS_AS(tuple_from_coefficients(std::vector<FieldElement>(5, FieldElement(1)), 2, 2), Error);
}

TEST_CASE("coefficient operator matches pointwise conjugation") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 2 : 3;
        const unsigned m = static_cast<unsigned>(uniform(rng, 1, 3));
        const FieldMatrix g = random_invertible(rng, static_cast<Index>(n));
        const auto t = random_tuple(rng, n, m);
        const auto image = tuple_from_coefficients(apply_operator(coefficient_operator(g, m), tuple_coefficients(t)), n, m);
        for (int k = 0; k < 4; ++k) {
            std::vector<FieldElement> x;
            for (std::size_t i = 0; i < n; ++i) x.emplace_back(random_rational(rng, 5));
            CHECK(tuple_value(image, x) == conjugated_value(g, t, x));
        }
    }
}

TEST_CASE("coefficient operator is a representation") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 1, 3));
        const FieldMatrix g = random_invertible(rng, 2), h = random_invertible(rng, 2);
        CHECK(coefficient_operator(g * h, m) == coefficient_operator(g, m) * coefficient_operator(h, m));
    }
    CHECK(coefficient_operator(identity_matrix<FieldElement>(3), 2) == identity_matrix<FieldElement>(18));
    CHECK_THROWS_AS(coefficient_operator(rational_matrix({{1, 2}, {2, 4}}), 2), Error);
}

TEST_CASE("diagonal operator follows the weight law") {
    const FieldMatrix g = rational_matrix({{1, 0}, {0, 2}});
    const FieldMatrix op = coefficient_operator(g, 3);
    REQUIRE(op.rows() == 8);
    const auto mons = monomials_of_degree(2, 3);
    for (Index i = 0; i < 8; ++i)
        for (Index j = 0; j < 8; ++j) {
            if (i != j) {
                CHECK(op(i, j).is_zero());
                continue;
            }
            // lambda^{a_i - <a, e>} with lambda = 2, a = (0, 1)
            const long comp = i / 4;
            const long w = comp - static_cast<long>(mons[static_cast<std::size_t>(i % 4)].exponents[1]);
            const Rational expected = w >= 0 ? Rational(1L << w) : Rational(1, 1UL << -w);
            CHECK(op(i, i) == FieldElement(expected));
        }
}

TEST_CASE("unipotent elements fix no regular map of degree above two") {
    for (unsigned m : {3u, 4u, 5u}) {
        const auto rep = fixed_maps(jordan_block(), m);
        REQUIRE(rep.eigenspaces.size() == 1);
        const auto& es = rep.eigenspaces.front();
        CHECK(es.eigenvalue == FieldElement(1));
        CHECK(es.algebraic_multiplicity == 2 * (m + 1));
        CHECK(es.basis.size() == 2);
        CHECK(es.verdict == EigenspaceVerdict::ContainsNoRegularMap);
        CHECK_FALSE(es.witness.has_value());
        CHECK(rep.remainder.degree() == 0);
    }
    const auto lin = fixed_maps(jordan_block(), 1);
    REQUIRE(lin.eigenspaces.size() == 1);
    CHECK(lin.eigenspaces.front().verdict == EigenspaceVerdict::ContainsRegularMap);
    CHECK(in_span(lin.eigenspaces.front().basis, {x0(), x1()}));
}

TEST_CASE("fixed maps of a reflection and of the identity") {
    const auto rep = fixed_maps(rational_matrix({{1, 0}, {0, -1}}), 2);
    const std::vector<Form> target{x0() * x0() + x1() * x1(), x0() * x1()};
    bool found = false;
    for (const auto& es : rep.eigenspaces)
        if (es.eigenvalue == FieldElement(1)) {
            found = in_span(es.basis, target);
            CHECK(es.verdict == EigenspaceVerdict::ContainsRegularMap);
        }
    CHECK(found);
    const auto id = fixed_maps(identity_matrix<FieldElement>(2), 3);
    REQUIRE(id.eigenspaces.size() == 1);
    CHECK(id.eigenspaces.front().basis.size() == 8);
    CHECK(id.eigenspaces.front().verdict == EigenspaceVerdict::ContainsRegularMap);
}

TEST_CASE("fixed map eigenvectors are fixed") {
    Rng rng(8);
    const std::vector<FieldMatrix> gs{rational_matrix({{2, 1}, {0, 3}}), rational_matrix({{0, 1}, {1, 0}}),
                                      rational_matrix({{1, 0}, {0, -1}}), rational_matrix({{0, -1}, {1, -1}}),
                                      jordan_block()};
    for (const auto& g : gs)
        for (unsigned m = 1; m <= 3; ++m) {
            const auto rep = fixed_maps(g, m);
            int total = rep.remainder.degree();
            for (const auto& es : rep.eigenspaces) {
                total += static_cast<int>(es.algebraic_multiplicity);
                CHECK(es.basis.size() <= es.algebraic_multiplicity);
                for (const auto& v : es.basis) {
                    std::vector<FieldElement> x{random_rational(rng, 4), random_rational(rng, 4)};
                    auto lhs = conjugated_value(g, v, x);
                    auto rhs = tuple_value(v, x);
                    for (auto& r : rhs) r *= es.eigenvalue;
                    CHECK(lhs == rhs);
                }
                if (es.witness) {
                    CHECK(certify_components(*es.witness).verdict == Regularity::CertifiedRegular);
                    CHECK(in_span(es.basis, *es.witness));
                }
            }
            CHECK(total == rep.characteristic_polynomial.degree());
        }
}

TEST_CASE("regular members in higher dimension") {
    const Form X = Form::variable(3, 0), Y = Form::variable(3, 1), Z = Form::variable(3, 2);
    std::optional<std::vector<Form>> w;
    std::string how;
    // a line of maps containing (X^2, Y^2, Z^2)
    CHECK(regular_member({{X * X, Y * Y, Z * Z}, {X * Y, Form(3, 2), Form(3, 2)}}, &w, &how) ==
          EigenspaceVerdict::ContainsRegularMap);
    CHECK(w.has_value());
    // every member vanishes at (0 : 0 : 1)
    CHECK(regular_member({{X * X, X * Y, Y * Y}, {Y * Y, X * X, X * Y}}, &w, &how) ==
          EigenspaceVerdict::ContainsNoRegularMap);
    CHECK(how == "grid");
}

TEST_CASE("torus weight analysis") {
    const auto id = torus_weight_analysis({3, -2}, identity_map(1));
    CHECK(id.fixed);
    for (const auto& t : id.profile.terms) CHECK(t.weight == 0);
    for (unsigned m = 2; m <= 5; ++m) {
        const auto a = torus_weight_analysis({0, 1}, make_map({pow(x0(), m), pow(x1(), m)}));
        CHECK_FALSE(a.fixed);
        REQUIRE(a.profile.terms.size() == 2);
        CHECK(a.profile.terms[0].weight == 0);
        CHECK(a.profile.terms[1].weight == 1 - static_cast<long>(m));
    }
    const auto irr = make_map({x0() * x0(), x0() * x1()}, ContentPolicy::Keep);
    const auto w = torus_weight_analysis({1, 2}, irr);
    CHECK(w.fixed);
    for (const auto& t : w.profile.terms) CHECK(t.weight == -1);
    CHECK(sylvester_resultant(irr.component(0), irr.component(1)).is_zero());
    CHECK_THROWS_AS(torus_weight_analysis({1, 2, 3}, irr), Error);
}

TEST_CASE("torus-fixed regular maps need equal weights") {
    Rng rng(61);
    int regular = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
        // sparse tuples make weight coincidences likely
        const auto g = random_regular_map(rng, m, 0.35);
        if (!g) continue;
        const auto& f = *g;
        ++regular;
        for (long a0 = -2; a0 <= 2; ++a0)
            for (long a1 = -2; a1 <= 2; ++a1)
                if (torus_weight_analysis({a0, a1}, f).fixed) CHECK(a0 == a1);
    }
    CHECK(regular >= 10);
}

TEST_CASE("one-parameter limits") {
    const auto f = make_map({pow(x0(), 3) + pow(x1(), 3), pow(x1(), 3)});
    const auto up = one_param_limit(f, -1, -3);
    CHECK(up.tag == LimitTag::RegularLimit);
    CHECK(up.limit == std::vector<Form>{pow(x0(), 3), pow(x1(), 3)});
    CHECK(up.minimal_weight == 0);
    CHECK(up.surviving_terms.size() == 2);
    CHECK(classify_orbit(make_map(up.limit)).tag == OrbitTag::TorusForm);

    const auto down = one_param_limit(f, 1, 3);
    CHECK(down.tag == LimitTag::ConstantOrDegenerate);
    CHECK(down.minimal_weight == -6);
    CHECK(down.limit == std::vector<Form>{pow(x1(), 3), Form(2, 3)});

    for (unsigned m = 1; m <= 4; ++m) {
        const auto r = one_param_limit(make_map({pow(x0(), m), pow(x1(), m)}), 0, 1);
        CHECK(r.tag == LimitTag::ConstantOrDegenerate);
        CHECK(r.limit == std::vector<Form>{pow(x0(), m), Form(2, m)});
    }
    CHECK_THROWS_AS(one_param_limit(f, 0, 0), Error);
}

TEST_CASE("regular limits land on the torus orbit") {
    Rng rng(71);
    int regular_limits = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
        const auto g = random_regular_map(rng, m, 0.5);
        if (!g) continue;
        const auto& f = *g;
        for (long c = -2; c <= 2; ++c)
            for (long b = -4; b <= 4; ++b) {
                if (c == 0 && b == 0) continue;
                const auto r = one_param_limit(f, c, b);
                if (r.tag != LimitTag::RegularLimit) continue;
                ++regular_limits;
                CHECK(classify_orbit(make_map(r.limit)).tag == OrbitTag::TorusForm);
                CHECK(classify_orbit(f).tag != OrbitTag::Closed);
            }
    }
    // the torus orbit itself always has regular limits
    for (unsigned m = 2; m <= 4; ++m) {
        const auto r = one_param_limit(make_map({pow(x0(), m), pow(x1(), m)}), 1, static_cast<long>(m));
        CHECK(r.tag == LimitTag::RegularLimit);
        ++regular_limits;
    }
    CHECK(regular_limits >= 3);
}
