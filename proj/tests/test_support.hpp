#pragma once

// Shared helpers for the unit suites: seeded generators for random exact
// inputs and terse constructors for small forms and matrices.

#include "projendo/form.hpp"
#include "projendo/matrix.hpp"
#include "projendo/number_field.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace projendo::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long bound = 5) {
    Rational r(uniform(rng, -bound, bound), static_cast<unsigned long>(uniform(rng, 1, bound)));
    r.canonicalize();
    return r;
}

inline FieldElement random_element(Rng& rng, const FieldPtr& field, long bound = 5) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < field->degree(); ++i) c.push_back(random_rational(rng, bound));
    return {field, std::move(c)};
}

inline Form random_form(Rng& rng, std::size_t vars, unsigned degree, const FieldPtr& field = NumberField::rationals(),
                        long bound = 4, double density = 0.7) {
    Form f(vars, degree);
    std::bernoulli_distribution keep(density);
    for (const auto& m : monomials_of_degree(vars, degree))
        if (keep(rng)) f.add_term(m, random_element(rng, field, bound));
    return f;
}

inline FieldMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    FieldMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = FieldElement(v);
        ++i;
    }
    return m;
}

/// Random invertible integer matrix with entries in [-bound, bound].
inline FieldMatrix random_invertible(Rng& rng, Index n, long bound = 2) {
    for (;;) {
        FieldMatrix m(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) m(i, j) = FieldElement(uniform(rng, -bound, bound));
        if (!exact_determinant(m).is_zero()) return m;
    }
}

/// Builds a form from (coefficient, exponents) pairs.
inline Form form(std::size_t vars, std::initializer_list<std::pair<long, std::vector<unsigned>>> terms) {
    unsigned degree = 0;
    for (const auto& t : terms) {
        degree = 0;
        for (unsigned e : t.second) degree += e;
        break;
    }
    Form f(vars, degree);
    for (const auto& [c, e] : terms) f.add_term(Monomial{e}, FieldElement(c));
    return f;
}

} // namespace projendo::testing
