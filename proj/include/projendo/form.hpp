#pragma once

#include "projendo/matrix.hpp"
#include "projendo/number_field.hpp"
#include "projendo/poly.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace projendo {

struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const;
    std::size_t num_vars() const { return exponents.size(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Canonical term order: graded, then lexicographic with x0 dominant, so
/// x0^m comes first and x_r^m last. `operator()` is "a precedes b".
struct GrlexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All degree-`degree` monomials in `num_vars` variables, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Number of degree-`degree` monomials in `num_vars` variables.
std::size_t count_monomials(std::size_t num_vars, unsigned degree);

/// Position of `m` in `monomials_of_degree(m.num_vars(), m.degree())`.
std::size_t monomial_index(const Monomial& m);

/// Homogeneous polynomial with a fixed variable count and degree. Zero
/// coefficients are never stored; the zero form of any degree has no terms.
class Form {
public:
    using Terms = std::map<Monomial, FieldElement, GrlexOrder>;

    Form(std::size_t num_vars, unsigned degree);

    static Form variable(std::size_t num_vars, std::size_t i);
    static Form constant(std::size_t num_vars, const FieldElement& c);
    static Form monomial(const Monomial& m, const FieldElement& c = FieldElement(1));

    std::size_t num_vars() const { return num_vars_; }
    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    FieldElement coefficient(const Monomial& m) const;
    /// Coefficient of the canonically first term; requires a nonzero form.
    const FieldElement& leading_coefficient() const;
    const Monomial& leading_monomial() const;

    /// Largest field among the coefficients (Q for rational or zero forms).
    FieldPtr field() const;

    /// Accumulate c * m. Throws on shape mismatch.
    void add_term(const Monomial& m, const FieldElement& c);

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const FieldElement& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const FieldElement& c, Form a) { return a *= c; }
    friend bool operator==(const Form& a, const Form& b);
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    std::size_t num_vars_;
    unsigned degree_;
    Terms terms_;
};

Form pow(const Form& f, unsigned e);

/// d f / d x_i, of degree m - 1. Requires degree >= 1.
Form partial_derivative(const Form& f, std::size_t i);

/// x -> f(M x): result(x) = f(M x). Contravariant: substitute_linear(f, M N)
/// equals substitute_linear(substitute_linear(f, M), N).
Form substitute_linear(const Form& f, const FieldMatrix& m);

/// f(g_0(x), ..., g_r(x)) for forms g_i of a common shape.
Form substitute(const Form& f, std::span<const Form> args);

FieldElement evaluate(const Form& f, std::span<const FieldElement> point);

/// f divided by its leading coefficient (zero stays zero).
Form normalized(const Form& f);

/// True iff f = c g for a nonzero scalar c.
bool proportional(const Form& f, const Form& g);

/// Coefficients in canonical monomial order (dense, length count_monomials).
std::vector<FieldElement> dense_coefficients(const Form& f);
Form form_from_dense(std::size_t num_vars, unsigned degree, std::span<const FieldElement> coeffs);

/// "2*x0^2 - x0*x1 + 1/2*x1^2"; irrational coefficients are parenthesized.
std::string to_string(const Form& f);

/// Binary forms <-> univariate polynomials via x0 = t, x1 = 1.
Poly<FieldElement> dehomogenize(const Form& f);
Form homogenize(const Poly<FieldElement>& p, unsigned degree);

} // namespace projendo
