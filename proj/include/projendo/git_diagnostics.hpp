#pragma once

#include "projendo/projective_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace projendo {

/// Coefficient vector of a map tuple: component-major, monomials in
/// canonical order within each component.
std::vector<FieldElement> tuple_coefficients(const std::vector<Form>& tuple);
std::vector<Form> tuple_from_coefficients(const std::vector<FieldElement>& coeffs, std::size_t num_vars,
                                          unsigned degree);

/// Matrix of F -> g F(g^{-1} x) on tuple coefficients, size
/// (r+1) * binomial(m+r, r). Errors: "singular-matrix".
FieldMatrix coefficient_operator(const FieldMatrix& g, unsigned degree);

enum class EigenspaceVerdict { ContainsRegularMap, ContainsNoRegularMap, Undecided };
std::string to_string(EigenspaceVerdict v);

struct Eigenspace {
    FieldElement eigenvalue;
    unsigned algebraic_multiplicity = 0;
    std::vector<std::vector<Form>> basis;          // raw tuples
    EigenspaceVerdict verdict = EigenspaceVerdict::Undecided;
    std::optional<std::vector<Form>> witness;      // a regular member when found
    std::string method;                            // how the verdict was reached
};

struct FixedMapsReport {
    Poly<FieldElement> characteristic_polynomial;
    std::vector<Eigenspace> eigenspaces;
    Poly<FieldElement> remainder;  // part of the characteristic polynomial with no found root
};

/// Eigenvalues of the coefficient operator lying in the base field (rational
/// roots of its characteristic polynomial, plus for triangular g the
/// products g_ii prod_j g_jj^{-e_j}), their eigenspaces, and whether each
/// eigenspace contains a regular map.
FixedMapsReport fixed_maps(const FieldMatrix& g, unsigned degree);

/// Decide whether span(basis) contains a regular tuple.
EigenspaceVerdict regular_member(const std::vector<std::vector<Form>>& basis, std::optional<std::vector<Form>>* witness,
                                 std::string* method);

struct WeightTerm {
    std::size_t component = 0;
    Monomial monomial;
    long weight = 0;
};

struct WeightProfile {
    std::vector<long> exponents;
    std::vector<WeightTerm> terms;  // nonzero terms only
};

struct TorusAnalysis {
    WeightProfile profile;
    bool fixed = false;  // all weights equal
};

/// Weights a_i - <a, e> of the terms of F under diag(t^{a_0}, ..., t^{a_r}).
TorusAnalysis torus_weight_analysis(const std::vector<long>& exponents, const ProjectiveMap& f);

enum class LimitTag { RegularLimit, ConstantOrDegenerate };
std::string to_string(LimitTag t);

struct LimitResult {
    LimitTag tag = LimitTag::ConstantOrDegenerate;
    std::vector<Form> limit;  // surviving terms as a raw tuple, possibly irregular
    Regularity regularity = Regularity::Unchecked;
    std::vector<WeightTerm> surviving_terms;
    long minimal_weight = 0;
};

/// lambda -> 0 limit of F under the one-parameter subgroup with weights
/// (2i - m)c - b on the x0^i x1^(m-i) terms of component 0 and (2i - m)c + b
/// on those of component 1; keeps the minimal-weight terms.
LimitResult one_param_limit(const ProjectiveMap& f, long c, long b);

} // namespace projendo
