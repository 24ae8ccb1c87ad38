#pragma once

#include "projendo/projective_map.hpp"

#include <cstdint>
#include <vector>

namespace projendo {

/// An explicitly enumerated finite subgroup of GL(n) over a number field.
struct FiniteMatrixGroup {
    FieldPtr field;
    Index dim = 0;
    std::vector<FieldMatrix> generators;
    std::vector<FieldMatrix> elements;  // breadth-first order, identity first

    std::size_t order() const { return elements.size(); }
};

constexpr std::size_t kDefaultGroupCap = 10000;

/// Breadth-first closure of the generators under multiplication. An empty
/// generator list gives the trivial group of dimension `dim`.
/// Errors: "singular-matrix", "group-too-large" when the closure exceeds cap.
FiniteMatrixGroup enumerate_group(const std::vector<FieldMatrix>& generators, std::size_t cap = kDefaultGroupCap,
                                  Index dim = 0);

/// Elements (g^{-1})^T, in the same order.
FiniteMatrixGroup dual_group(const FiniteMatrixGroup& g);

/// The order-8 group generated by diag(1, -1) and the coordinate swap.
FiniteMatrixGroup signed_swap_group();
/// The order-24 rotation group of the cube acting on three coordinates.
FiniteMatrixGroup cube_rotation_group();

/// (1/|G|) sum over g of f(g x).
Form reynolds_project(const FiniteMatrixGroup& g, const Form& f);

struct InvariantBasis {
    unsigned degree = 0;
    std::vector<Form> basis;  // rows of a reduced echelon form
    std::size_t dim() const { return basis.size(); }
};

InvariantBasis invariant_basis(const FiniteMatrixGroup& g, unsigned degree);

/// True iff {f = 0} is smooth: Sylvester resultant of the two partials for
/// binary forms, certify_components of the gradient tuple otherwise.
bool is_smooth(const Form& f);

struct SmoothSearchResult {
    Form form;
    std::size_t candidates_tried = 0;
};

constexpr std::size_t kDefaultSearchBudget = 1000;

/// Deterministic sweep over small integer combinations of the invariant
/// basis, by growing coefficient bound, then support size, then subsets and
/// sign patterns. The seed permutes the basis; seed 0 keeps its order.
/// Errors: "no-invariants", "search-exhausted", "degree-too-small".
SmoothSearchResult smooth_invariant_search(const FiniteMatrixGroup& g, unsigned degree, std::uint64_t seed = 0,
                                           std::size_t budget = kDefaultSearchBudget);

/// (df/dx_0 : ... : df/dx_r), certified regular.
/// Errors: "smoothness-not-certified".
ProjectiveMap gradient_map(const Form& f);

enum class EquivarianceMode { Conjugation, Intertwining };

/// Per-element verdicts: Conjugation checks g F(g^{-1} x) ~ F, Intertwining
/// checks (g^{-1})^T F(g^{-1} x) ~ F, i.e. F(g x) ~ (g^{-1})^T F(x).
std::vector<bool> equivariance_transcript(const ProjectiveMap& f, const FiniteMatrixGroup& g, EquivarianceMode mode);
bool verify_equivariance(const ProjectiveMap& f, const FiniteMatrixGroup& g, EquivarianceMode mode);

struct EquivariantResult {
    Form invariant;        // smooth invariant of G
    Form dual_invariant;   // smooth invariant of the dual group
    ProjectiveMap gradient;
    ProjectiveMap dual_gradient;
    ProjectiveMap map;     // dual_gradient o gradient
    std::vector<bool> transcript;
};

/// I' o I with I, I' the gradient maps of smooth invariants of G and its
/// dual. Throws InternalError if the result is not conjugation-equivariant.
EquivariantResult equivariant_endomorphism(const FiniteMatrixGroup& g, unsigned degree, std::uint64_t seed = 0,
                                           std::size_t budget = kDefaultSearchBudget);

} // namespace projendo
