#pragma once

#include "projendo/projective_map.hpp"

#include <string>
#include <vector>

namespace projendo {

struct BinaryFactor {
    Form form;                  // first coefficient in canonical order is 1
    unsigned multiplicity = 1;
    bool irreducibility_certified = true;
};

/// f = constant * prod factor^multiplicity.
struct BinaryFormFactorization {
    FieldElement constant;
    std::vector<BinaryFactor> factors;
};

/// Squarefree decomposition of a nonzero binary form, with linear factors
/// that have rational roots split off. Remaining nonlinear factors are left
/// whole; their irreducibility is certified only over Q in degree <= 4.
/// Order: by factor degree, linear factors by descending root with x1 last.
BinaryFormFactorization squarefree_factorization(const Form& f);

/// Product of the factorization, for checking.
Form expand(const BinaryFormFactorization& fac, std::size_t num_vars = 2);

/// Normalized Jacobian determinant of a certified-regular P1 -> P1 map,
/// a binary form of degree 2m - 2; the constant 1 when m = 1. Unchecked
/// maps are certified first.
Form ramification_form(const ProjectiveMap& f);

enum class OrbitTag { TorusForm, Boundary, Closed };
std::string to_string(OrbitTag t);

struct OrbitType {
    OrbitTag tag = OrbitTag::Closed;
    BinaryFormFactorization witness;
    std::size_t point_count = 0;  // geometric points of the ramification divisor
};

/// TorusForm iff ramification is supported on exactly 2 points of
/// multiplicity m - 1; Boundary iff otherwise some point has multiplicity
/// m - 1; Closed otherwise. Requires m >= 2.
OrbitType classify_orbit(const ProjectiveMap& f);

} // namespace projendo
