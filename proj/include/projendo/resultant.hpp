#pragma once

#include "projendo/form.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace projendo {

enum class Regularity { CertifiedRegular, CertifiedIrregular, Unchecked };

std::string to_string(Regularity r);
Regularity parse_regularity(std::string_view s);

/// Sylvester matrix of two binary forms, coefficients taken in descending
/// powers of x0: deg g shifted rows of f followed by deg f shifted rows of g.
FieldMatrix sylvester_matrix(const Form& f, const Form& g);

/// det of the Sylvester matrix; zero iff f and g share a projective root.
/// Res(f, 0) = 0 unless f is a nonzero constant.
FieldElement sylvester_resultant(const Form& f, const Form& g);

/// Rows q * f_i for every monomial q of degree D - m, columns the degree-D
/// monomials in canonical order, with D = n (m - 1) + 1 for n variables.
/// The forms have no common projective zero iff this matrix has full
/// column rank.
FieldMatrix macaulay_matrix(std::span<const Form> forms);

/// How a verdict was reached.
enum class CertificateMethod { Sylvester, ModularRank, ExactRank, Witness, DimensionCount, None };
std::string to_string(CertificateMethod m);

struct RegularityCertificate {
    Regularity verdict = Regularity::Unchecked;
    CertificateMethod method = CertificateMethod::None;
    std::vector<FieldElement> witness;  // a common zero when found
};

/// Decide whether forms of a common degree m >= 1 in n variables have a
/// common projective zero.
///  - two binary forms: exact Sylvester resultant;
///  - fewer forms than variables: irregular by dimension count;
///  - otherwise full rank of the Macaulay matrix modulo one of three 62-bit
///    primes certifies regularity; failing that, a common zero with small
///    integer coordinates certifies irregularity; failing that, exact rank
///    over the field when the matrix has at most `exact_column_limit`
///    columns; else unchecked.
RegularityCertificate certify_components(std::span<const Form> forms, std::size_t exact_column_limit = 400);

/// A nonzero vector with coordinates in [-bound, bound] at which all forms
/// vanish, searched in a fixed order.
std::optional<std::vector<FieldElement>> small_common_zero(std::span<const Form> forms, long bound = 2);

} // namespace projendo
