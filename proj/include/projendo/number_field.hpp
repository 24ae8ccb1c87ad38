#pragma once

#include "projendo/poly.hpp"
#include "projendo/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace projendo {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[t]/(mu(t)) for a monic mu of degree d. Degree 1 is Q itself and is
/// canonicalized to mu = t.
class NumberField {
public:
    static FieldPtr rationals();

    /// `modulus` is low-to-high and must be monic. For d <= 4 irreducibility is
    /// verified (throws Error("reducible-modulus")); for d > 4 it is taken on
    /// trust and `irreducibility_verified()` reports false.
    static FieldPtr make(std::vector<Rational> modulus);

    /// Q(zeta_n) through the n-th cyclotomic polynomial.
    static FieldPtr cyclotomic(unsigned n);

    std::size_t degree() const { return modulus_.size() - 1; }
    bool is_rationals() const { return degree() == 1; }
    const std::vector<Rational>& modulus() const { return modulus_; }
    bool irreducibility_verified() const { return verified_; }

    bool operator==(const NumberField& o) const { return modulus_ == o.modulus_; }

private:
    NumberField(std::vector<Rational> modulus, bool verified)
        : modulus_(std::move(modulus)), verified_(verified) {}

    std::vector<Rational> modulus_;
    bool verified_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Monic-over-Q irreducibility for degree <= 4 by rational-root and
/// quadratic-factor search.
bool is_irreducible_over_q(const Poly<Rational>& p);

/// Rational roots of a nonzero polynomial over Q, without multiplicity, in
/// increasing order. `complete` is cleared when an integer was too large to
/// factor by trial division and some roots may be missing.
std::vector<Rational> rational_roots(const Poly<Rational>& p, bool* complete = nullptr);

/// An element of a NumberField, written in the power basis 1, a, ..., a^(d-1).
///
/// Elements of Q (degree-1 field) embed in every field and combine with
/// elements of any field; two elements of distinct non-trivial fields never
/// combine (Error("field-mismatch")).
class FieldElement {
public:
    FieldElement();
    FieldElement(int v);   // NOLINT(google-explicit-constructor)
    FieldElement(long v);  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& v);  // NOLINT(google-explicit-constructor)
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    /// The class of t in Q[t]/(mu).
    static FieldElement generator(const FieldPtr& field);
    static FieldElement embed(const FieldPtr& field, const Rational& v);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    FieldElement inverse() const;
    /// Same value viewed in `field` (requires this to be rational or already in `field`).
    FieldElement in_field(const FieldPtr& field) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Human-readable, e.g. "1/2 - 3*a^2". Canonical and deterministic.
    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }
std::string to_string(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// The field containing both (Q embeds in anything); throws on mismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Rational roots of a polynomial over a number field: common rational roots
/// of its power-basis coordinate polynomials.
std::vector<Rational> rational_roots(const Poly<FieldElement>& p, bool* complete = nullptr);

} // namespace projendo

namespace Eigen {

template <>
struct NumTraits<projendo::FieldElement> : GenericNumTraits<projendo::FieldElement> {
    using Real = projendo::FieldElement;
    using NonInteger = projendo::FieldElement;
    using Nested = projendo::FieldElement;
    using Literal = projendo::FieldElement;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen
