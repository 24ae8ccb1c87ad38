#pragma once

#include "projendo/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace projendo::chow {

/// Formal symbols of CH(P(E)) over a free base ring. `K` is the fiber degree
/// k kept symbolic; it has grading 0.
enum class Var { Xi, C1E, C2E, C1F, C2F, D, KB, K };
inline constexpr std::size_t kNumVars = 8;

std::string to_string(Var v);

/// xi^2 = a xi c1E + b c2E. The tautological relation has a = b = -1.
struct Relation {
    Rational a = -1;
    Rational b = -1;
};

/// Polynomial with rational coefficients in the formal symbols.
class ChowClass {
public:
    using Exponents = std::array<unsigned, kNumVars>;

    ChowClass() = default;
    ChowClass(long c) : ChowClass(Rational(c)) {}  // NOLINT: ring literal
    ChowClass(const Rational& c);                 // NOLINT: ring literal
    static ChowClass var(Var v);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Grading of the first term; 0 for the zero class.
    unsigned degree() const;
    unsigned max_exponent(Var v) const;

    /// Terms with v^e exactly, with v removed.
    ChowClass coefficient(Var v, unsigned e) const;
    ChowClass substitute(Var v, const ChowClass& value) const;
    /// The class as a rational, when it is constant.
    bool is_constant() const;
    Rational constant_value() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator-(const ChowClass& a) { return ChowClass() - a; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.terms_ == b.terms_; }

private:
    void add(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> terms_;
};

ChowClass xi();
ChowClass c1E();
ChowClass c2E();
ChowClass c1F();
ChowClass c2F();
ChowClass D();
ChowClass KB();
ChowClass k();

/// Canonical text: terms by decreasing grading, then by exponents; "0" for zero.
std::string to_string(const ChowClass& c);

/// Rewrites every xi^e with e >= 2 until the xi-degree is at most 1.
ChowClass reduce(const ChowClass& c, const Relation& rel = {});
ChowClass chow_mul(const ChowClass& a, const ChowClass& b, const Relation& rel = {});

/// c2F + (k xi + D) c1F + (k xi + D)^2, before and after reduction. `fiber_degree`
/// is an integer or the symbol k.
ChowClass c2_twist_unreduced(const ChowClass& fiber_degree, const ChowClass& twist);
ChowClass c2_twist_expand(const ChowClass& fiber_degree, const ChowClass& twist, const Relation& rel = {});

/// D making the xi-linear part of the reduced c2 class vanish. Errors:
/// "invalid-argument" for integer k < 1, "inconsistency" when the equation is
/// not linear in D with a unit coefficient.
ChowClass solve_twist_degree(const ChowClass& fiber_degree, const Relation& rel = {});

/// K_X - phi^* K_Y with K = -2 xi + KB - c1 and phi^* xi' = k xi + D.
ChowClass ramification_class(const ChowClass& fiber_degree, const Relation& rel = {});

/// c1 of S^l E^* twisted by a det E, summed over the splitting roots.
ChowClass symmetric_power_det(long l, long a);
/// The same class with l and a polynomials in k, via the closed form of the sum.
ChowClass symmetric_power_det(const ChowClass& l, const ChowClass& a);

struct PullbackConstraint {
    ChowClass twist;     // L
    ChowClass relation;  // normalized to leading coefficient 1 on c1E^2
};

/// Solves c1(g^* E) = k c1E = c1E + 2L and c2(g^* E) = k^2 c2E = c2E + L c1E + L^2.
/// Errors: "invalid-argument" for k < 2.
PullbackConstraint pullback_twist_constraint(long fiber_degree);

struct CheckRow {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every identity under the given relation.
std::vector<CheckRow> check_all(const Relation& rel = {});

} // namespace projendo::chow
