#include "projendo/ramification.hpp"

#include "projendo/error.hpp"

#include <algorithm>

namespace projendo {

namespace {

struct Piece {
    BinaryFactor factor;
    int root_rank;  // linear factors: 0 finite, 1 for x1
    Rational root;
};

bool certify_irreducible(const Poly<FieldElement>& p) {
    if (p.degree() <= 1) return true;
    if (p.degree() > 4) return false;
    std::vector<Rational> q;
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) return false;
        q.push_back(c.rational_value());
    }
    try {
        return is_irreducible_over_q(Poly<Rational>(q));
    } catch (const Error&) {
        return false;
    }
}

} // namespace

BinaryFormFactorization squarefree_factorization(const Form& f) {
    require(f.num_vars() == 2, "non-binary", "expected a binary form");
    require(!f.is_zero(), "zero-form", "cannot factor the zero form");
    const unsigned m = f.degree();
    Poly<FieldElement> p = dehomogenize(f);
    const unsigned x1_power = m - static_cast<unsigned>(p.degree());

    std::vector<Piece> pieces;
    for (auto& [part, mult] : squarefree_decomposition(p)) {
        Poly<FieldElement> rest = part;
        for (const Rational& a : rational_roots(part)) {
            const auto lin = Poly<FieldElement>::linear_root(FieldElement(a));
            rest = exact_quotient(rest, lin);
            pieces.push_back({{homogenize(lin, 1), mult, true}, 0, a});
        }
        if (rest.degree() >= 1) {
            const bool certified = certify_irreducible(rest);
            pieces.push_back({{homogenize(rest, static_cast<unsigned>(rest.degree())), mult, certified}, 0, Rational(0)});
        }
    }
    if (x1_power > 0) pieces.push_back({{Form::variable(2, 1), x1_power, true}, 1, Rational(0)});

    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        const unsigned da = a.factor.form.degree(), db = b.factor.form.degree();
        if (da != db) return da < db;
        if (da == 1) {
            if (a.root_rank != b.root_rank) return a.root_rank < b.root_rank;
            return a.root > b.root;
        }
        return a.factor.multiplicity < b.factor.multiplicity;
    });

    BinaryFormFactorization out{p.leading(), {}};
    for (auto& piece : pieces) out.factors.push_back(std::move(piece.factor));
    return out;
}

Form expand(const BinaryFormFactorization& fac, std::size_t num_vars) {
    Form r = Form::constant(num_vars, fac.constant);
    for (const auto& f : fac.factors) r = r * pow(f.form, f.multiplicity);
    return r;
}

Form ramification_form(const ProjectiveMap& f) {
    require(f.source_dim() == 1 && f.target_dim() == 1, "non-binary", "ramification needs a map P1 -> P1");
    ProjectiveMap g = f.regularity() == Regularity::Unchecked ? certify_regular(f) : f;
    require(g.regularity() != Regularity::CertifiedIrregular, "irregular-map", "the map has a base point");
    require(g.is_regular(), "uncertified-input", "regularity could not be certified");
    if (g.degree() < 2) return Form::constant(2, FieldElement(1));
    const Form& a = g.component(0);
    const Form& b = g.component(1);
    const Form jac = partial_derivative(a, 0) * partial_derivative(b, 1) - partial_derivative(a, 1) * partial_derivative(b, 0);
    if (jac.is_zero()) throw InternalError("vanishing Jacobian for a regular map in characteristic zero");
    return normalized(jac);
}

std::string to_string(OrbitTag t) {
    switch (t) {
    case OrbitTag::TorusForm: return "TorusForm";
    case OrbitTag::Boundary: return "Boundary";
    case OrbitTag::Closed: return "Closed";
    }
    throw InternalError("unknown orbit tag");
}

OrbitType classify_orbit(const ProjectiveMap& f) {
    require(f.degree() >= 2, "degree-too-small", "classification needs degree at least 2");
    const Form r = ramification_form(f);
    const unsigned m = f.degree();
    OrbitType out;
    out.witness = squarefree_factorization(r);
    bool all_top = true, any_top = false;
    for (const auto& fac : out.witness.factors) {
        out.point_count += fac.form.degree();
        const bool top = fac.multiplicity == m - 1;
        all_top = all_top && top;
        any_top = any_top || top;
    }
    if (out.point_count == 2 && all_top)
        out.tag = OrbitTag::TorusForm;
    else if (any_top)
        out.tag = OrbitTag::Boundary;
    else
        out.tag = OrbitTag::Closed;
    return out;
}

} // namespace projendo
