#include "projendo/projective_map.hpp"

#include "projendo/error.hpp"

#include <algorithm>
#include <limits>

namespace projendo {

FieldPtr ProjectiveMap::field() const {
    FieldPtr f = NumberField::rationals();
    for (const auto& c : components_) f = common_field(f, c.field());
    return f;
}

ProjectiveMap ProjectiveMap::with_regularity(Regularity r) const {
    ProjectiveMap copy = *this;
    copy.regularity_ = r;
    return copy;
}

std::vector<Form> normalize_tuple(std::vector<Form> components) {
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        const FieldElement inv = c.leading_coefficient().inverse();
        for (auto& d : components) d *= inv;
        break;
    }
    return components;
}

namespace {

void validate(const std::vector<Form>& components) {
    require(!components.empty(), "invalid-argument", "a map needs at least one component");
    const std::size_t n = components.front().num_vars();
    const unsigned m = components.front().degree();
    require(n >= 2, "shape-mismatch", "maps need at least two source variables");
    require(m >= 1, "constant-map", "maps need degree at least 1");
    require(components.size() >= 2, "shape-mismatch", "maps need at least two components");
    bool any = false;
    for (const auto& c : components) {
        require(c.num_vars() == n && c.degree() == m, "shape-mismatch", "components differ in shape");
        any = any || !c.is_zero();
    }
    require(any, "zero-map", "all components are zero");
    FieldPtr f = NumberField::rationals();
    for (const auto& c : components) f = common_field(f, c.field());
}

Form binary_content(const std::vector<Form>& components) {
    const unsigned m = components.front().degree();
    unsigned x1_power = m;
    Poly<FieldElement> g;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        const auto p = dehomogenize(c);
        x1_power = std::min(x1_power, m - static_cast<unsigned>(p.degree()));
        g = gcd(g, p);
    }
    Form content = homogenize(g, static_cast<unsigned>(g.degree()));
    if (x1_power > 0) content = content * pow(Form::variable(2, 1), x1_power);
    return content;
}

Form monomial_content(const std::vector<Form>& components) {
    const std::size_t n = components.front().num_vars();
    std::vector<unsigned> e(n, std::numeric_limits<unsigned>::max());
    for (const auto& c : components)
        for (const auto& [mon, v] : c.terms())
            for (std::size_t i = 0; i < n; ++i) e[i] = std::min(e[i], mon.exponents[i]);
    return Form::monomial(Monomial{e});
}

Form divide_binary(const Form& f, const Form& content) {
    const unsigned d = f.degree() - content.degree();
    if (f.is_zero()) return Form(2, d);
    const auto [q, r] = divmod(dehomogenize(f), dehomogenize(content));
    if (!r.is_zero()) throw InternalError("content does not divide a component");
    return homogenize(q, d);
}

Form divide_monomial(const Form& f, const Monomial& e) {
    Form r(f.num_vars(), f.degree() - e.degree());
    for (const auto& [mon, v] : f.terms()) {
        Monomial q = mon;
        for (std::size_t i = 0; i < q.exponents.size(); ++i) q.exponents[i] -= e.exponents[i];
        r.add_term(q, v);
    }
    return r;
}

} // namespace

Form common_content(const std::vector<Form>& components) {
    validate(components);
    if (components.front().num_vars() == 2) return binary_content(components);
    return monomial_content(components);
}

ProjectiveMap make_map(std::vector<Form> components, ContentPolicy policy) {
    validate(components);
    if (policy == ContentPolicy::Reduce) {
        const Form content = common_content(components);
        require(content.degree() < components.front().degree(), "constant-map",
                "the components are proportional to a common factor of full degree");
        if (content.degree() > 0) {
            for (auto& c : components) {
                c = components.front().num_vars() == 2 ? divide_binary(c, content)
                                                       : divide_monomial(c, content.leading_monomial());
            }
        }
    }
    return ProjectiveMap(normalize_tuple(std::move(components)));
}

ProjectiveMap identity_map(std::size_t r) {
    std::vector<Form> comps;
    for (std::size_t i = 0; i <= r; ++i) comps.push_back(Form::variable(r + 1, i));
    return make_map(std::move(comps), ContentPolicy::Keep).with_regularity(Regularity::CertifiedRegular);
}

ProjectiveMap certify_regular(const ProjectiveMap& f) {
    return f.with_regularity(certify_components(f.components()).verdict);
}

ProjectiveMap compose(const ProjectiveMap& f, const ProjectiveMap& g) {
    require(g.target_dim() == f.source_dim(), "dimension-mismatch", "target of the inner map is not the source of the outer map");
    require(f.is_regular() && g.is_regular(), "uncertified-input", "compose needs certified-regular maps");
    std::vector<Form> comps;
    comps.reserve(f.components().size());
    for (const auto& c : f.components()) comps.push_back(substitute(c, g.components()));
    return make_map(std::move(comps), ContentPolicy::Keep).with_regularity(Regularity::CertifiedRegular);
}

std::vector<Form> act_on_tuple(const FieldMatrix& g_inverse, const FieldMatrix& h, const std::vector<Form>& tuple) {
    require(h.rows() == static_cast<Index>(tuple.size()) && h.cols() == h.rows(), "dimension-mismatch",
            "target matrix has the wrong size");
    std::vector<Form> pulled;
    pulled.reserve(tuple.size());
    for (const auto& c : tuple) pulled.push_back(substitute_linear(c, g_inverse));
    std::vector<Form> out;
    out.reserve(tuple.size());
    for (Index j = 0; j < h.rows(); ++j) {
        Form acc(tuple.front().num_vars(), tuple.front().degree());
        for (Index k = 0; k < h.cols(); ++k)
            if (!h(j, k).is_zero()) acc += h(j, k) * pulled[static_cast<std::size_t>(k)];
        out.push_back(std::move(acc));
    }
    return out;
}

ProjectiveMap pair_act(const FieldMatrix& g, const FieldMatrix& h, const ProjectiveMap& f) {
    require(g.rows() == static_cast<Index>(f.source_dim() + 1), "dimension-mismatch", "source matrix has the wrong size");
    const FieldMatrix g_inv = exact_inverse(g);
    (void)exact_inverse(h);  // h must be invertible
    return make_map(act_on_tuple(g_inv, h, f.components()), ContentPolicy::Keep).with_regularity(f.regularity());
}

ProjectiveMap conjugate_act(const FieldMatrix& g, const ProjectiveMap& f) {
    require(f.source_dim() == f.target_dim(), "dimension-mismatch", "conjugation needs a self-map");
    return pair_act(g, g, f);
}

bool projectively_equal(const ProjectiveMap& f, const ProjectiveMap& g) {
    if (f.source_dim() != g.source_dim() || f.target_dim() != g.target_dim() || f.degree() != g.degree()) return false;
    return normalize_tuple(f.components()) == normalize_tuple(g.components());
}

bool stabilizer_check(const ProjectiveMap& f, const FieldMatrix& g, const std::optional<FieldMatrix>& h) {
    return projectively_equal(pair_act(g, h ? *h : g, f), f);
}

} // namespace projendo
