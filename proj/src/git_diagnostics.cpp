#include "projendo/git_diagnostics.hpp"

#include "projendo/error.hpp"
#include "projendo/param_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace projendo {

std::vector<FieldElement> tuple_coefficients(const std::vector<Form>& tuple) {
    std::vector<FieldElement> out;
    for (const auto& c : tuple) {
        const auto d = dense_coefficients(c);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

std::vector<Form> tuple_from_coefficients(const std::vector<FieldElement>& coeffs, std::size_t num_vars,
                                          unsigned degree) {
    const std::size_t per = count_monomials(num_vars, degree);
    require(per > 0 && coeffs.size() % per == 0, "shape-mismatch", "coefficient vector has the wrong length");
    std::vector<Form> out;
    for (std::size_t i = 0; i < coeffs.size(); i += per)
        out.push_back(form_from_dense(num_vars, degree, std::span<const FieldElement>(coeffs).subspan(i, per)));
    return out;
}

FieldMatrix coefficient_operator(const FieldMatrix& g, unsigned degree) {
    require(g.rows() == g.cols() && g.rows() >= 2, "dimension-mismatch", "needs a square matrix of size at least 2");
    const FieldMatrix g_inv = exact_inverse(g);
    const auto n = static_cast<std::size_t>(g.rows());
    const auto mons = monomials_of_degree(n, degree);
    const std::size_t per = mons.size();
    const auto size = static_cast<Index>(n * per);
    FieldMatrix op = FieldMatrix::Zero(size, size);
    for (std::size_t e = 0; e < per; ++e) {
        const auto pulled = dense_coefficients(substitute_linear(Form::monomial(mons[e]), g_inv));
        for (std::size_t i = 0; i < n; ++i) {
            const auto col = static_cast<Index>(i * per + e);
            for (std::size_t j = 0; j < n; ++j) {
                const FieldElement& gji = g(static_cast<Index>(j), static_cast<Index>(i));
                if (gji.is_zero()) continue;
                for (std::size_t k = 0; k < per; ++k)
                    if (!pulled[k].is_zero()) op(static_cast<Index>(j * per + k), col) += gji * pulled[k];
            }
        }
    }
    return op;
}

std::string to_string(EigenspaceVerdict v) {
    switch (v) {
        case EigenspaceVerdict::ContainsRegularMap: return "contains-a-regular-map";
        case EigenspaceVerdict::ContainsNoRegularMap: return "contains-no-regular-map";
        case EigenspaceVerdict::Undecided: return "undecided";
    }
    return "undecided";
}

namespace {

std::vector<Form> combine(const std::vector<std::vector<Form>>& basis, const std::vector<FieldElement>& c) {
    std::vector<Form> out;
    for (const auto& f : basis.front()) out.emplace_back(f.num_vars(), f.degree());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (c[j].is_zero()) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[j] * basis[j][i];
    }
    return out;
}

bool all_zero(const std::vector<Form>& tuple) {
    return std::all_of(tuple.begin(), tuple.end(), [](const Form& f) { return f.is_zero(); });
}

// Basis vectors, their sum, then pseudo-random combinations in [-3, 3].
std::vector<std::vector<FieldElement>> specialization_points(std::size_t k) {
    std::vector<std::vector<FieldElement>> pts;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<FieldElement> p(k, FieldElement(0));
        p[j] = FieldElement(1);
        pts.push_back(std::move(p));
    }
    if (k > 1) pts.emplace_back(k, FieldElement(1));
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int n = 0; n < 32; ++n) {
        std::vector<FieldElement> p(k);
        for (auto& x : p) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            x = FieldElement(static_cast<long>((state >> 33) % 7) - 3);
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

// Sylvester resultant of the two components of sum_j p_j B_j, symbolic in p.
ParamPoly symbolic_resultant(const std::vector<std::vector<Form>>& basis) {
    const unsigned m = basis.front().front().degree();
    const std::size_t size = 2 * m;
    std::vector<std::vector<ParamPoly>> coef(2, std::vector<ParamPoly>(m + 1));  // coefficient of x0^(m-i) x1^i
    for (std::size_t comp = 0; comp < 2; ++comp)
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (const auto& [mon, c] : basis[j][comp].terms())
                coef[comp][mon.exponents[1]] = coef[comp][mon.exponents[1]] + ParamPoly::parameter(j, c);
    std::vector<std::vector<ParamPoly>> s(size, std::vector<ParamPoly>(size));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= m; ++i) {
            s[r][r + i] = coef[0][i];
            s[m + r][r + i] = coef[1][i];
        }
    return berkowitz_determinant(s);
}

constexpr std::size_t kSymbolicParameterLimit = 6;
constexpr std::size_t kGridLimit = 400;

} // namespace

EigenspaceVerdict regular_member(const std::vector<std::vector<Form>>& basis, std::optional<std::vector<Form>>* witness,
                                 std::string* method) {
    require(!basis.empty(), "invalid-argument", "empty basis");
    const std::size_t k = basis.size();
    const std::size_t r = basis.front().size() - 1;
    const auto found = [&](std::vector<Form> t, const char* how) {
        if (witness) *witness = normalize_tuple(std::move(t));
        if (method) *method = how;
        return EigenspaceVerdict::ContainsRegularMap;
    };

    for (const auto& p : specialization_points(k)) {
        auto t = combine(basis, p);
        if (all_zero(t)) continue;
        if (certify_components(t).verdict == Regularity::CertifiedRegular) return found(std::move(t), "specialization");
    }

    const std::size_t n = basis.front().front().num_vars();
    if (r == 1 && n == 2) {
        if (k <= kSymbolicParameterLimit) {
            const ParamPoly res = symbolic_resultant(basis);
            if (res.is_zero()) {
                if (method) *method = "symbolic-resultant";
                return EigenspaceVerdict::ContainsNoRegularMap;
            }
            // a nonzero polynomial of degree d is nonzero somewhere on {0..d}^k
            const unsigned d = res.total_degree();
            std::vector<FieldElement> p(k, FieldElement(0));
            std::vector<unsigned> idx(k, 0);
            for (;;) {
                for (std::size_t j = 0; j < k; ++j) p[j] = FieldElement(static_cast<long>(idx[j]));
                if (!res.evaluate(p).is_zero()) return found(combine(basis, p), "symbolic-resultant");
                std::size_t j = 0;
                while (j < k && idx[j] == d) idx[j++] = 0;
                if (j == k) break;
                ++idx[j];
            }
            throw InternalError("nonzero resultant polynomial vanished on a full grid");
        }
    } else {
        // the resultant has total degree (r+1) m^r in the parameters; vanishing
        // on {0..d}^k forces it to be zero
        const unsigned m = basis.front().front().degree();
        std::size_t d = r + 1;
        for (std::size_t i = 0; i < r; ++i) d *= m;
        std::size_t cells = 1;
        bool small = true;
        for (std::size_t j = 0; j < k && small; ++j) {
            cells *= d + 1;
            small = cells <= kGridLimit;
        }
        if (small) {
            std::vector<unsigned> idx(k, 0);
            std::vector<FieldElement> p(k, FieldElement(0));
            bool decided = true;
            for (;;) {
                for (std::size_t j = 0; j < k; ++j) p[j] = FieldElement(static_cast<long>(idx[j]));
                auto t = combine(basis, p);
                if (!all_zero(t)) {
                    const auto cert = certify_components(t);
                    if (cert.verdict == Regularity::CertifiedRegular) return found(std::move(t), "grid");
                    if (cert.verdict == Regularity::Unchecked) decided = false;
                }
                std::size_t j = 0;
                while (j < k && idx[j] == d) idx[j++] = 0;
                if (j == k) break;
                ++idx[j];
            }
            if (decided) {
                if (method) *method = "grid";
                return EigenspaceVerdict::ContainsNoRegularMap;
            }
        }
    }
    if (method) *method = "none";
    return EigenspaceVerdict::Undecided;
}

FixedMapsReport fixed_maps(const FieldMatrix& g, unsigned degree) {
    require(degree >= 1, "invalid-argument", "degree must be at least 1");
    const FieldMatrix op = coefficient_operator(g, degree);
    const auto n = static_cast<std::size_t>(g.rows());
    FixedMapsReport out;
    out.characteristic_polynomial = characteristic_polynomial(op);

    std::vector<FieldElement> candidates;
    for (const auto& q : rational_roots(out.characteristic_polynomial)) candidates.emplace_back(q);
    bool triangular = true;
    for (Index i = 0; i < g.rows(); ++i)
        for (Index j = 0; j < i; ++j) triangular = triangular && g(i, j).is_zero();
    if (triangular) {
        for (const auto& mon : monomials_of_degree(n, degree)) {
            FieldElement scale(1);
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned e = 0; e < mon.exponents[i]; ++e)
                    scale *= g(static_cast<Index>(i), static_cast<Index>(i)).inverse();
            for (std::size_t i = 0; i < n; ++i)
                candidates.push_back(g(static_cast<Index>(i), static_cast<Index>(i)) * scale);
        }
    }

    Poly<FieldElement> rest = out.characteristic_polynomial;
    std::vector<FieldElement> seen;
    for (const auto& lambda : candidates) {
        if (std::find(seen.begin(), seen.end(), lambda) != seen.end()) continue;
        seen.push_back(lambda);
        Eigenspace es;
        es.eigenvalue = lambda;
        const auto lin = Poly<FieldElement>::linear_root(lambda);
        for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++es.algebraic_multiplicity;
        }
        if (es.algebraic_multiplicity == 0) throw InternalError("eigenvalue candidate is not a root");
        FieldMatrix shifted = op;
        for (Index i = 0; i < op.rows(); ++i) shifted(i, i) -= lambda;
        const FieldMatrix kernel = exact_nullspace(shifted);
        for (Index c = 0; c < kernel.cols(); ++c) {
            std::vector<FieldElement> v(static_cast<std::size_t>(kernel.rows()));
            for (Index i = 0; i < kernel.rows(); ++i) v[static_cast<std::size_t>(i)] = kernel(i, c);
            es.basis.push_back(tuple_from_coefficients(v, n, degree));
        }
        es.verdict = regular_member(es.basis, &es.witness, &es.method);
        out.eigenspaces.push_back(std::move(es));
    }
    out.remainder = std::move(rest);
    return out;
}

TorusAnalysis torus_weight_analysis(const std::vector<long>& exponents, const ProjectiveMap& f) {
    require(f.source_dim() == f.target_dim(), "dimension-mismatch", "torus action needs a self-map");
    require(exponents.size() == f.source_dim() + 1, "dimension-mismatch", "one weight per coordinate is required");
    TorusAnalysis out;
    out.profile.exponents = exponents;
    for (std::size_t i = 0; i < f.components().size(); ++i)
        for (const auto& [mon, c] : f.component(i).terms()) {
            long w = exponents[i];
            for (std::size_t j = 0; j < exponents.size(); ++j) w -= exponents[j] * static_cast<long>(mon.exponents[j]);
            out.profile.terms.push_back({i, mon, w});
        }
    out.fixed = std::all_of(out.profile.terms.begin(), out.profile.terms.end(),
                            [&](const WeightTerm& t) { return t.weight == out.profile.terms.front().weight; });
    return out;
}

std::string to_string(LimitTag t) {
    return t == LimitTag::RegularLimit ? "RegularLimit" : "ConstantOrDegenerate";
}

LimitResult one_param_limit(const ProjectiveMap& f, long c, long b) {
    require(f.source_dim() == 1 && f.target_dim() == 1, "dimension-mismatch", "limits are defined for self-maps of P^1");
    require(c != 0 || b != 0, "invalid-argument", "the one-parameter subgroup is trivial");
    const long m = f.degree();
    std::vector<WeightTerm> terms;
    for (std::size_t comp = 0; comp < 2; ++comp)
        for (const auto& [mon, coef] : f.component(comp).terms()) {
            const long i = mon.exponents[0];
            const long w = (2 * i - m) * c + (comp == 0 ? -b : b);
            terms.push_back({comp, mon, w});
        }
    LimitResult out;
    out.minimal_weight = std::numeric_limits<long>::max();
    for (const auto& t : terms) out.minimal_weight = std::min(out.minimal_weight, t.weight);
    out.limit = {Form(2, f.degree()), Form(2, f.degree())};
    for (const auto& t : terms)
        if (t.weight == out.minimal_weight) {
            out.surviving_terms.push_back(t);
            out.limit[t.component].add_term(t.monomial, f.component(t.component).coefficient(t.monomial));
        }
    out.limit = normalize_tuple(std::move(out.limit));
    out.regularity = certify_components(out.limit).verdict;
    out.tag = out.regularity == Regularity::CertifiedRegular ? LimitTag::RegularLimit : LimitTag::ConstantOrDegenerate;
    return out;
}

} // namespace projendo
