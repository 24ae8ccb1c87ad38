#include "projendo/resultant.hpp"

#include "projendo/error.hpp"
#include "projendo/modular.hpp"

namespace projendo {

std::string to_string(Regularity r) {
    switch (r) {
    case Regularity::CertifiedRegular: return "certified-regular";
    case Regularity::CertifiedIrregular: return "certified-irregular";
    case Regularity::Unchecked: return "unchecked";
    }
    throw InternalError("unknown regularity");
}

Regularity parse_regularity(std::string_view s) {
    if (s == "certified-regular") return Regularity::CertifiedRegular;
    if (s == "certified-irregular") return Regularity::CertifiedIrregular;
    if (s == "unchecked") return Regularity::Unchecked;
    fail("schema-violation", "unknown regularity '" + std::string(s) + "'");
}

std::string to_string(CertificateMethod m) {
    switch (m) {
    case CertificateMethod::Sylvester: return "sylvester";
    case CertificateMethod::ModularRank: return "modular-rank";
    case CertificateMethod::ExactRank: return "exact-rank";
    case CertificateMethod::Witness: return "witness";
    case CertificateMethod::DimensionCount: return "dimension-count";
    case CertificateMethod::None: return "none";
    }
    throw InternalError("unknown certificate method");
}

namespace {

// descending powers of x0
std::vector<FieldElement> binary_coeffs(const Form& f) {
    std::vector<FieldElement> c(f.degree() + 1, FieldElement(0));
    for (const auto& [m, v] : f.terms()) c[f.degree() - m.exponents[0]] = v;
    return c;
}

void require_binary(const Form& f) { require(f.num_vars() == 2, "non-binary", "expected a binary form"); }

} // namespace

FieldMatrix sylvester_matrix(const Form& f, const Form& g) {
    require_binary(f);
    require_binary(g);
    const Index a = f.degree(), b = g.degree();
    const auto fc = binary_coeffs(f), gc = binary_coeffs(g);
    FieldMatrix s = FieldMatrix::Zero(a + b, a + b);
    for (Index i = 0; i < b; ++i)
        for (Index j = 0; j <= a; ++j) s(i, i + j) = fc[static_cast<std::size_t>(j)];
    for (Index i = 0; i < a; ++i)
        for (Index j = 0; j <= b; ++j) s(b + i, i + j) = gc[static_cast<std::size_t>(j)];
    return s;
}

FieldElement sylvester_resultant(const Form& f, const Form& g) {
    return exact_determinant(sylvester_matrix(f, g));
}

namespace {

struct MacaulayShape {
    std::vector<Monomial> multipliers;
    std::vector<Monomial> columns;
};

MacaulayShape macaulay_shape(std::span<const Form> forms) {
    require(!forms.empty(), "invalid-argument", "no forms given");
    const std::size_t n = forms.front().num_vars();
    const unsigned m = forms.front().degree();
    for (const auto& f : forms)
        require(f.num_vars() == n && f.degree() == m, "shape-mismatch", "forms differ in shape");
    const unsigned big_d = static_cast<unsigned>(n) * (m - 1) + 1;
    return {monomials_of_degree(n, big_d - m), monomials_of_degree(n, big_d)};
}

} // namespace

FieldMatrix macaulay_matrix(std::span<const Form> forms) {
    const auto shape = macaulay_shape(forms);
    const auto rows = static_cast<Index>(shape.multipliers.size() * forms.size());
    FieldMatrix a = FieldMatrix::Zero(rows, static_cast<Index>(shape.columns.size()));
    Index row = 0;
    for (const auto& f : forms) {
        for (const auto& q : shape.multipliers) {
            for (const auto& [e, c] : f.terms()) a(row, static_cast<Index>(monomial_index(q * e))) = c;
            ++row;
        }
    }
    return a;
}

std::optional<std::vector<FieldElement>> small_common_zero(std::span<const Form> forms, long bound) {
    if (forms.empty()) return std::nullopt;
    const std::size_t n = forms.front().num_vars();
    std::vector<long> v(n, -bound);
    // normalized representatives only: first nonzero coordinate equals 1
    while (true) {
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead < n && v[lead] == 1) {
            std::vector<FieldElement> pt;
            pt.reserve(n);
            for (long x : v) pt.emplace_back(x);
            bool all = true;
            for (const auto& f : forms) {
                if (!evaluate(f, pt).is_zero()) {
                    all = false;
                    break;
                }
            }
            if (all) return pt;
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (v[k] < bound) {
                ++v[k];
                break;
            }
            v[k] = -bound;
            if (k == 0) return std::nullopt;
        }
    }
}

RegularityCertificate certify_components(std::span<const Form> forms, std::size_t exact_column_limit) {
    require(!forms.empty(), "invalid-argument", "no forms given");
    const std::size_t n = forms.front().num_vars();
    const unsigned m = forms.front().degree();
    for (const auto& f : forms)
        require(f.num_vars() == n && f.degree() == m, "shape-mismatch", "forms differ in shape");

    bool all_zero = true;
    for (const auto& f : forms) all_zero = all_zero && f.is_zero();
    if (all_zero) return {Regularity::CertifiedIrregular, CertificateMethod::DimensionCount, {}};
    if (m == 0) return {Regularity::CertifiedRegular, CertificateMethod::DimensionCount, {}};

    if (n == 2 && forms.size() == 2) {
        const bool regular = !sylvester_resultant(forms[0], forms[1]).is_zero();
        return {regular ? Regularity::CertifiedRegular : Regularity::CertifiedIrregular, CertificateMethod::Sylvester,
                {}};
    }
    if (forms.size() < n) {
        auto w = small_common_zero(forms);
        return {Regularity::CertifiedIrregular, CertificateMethod::DimensionCount, w ? *w : std::vector<FieldElement>{}};
    }

    const auto shape = macaulay_shape(forms);
    const std::size_t rows = shape.multipliers.size() * forms.size(), cols = shape.columns.size();
    FieldPtr field = NumberField::rationals();
    for (const auto& f : forms) field = common_field(field, f.field());

    // sparse rows: (column, coefficient) for each form, shifted per multiplier
    for (const auto& emb : prime_embeddings(*field, 3)) {
        std::vector<std::vector<std::pair<std::size_t, u64>>> reduced(forms.size());
        bool ok = true;
        for (std::size_t i = 0; i < forms.size() && ok; ++i) {
            for (const auto& [e, c] : forms[i].terms()) {
                auto v = reduce(c, emb);
                if (!v) {
                    ok = false;
                    break;
                }
                reduced[i].emplace_back(0, *v);
            }
        }
        if (!ok) continue;  // a denominator vanishes mod p
        std::vector<u64> a(rows * cols, 0);
        std::size_t row = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            for (const auto& q : shape.multipliers) {
                std::size_t t = 0;
                for (const auto& [e, c] : forms[i].terms()) {
                    a[row * cols + monomial_index(q * e)] = reduced[i][t].second;
                    ++t;
                }
                ++row;
            }
        }
        if (rank_mod_p(std::move(a), rows, cols, emb.p) == cols)
            return {Regularity::CertifiedRegular, CertificateMethod::ModularRank, {}};
    }

    if (auto w = small_common_zero(forms)) return {Regularity::CertifiedIrregular, CertificateMethod::Witness, *w};

    if (cols <= exact_column_limit) {
        const bool regular = exact_rank(macaulay_matrix(forms)) == static_cast<Index>(cols);
        return {regular ? Regularity::CertifiedRegular : Regularity::CertifiedIrregular, CertificateMethod::ExactRank,
                {}};
    }
    return {Regularity::Unchecked, CertificateMethod::None, {}};
}

} // namespace projendo
