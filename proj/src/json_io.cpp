#include "projendo/json_io.hpp"

#include "projendo/error.hpp"

#include <cmath>

namespace projendo::io {

namespace {

[[noreturn]] void schema(const std::string& detail) { fail("schema-violation", detail); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) schema(std::string("missing key '") + key + "'");
    return *it;
}

const Json& array_member(const Json& j, const char* key) {
    const Json& a = member(j, key);
    if (!a.is_array()) schema(std::string("'") + key + "' must be an array");
    return a;
}

std::size_t count_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        schema(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

} // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("malformed-json", e.what());
    }
}

Json to_json(const Rational& q) { return projendo::to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            schema(std::string("bad rational: ") + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    schema("rationals are strings \"p/q\" or integers");
}

Json field_to_json(const FieldPtr& f) {
    Json out = Json::array();
    for (const auto& c : f->modulus()) out.push_back(to_json(c));
    return out;
}

FieldPtr field_from_json(const Json& j) {
    if (!j.is_array()) schema("a field is its minimal polynomial as a coefficient array, low to high");
    std::vector<Rational> mu;
    for (const auto& c : j) mu.push_back(rational_from_json(c));
    return NumberField::make(std::move(mu));
}

Json to_json(const FieldElement& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_json(c));
    return Json{{"field", field_to_json(x.field())}, {"coords", std::move(coords)}};
}

FieldElement element_from_json(const Json& j, const FieldPtr& field) {
    if (j.is_string() || j.is_number_integer()) return FieldElement(rational_from_json(j)).in_field(field);
    const FieldPtr f = field_from_json(member(j, "field"));
    std::vector<Rational> coords;
    for (const auto& c : array_member(j, "coords")) coords.push_back(rational_from_json(c));
    if (coords.size() != f->degree()) schema("coordinate count must equal the field degree");
    const FieldElement x(f, std::move(coords));
    return common_field(field, f) == f ? x : x.in_field(field);
}

Json to_json(const Form& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back(Json::array({m.exponents, to_json(c)}));
    return Json{{"vars", f.num_vars()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const Json& j) {
    const std::size_t n = count_member(j, "vars");
    const std::size_t m = count_member(j, "degree");
    if (n < 1) schema("a form needs at least one variable");
    Form out(n, static_cast<unsigned>(m));
    for (const auto& t : array_member(j, "terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array()) schema("a term is [[exponents], coefficient]");
        Monomial mon;
        for (const auto& e : t[0]) {
            if (!e.is_number_integer() || e.get<long long>() < 0) schema("exponents must be non-negative integers");
            mon.exponents.push_back(e.get<unsigned>());
        }
        if (mon.exponents.size() != n || mon.degree() != m) schema("term exponents do not match vars and degree");
        out.add_term(mon, element_from_json(t[1]));
    }
    return out;
}

Json tuple_to_json(const std::vector<Form>& tuple) {
    Json out = Json::array();
    for (const auto& f : tuple) out.push_back(to_json(f));
    return out;
}

Json to_json(const ProjectiveMap& f) {
    return Json{{"degree", f.degree()},
                {"source_dim", f.source_dim()},
                {"target_dim", f.target_dim()},
                {"components", tuple_to_json(f.components())},
                {"regularity", to_string(f.regularity())}};
}

ProjectiveMap map_from_json(const Json& j) {
    std::vector<Form> comps;
    for (const auto& c : array_member(j, "components")) comps.push_back(form_from_json(c));
    if (comps.empty()) schema("a map needs components");
    if (j.contains("degree") && count_member(j, "degree") != comps.front().degree()) schema("degree disagrees with components");
    if (j.contains("source_dim") && count_member(j, "source_dim") + 1 != comps.front().num_vars())
        schema("source_dim disagrees with components");
    if (j.contains("target_dim") && count_member(j, "target_dim") + 1 != comps.size())
        schema("target_dim disagrees with components");
    Regularity reg = Regularity::Unchecked;
    if (j.contains("regularity")) {
        if (!j["regularity"].is_string()) schema("regularity must be a string");
        reg = parse_regularity(j["regularity"].get<std::string>());
    }
    return make_map(std::move(comps), ContentPolicy::Keep).with_regularity(reg);
}

Json to_json(const FieldMatrix& m) {
    FieldPtr f = NumberField::rationals();
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            f = common_field(f, m(i, k).field());
            row.push_back(to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"field", field_to_json(f)}, {"rows", std::move(rows)}};
}

FieldMatrix matrix_from_json(const Json& j) {
    const FieldPtr f = j.contains("field") ? field_from_json(j["field"]) : NumberField::rationals();
    const Json& rows = array_member(j, "rows");
    if (rows.empty() || !rows[0].is_array() || rows[0].empty()) schema("a matrix needs non-empty rows");
    const auto n = static_cast<Index>(rows.size()), c = static_cast<Index>(rows[0].size());
    FieldMatrix out(n, c);
    for (Index i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != c) schema("matrix rows differ in length");
        for (Index k = 0; k < c; ++k) out(i, k) = element_from_json(row[static_cast<std::size_t>(k)], f);
    }
    return out;
}

Json group_to_json(const FiniteMatrixGroup& g) {
    Json gens = Json::array();
    for (const auto& x : g.generators) {
        Json flat = Json::array();
        for (Index i = 0; i < x.rows(); ++i)
            for (Index k = 0; k < x.cols(); ++k) flat.push_back(to_json(x(i, k)));
        gens.push_back(std::move(flat));
    }
    return Json{{"field", field_to_json(g.field)}, {"dim", g.dim}, {"generators", std::move(gens)}, {"cap", kDefaultGroupCap}};
}

FiniteMatrixGroup group_from_json(const Json& j) {
    const FieldPtr f = j.contains("field") ? field_from_json(j["field"]) : NumberField::rationals();
    const std::size_t cap = j.contains("cap") ? count_member(j, "cap") : kDefaultGroupCap;
    std::vector<FieldMatrix> gens;
    Index dim = j.contains("dim") ? static_cast<Index>(count_member(j, "dim")) : 0;
    for (const auto& flat : array_member(j, "generators")) {
        if (!flat.is_array() || flat.empty()) schema("a generator is a non-empty row-major entry list");
        const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
        if (n * n != static_cast<Index>(flat.size())) schema("a generator must have a square number of entries");
        FieldMatrix x(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index k = 0; k < n; ++k) x(i, k) = element_from_json(flat[static_cast<std::size_t>(i * n + k)], f);
        gens.push_back(std::move(x));
    }
    if (gens.empty() && dim == 0) schema("a group without generators needs 'dim'");
    return enumerate_group(gens, cap, dim);
}

} // namespace projendo::io
