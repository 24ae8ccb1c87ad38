// projendo: command-line front end. Results are JSON on stdout (or --output),
// written once at the end. Exit 0 on success, 2 on bad input, 1 on internal
// failure.
#include "projendo/acceptance.hpp"
#include "projendo/chow.hpp"
#include "projendo/error.hpp"
#include "projendo/git_diagnostics.hpp"
#include "projendo/hom_counting.hpp"
#include "projendo/invariants.hpp"
#include "projendo/json_io.hpp"
#include "projendo/ramification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace projendo;
using io::Json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string output;
    bool verbose = false;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "io-error", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return io::parse(ss.str());
}

Json poly_to_json(const Poly<FieldElement>& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(io::to_json(c));
    return out;
}

Json factorization_to_json(const BinaryFormFactorization& fac) {
    Json factors = Json::array();
    for (const auto& f : fac.factors)
        factors.push_back({{"form", io::to_json(f.form)},
                           {"multiplicity", f.multiplicity},
                           {"irreducibility_certified", f.irreducibility_certified}});
    return {{"constant", io::to_json(fac.constant)}, {"factors", std::move(factors)}};
}

Json weight_terms_to_json(const std::vector<WeightTerm>& terms) {
    Json out = Json::array();
    for (const auto& t : terms)
        out.push_back({{"component", t.component}, {"monomial", t.monomial.exponents}, {"weight", t.weight}});
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ProjectiveMap certified(const ProjectiveMap& f) {
    // regularity claims in input files are re-derived, never trusted
    return certify_regular(f.with_regularity(Regularity::Unchecked));
}

std::vector<long> parse_exponents(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            require(used == item.size(), "parse-error", "bad exponent '" + item + "'");
        } catch (const std::logic_error&) {
            fail("parse-error", "bad exponent '" + item + "'");
        }
    }
    require(!out.empty(), "parse-error", "no exponents given");
    return out;
}

chow::ChowClass parse_fiber_degree(const std::string& text) {
    if (text == "k") return chow::k();
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        require(used == text.size(), "parse-error", "fiber degree must be an integer or 'k'");
        return chow::ChowClass(v);
    } catch (const std::logic_error&) {
        fail("parse-error", "fiber degree must be an integer or 'k'");
    }
}

std::string acceptance_table(const std::vector<CriterionResult>& rows, bool* all_passed) {
    std::ostringstream out;
    *all_passed = true;
    for (const auto& r : rows) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        *all_passed = *all_passed && r.passed;
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with endomorphisms of projective space"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--output", g.output, "Write the result to this file instead of stdout");
    app.add_flag("--verbose", g.verbose, "Include extra detail");

    std::string group_path, map_path, matrix_path, exponents, family = "cyclic", check, expand, fiber = "1";
    unsigned degree = 0;
    std::size_t budget = kDefaultSearchBudget;
    long c = 0, b = 0, n = 0, genus = 1;
    bool oracle = false, mutate = false;

    auto* equivariant = app.add_subcommand("equivariant", "Equivariant endomorphism from invariant forms");
    equivariant->add_option("--group", group_path)->required();
    equivariant->add_option("--degree", degree, "Degree of the invariant form")->required();
    equivariant->add_option("--budget", budget)->capture_default_str();

    auto* invariants = app.add_subcommand("invariants", "Basis of invariant forms");
    invariants->add_option("--group", group_path)->required();
    invariants->add_option("--degree", degree)->required();

    auto* classify = app.add_subcommand("classify", "Orbit type of a self-map of P^1");
    classify->add_option("--map", map_path)->required();
    auto* ramification = app.add_subcommand("ramification", "Ramification form and its factorization");
    ramification->add_option("--map", map_path)->required();
    auto* regular = app.add_subcommand("regular", "Certify that a map has no base points");
    regular->add_option("--map", map_path)->required();

    auto* fixed = app.add_subcommand("fixed-maps", "Maps fixed by conjugation with a matrix");
    fixed->add_option("--matrix", matrix_path)->required();
    fixed->add_option("--degree", degree)->required();

    auto* torus = app.add_subcommand("torus-check", "Weights of a map under a diagonal subgroup");
    torus->add_option("--exponents", exponents, "Comma-separated weights a_0,...,a_r")->required();
    torus->add_option("--map", map_path)->required();

    auto* limit = app.add_subcommand("limit", "lambda -> 0 limit under a one-parameter subgroup");
    limit->add_option("--map", map_path)->required();
    limit->add_option("-c", c)->required();
    limit->add_option("-b", b)->required();

    auto* homs = app.add_subcommand("count-homs", "Homomorphisms from a surface group into a finite group");
    homs->add_option("--family", family, "cyclic, dihedral, A4, S4, A5 or S3")->capture_default_str();
    homs->add_option("-n", n, "Parameter of cyclic and dihedral families");
    homs->add_option("--genus", genus)->capture_default_str();
    homs->add_flag("--oracle", oracle, "Count by exhaustive enumeration");

    auto* chow_cmd = app.add_subcommand("chow", "Chern-class identities in the Chow ring of P(E)");
    auto* check_opt = chow_cmd->add_option("--check", check, "Only 'all'");
    auto* expand_opt = chow_cmd->add_option("--expand", expand, "c2-twist, twist-degree or ramification");
    check_opt->excludes(expand_opt);
    chow_cmd->add_option("-k", fiber, "Fiber degree: an integer or 'k'")->capture_default_str();
    chow_cmd->add_flag("--mutate-xi-sign", mutate, "Flip the sign of the xi c1E term of the relation");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_flag("--mutate-xi-sign", mutate, "Also run the Chow table with a corrupted relation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    std::string out;
    int status = 0;
    try {
        if (*equivariant) {
            const auto grp = io::group_from_json(read_json_file(group_path));
            const auto r = equivariant_endomorphism(grp, degree, g.seed, budget);
            Json transcript = Json::array();
            for (std::size_t i = 0; i < r.transcript.size(); ++i) {
                Json row{{"element", i}, {"pass", static_cast<bool>(r.transcript[i])}};
                if (g.verbose) row["matrix"] = io::to_json(grp.elements[i]);
                transcript.push_back(std::move(row));
            }
            Json j{{"group_order", grp.order()},
                   {"seed", g.seed},
                   {"invariant", io::to_json(r.invariant)},
                   {"dual_invariant", io::to_json(r.dual_invariant)},
                   {"map", io::to_json(r.map)},
                   {"transcript", std::move(transcript)},
                   {"verified", true}};
            if (g.verbose) {
                j["gradient"] = io::to_json(r.gradient);
                j["dual_gradient"] = io::to_json(r.dual_gradient);
            }
            out = dump(j);
        } else if (*invariants) {
            const auto basis = invariant_basis(io::group_from_json(read_json_file(group_path)), degree);
            Json forms = Json::array();
            for (const auto& f : basis.basis) forms.push_back(io::to_json(f));
            out = dump({{"degree", degree}, {"dim", basis.dim()}, {"basis", std::move(forms)}});
        } else if (*classify) {
            const auto f = certified(io::map_from_json(read_json_file(map_path)));
            const auto o = classify_orbit(f);
            out = dump({{"tag", to_string(o.tag)},
                        {"point_count", o.point_count},
                        {"witness", factorization_to_json(o.witness)},
                        {"map", io::to_json(f)}});
        } else if (*ramification) {
            const auto f = certified(io::map_from_json(read_json_file(map_path)));
            const Form r = ramification_form(f);
            out = dump({{"ramification", io::to_json(r)},
                        {"factorization", r.degree() == 0 ? Json(nullptr) : factorization_to_json(squarefree_factorization(r))}});
        } else if (*regular) {
            const auto f = io::map_from_json(read_json_file(map_path));
            const auto cert = certify_components(f.components());
            Json witness = Json(nullptr);
            if (!cert.witness.empty()) {
                witness = Json::array();
                for (const auto& x : cert.witness) witness.push_back(io::to_json(x));
            }
            out = dump({{"regularity", to_string(cert.verdict)},
                        {"method", to_string(cert.method)},
                        {"common_zero", std::move(witness)},
                        {"map", io::to_json(f.with_regularity(cert.verdict))}});
        } else if (*fixed) {
            const auto rep = fixed_maps(io::matrix_from_json(read_json_file(matrix_path)), degree);
            Json spaces = Json::array();
            for (const auto& es : rep.eigenspaces) {
                Json basis = Json::array();
                for (const auto& v : es.basis) basis.push_back(io::tuple_to_json(v));
                spaces.push_back({{"eigenvalue", io::to_json(es.eigenvalue)},
                                  {"algebraic_multiplicity", es.algebraic_multiplicity},
                                  {"basis", std::move(basis)},
                                  {"verdict", to_string(es.verdict)},
                                  {"method", es.method},
                                  {"witness", es.witness ? io::tuple_to_json(*es.witness) : Json(nullptr)}});
            }
            Json j{{"degree", degree}, {"eigenspaces", std::move(spaces)}, {"remainder", poly_to_json(rep.remainder)}};
            if (g.verbose) j["characteristic_polynomial"] = poly_to_json(rep.characteristic_polynomial);
            out = dump(j);
        } else if (*torus) {
            const auto a = torus_weight_analysis(parse_exponents(exponents), io::map_from_json(read_json_file(map_path)));
            out = dump({{"exponents", a.profile.exponents}, {"fixed", a.fixed}, {"weights", weight_terms_to_json(a.profile.terms)}});
        } else if (*limit) {
            const auto r = one_param_limit(io::map_from_json(read_json_file(map_path)), c, b);
            out = dump({{"tag", to_string(r.tag)},
                        {"limit", {{"degree", r.limit.front().degree()},
                                   {"source_dim", 1},
                                   {"target_dim", 1},
                                   {"components", io::tuple_to_json(r.limit)},
                                   {"regularity", to_string(r.regularity)}}},
                        {"minimal_weight", r.minimal_weight},
                        {"surviving_terms", weight_terms_to_json(r.surviving_terms)}});
        } else if (*homs) {
            const GroupFamily fam = parse_group_family(family, &n);
            if (oracle) {
                const auto count = brute_force_homs(builtin_perm_group(fam, n), genus);
                out = g.verbose ? dump({{"family", to_string(fam)}, {"n", n}, {"genus", genus}, {"method", "enumeration"},
                                        {"count", std::to_string(count)}})
                                : std::to_string(count) + "\n";
            } else {
                const auto data = builtin_group_data(fam, n);
                const Rational count = count_homs(data, genus);
                if (g.verbose) {
                    Json terms = Json::array();
                    for (auto d : data.irrep_degrees) {
                        Rational t(Integer(static_cast<unsigned long>(data.order)), Integer(static_cast<unsigned long>(d)));
                        t.canonicalize();
                        terms.push_back({{"irrep_degree", d}, {"order_over_degree", io::to_json(t)}});
                    }
                    out = dump({{"group", data.name},
                                {"order", data.order},
                                {"irrep_degrees", data.irrep_degrees},
                                {"genus", genus},
                                {"exponent", 2 * genus - 2},
                                {"terms", std::move(terms)},
                                {"count", io::to_json(count)}});
                } else {
                    out = to_string(count) + "\n";
                }
            }
        } else if (*chow_cmd) {
            const chow::Relation rel = mutate ? chow::Relation{1, -1} : chow::Relation{};
            if (!expand.empty()) {
                const auto kv = parse_fiber_degree(fiber);
                if (expand == "c2-twist") out = chow::to_string(chow::c2_twist_expand(kv, chow::D(), rel)) + "\n";
                else if (expand == "twist-degree") out = chow::to_string(chow::solve_twist_degree(kv, rel)) + "\n";
                else if (expand == "ramification") out = chow::to_string(chow::ramification_class(kv, rel)) + "\n";
                else fail("invalid-argument", "unknown expansion '" + expand + "'");
            } else {
                require(check.empty() || check == "all", "invalid-argument", "only '--check all' is supported");
                bool ok = true;
                std::ostringstream table;
                for (const auto& row : chow::check_all(rel)) {
                    table << (row.passed ? "PASS " : "FAIL ") << row.name << ": " << row.detail << "\n";
                    ok = ok && row.passed;
                }
                out = table.str();
                status = ok ? 0 : 1;
            }
        } else if (*selftest) {
            bool ok = false;
            out = acceptance_table(run_acceptance(), &ok);
            if (mutate) {
                bool caught = false;
                for (const auto& row : chow::check_all(chow::Relation{1, -1})) caught = caught || !row.passed;
                out += std::string(caught ? "PASS" : "FAIL") + " mutation: corrupted xi relation is " +
                       (caught ? "detected" : "not detected") + "\n";
                ok = ok && caught;
            }
            status = ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cout << Json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (g.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream file(g.output);
        if (!file) {
            std::cout << Json{{"error", "io-error"}, {"detail", "cannot write " + g.output}}.dump() << "\n";
            return 2;
        }
        file << out;
    }
    return status;
}
