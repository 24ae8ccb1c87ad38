#include "projendo/acceptance.hpp"

#include "projendo/chow.hpp"
#include "projendo/error.hpp"
#include "projendo/git_diagnostics.hpp"
#include "projendo/hom_counting.hpp"
#include "projendo/invariants.hpp"
#include "projendo/ramification.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace projendo {

namespace {

// Collects failed checks of one criterion.
struct Checker {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Form x0() { return Form::variable(2, 0); }
Form x1() { return Form::variable(2, 1); }

FieldMatrix small_invertible(Rng& rng, Index n, long bound) {
    for (;;) {
        FieldMatrix g(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) g(i, j) = FieldElement(draw(rng, -bound, bound));
        if (!exact_determinant(g).is_zero()) return g;
    }
}

FieldElement random_element(Rng& rng, const FieldPtr& f) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f->degree(); ++i) {
        Rational q(draw(rng, -6, 6), static_cast<unsigned long>(draw(rng, 1, 4)));
        q.canonicalize();
        c.push_back(q);
    }
    return FieldElement(f, std::move(c));
}

Form random_form(Rng& rng, std::size_t n, unsigned m) {
    Form f(n, m);
    for (const auto& mon : monomials_of_degree(n, m))
        if (draw(rng, 0, 9) < 7) f.add_term(mon, FieldElement(draw(rng, -4, 4)));
    return f;
}

// A certified-regular binary map of degree m.
ProjectiveMap random_regular(Rng& rng, unsigned m) {
    for (;;) {
        try {
            auto f = certify_regular(make_map({random_form(rng, 2, m), random_form(rng, 2, m)}));
            if (f.is_regular() && f.degree() == m) return f;
        } catch (const Error&) {
        }
    }
}

void criterion_equivariant(Checker& check) {
    const std::vector<std::pair<std::string, FiniteMatrixGroup>> cases{{"signed swap", signed_swap_group()},
                                                                       {"cube rotations", cube_rotation_group()}};
    for (const auto& [name, g] : cases) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = equivariant_endomorphism(g, 4);
        check(certify_regular(r.map).is_regular(), name + ": map not certified regular");
        check(r.map.degree() == 9, name + ": degree " + std::to_string(r.map.degree()) + " != 9");
        check(r.transcript.size() == g.order(), name + ": transcript does not cover the group");
        check(verify_equivariance(r.map, g, EquivarianceMode::Conjugation), name + ": equivariance fails");
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check(secs < 10, name + ": took " + std::to_string(secs) + " s, limit 10 s");
    }
}

void criterion_classification(Checker& check) {
    const auto torus = make_map({pow(x0(), 3), pow(x1(), 3)});
    const auto boundary = make_map({pow(x0(), 3) + pow(x1(), 3), pow(x1(), 3)});
    const auto closed = make_map({pow(x0(), 3) + pow(x1(), 3), x0() * x1() * x1()});
    const std::vector<std::tuple<std::string, ProjectiveMap, OrbitTag>> cases{
        {"(x0^3, x1^3)", torus, OrbitTag::TorusForm},
        {"(x0^3 + x1^3, x1^3)", boundary, OrbitTag::Boundary},
        {"(x0^3 + x1^3, x0 x1^2)", closed, OrbitTag::Closed}};
    for (const auto& [name, f, tag] : cases) {
        const auto got = classify_orbit(f).tag;
        check(got == tag, name + " -> " + to_string(got) + ", expected " + to_string(tag));
    }
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial)
        for (const auto& [name, f, tag] : cases) {
            const FieldMatrix g = small_invertible(rng, 2, 3), h = small_invertible(rng, 2, 3);
            const auto before = classify_orbit(f).tag;
            const auto after = classify_orbit(make_map(act_on_tuple(exact_inverse(g), h, f.components()))).tag;
            if (after != before) {
                check(false, name + ": classification changed under a random (g, h) in trial " + std::to_string(trial));
                return;
            }
        }
}

void criterion_limit(Checker& check) {
    const auto r = one_param_limit(make_map({pow(x0(), 3) + pow(x1(), 3), pow(x1(), 3)}), -1, -3);
    check(r.tag == LimitTag::RegularLimit, "limit is not regular");
    check(r.limit == std::vector<Form>{pow(x0(), 3), pow(x1(), 3)}, "limit is not (x0^3, x1^3)");
    check(classify_orbit(make_map(r.limit)).tag == OrbitTag::TorusForm, "limit is not TorusForm");
    for (unsigned m = 1; m <= 6; ++m) {
        const auto d = one_param_limit(make_map({pow(x0(), m), pow(x1(), m)}), 0, 1);
        check(d.tag == LimitTag::ConstantOrDegenerate, "(c, b) = (0, 1) is not degenerate at m = " + std::to_string(m));
    }
}

void criterion_unipotent(Checker& check) {
    FieldMatrix j = FieldMatrix::Identity(2, 2);
    j(0, 1) = FieldElement(1);
    for (unsigned m : {3u, 4u, 5u}) {
        const auto rep = fixed_maps(j, m);
        check(!rep.eigenspaces.empty(), "no base-field eigenspace at m = " + std::to_string(m));
        for (const auto& es : rep.eigenspaces)
            check(es.verdict == EigenspaceVerdict::ContainsNoRegularMap,
                  "m = " + std::to_string(m) + ": eigenspace verdict " + to_string(es.verdict));
    }
    const auto lin = fixed_maps(j, 1);
    bool identity_found = false;
    for (const auto& es : lin.eigenspaces) {
        if (es.verdict != EigenspaceVerdict::ContainsRegularMap) continue;
        // the identity lies in the eigenspace iff conjugation fixes it with this eigenvalue
        for (const auto& v : es.basis)
            identity_found = identity_found || normalize_tuple(v) == identity_map(1).components();
        if (es.witness) identity_found = identity_found || stabilizer_check(make_map(*es.witness), j);
    }
    check(identity_found, "m = 1: the identity is not reported as a regular fixed map");
    check(stabilizer_check(identity_map(1), j), "m = 1: the identity is not fixed");
}

void criterion_torus(Checker& check) {
    for (unsigned m = 2; m <= 8; ++m)
        check(!torus_weight_analysis({0, 1}, make_map({pow(x0(), m), pow(x1(), m)})).fixed,
              "(x0^m, x1^m) fixed at m = " + std::to_string(m));
    const auto irr = make_map({x0() * x0(), x0() * x1()}, ContentPolicy::Keep);
    check(torus_weight_analysis({1, 2}, irr).fixed, "(x0^2, x0 x1) not fixed under a = (1, 2)");
    check(sylvester_resultant(irr.component(0), irr.component(1)).is_zero(), "Res(x0^2, x0 x1) != 0");
}

void criterion_counting(Checker& check) {
    const auto both = [&](GroupFamily fam, long n, long genus, long expected, const std::string& name) {
        const Rational formula = count_homs(builtin_group_data(fam, n), genus);
        const std::uint64_t brute = brute_force_homs(builtin_perm_group(fam, n), genus);
        check(formula == expected && brute == static_cast<std::uint64_t>(expected),
              name + ": formula " + to_string(formula) + ", enumeration " + std::to_string(brute) + ", expected " +
                  std::to_string(expected));
    };
    both(GroupFamily::Cyclic, 2, 1, 4, "C2, g=1");
    both(GroupFamily::A4, 0, 1, 48, "A4, g=1");
    both(GroupFamily::Dihedral, 3, 2, 486, "S3, g=2");
    both(GroupFamily::Cyclic, 3, 2, 81, "C3, g=2");
    const std::vector<std::pair<GroupFamily, long>> builtins{
        {GroupFamily::Cyclic, 1},   {GroupFamily::Cyclic, 7}, {GroupFamily::Dihedral, 3}, {GroupFamily::Dihedral, 8},
        {GroupFamily::A4, 0},       {GroupFamily::S4, 0},     {GroupFamily::A5, 0}};
    for (const auto& [fam, n] : builtins) {
        const auto d = builtin_group_data(fam, n);
        check(count_homs(d, 0) == 1, d.name + ": g = 0 count is not 1");
        std::uint64_t sum = 0;
        for (auto x : d.irrep_degrees) sum += x * x;
        check(sum == d.order, d.name + ": Burnside identity fails");
    }
}

void criterion_chow(Checker& check) {
    for (const auto& row : chow::check_all()) check(row.passed, row.name + " (" + row.detail + ")");
}

void criterion_infrastructure(Checker& check) {
    Rng rng(99);
    const std::vector<FieldPtr> fields{NumberField::rationals(), NumberField::cyclotomic(4), NumberField::cyclotomic(5),
                                       NumberField::make({Rational(-2), Rational(0), Rational(1)})};
    int bad_field = 0, bad_euler = 0, bad_action = 0, bad_reynolds = 0, bad_ram = 0;
    for (int t = 0; t < 100; ++t) {
        const auto& f = fields[static_cast<std::size_t>(t) % fields.size()];
        const FieldElement a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
                  a * (b + c) == a * b + a * c && a + FieldElement(0) == a && a * FieldElement(1) == a;
        if (!a.is_zero()) ok = ok && a * a.inverse() == FieldElement(1);
        bad_field += !ok;
    }
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(draw(rng, 2, 4));
        const unsigned m = static_cast<unsigned>(draw(rng, 1, 5));
        const Form f = random_form(rng, n, m);
        Form euler(n, m);
        for (std::size_t i = 0; i < n; ++i) euler += Form::variable(n, i) * partial_derivative(f, i);
        bad_euler += euler != FieldElement(static_cast<long>(m)) * f;
    }
    for (int t = 0; t < 100; ++t) {
        const auto f = random_regular(rng, static_cast<unsigned>(draw(rng, 2, 4)));
        const FieldMatrix g1 = small_invertible(rng, 2, 2), g2 = small_invertible(rng, 2, 2);
        const FieldMatrix h1 = small_invertible(rng, 2, 2), h2 = small_invertible(rng, 2, 2);
        bad_action += !projectively_equal(pair_act(g1, h1, pair_act(g2, h2, f)), pair_act(g1 * g2, h1 * h2, f));
    }
    const std::vector<FiniteMatrixGroup> groups{signed_swap_group(), cube_rotation_group()};
    for (int t = 0; t < 100; ++t) {
        const auto& g = groups[static_cast<std::size_t>(t) % 2];
        const Form p = reynolds_project(g, random_form(rng, static_cast<std::size_t>(g.dim), static_cast<unsigned>(draw(rng, 1, 4))));
        bool ok = reynolds_project(g, p) == p;
        for (const auto& x : g.elements) ok = ok && substitute_linear(p, x) == p;
        bad_reynolds += !ok;
    }
    for (int t = 0; t < 100; ++t) {
        const unsigned m = static_cast<unsigned>(draw(rng, 2, 5));
        const auto f = random_regular(rng, m);
        const Form r = ramification_form(f);
        bool ok = r.degree() == 2 * m - 2 && !r.is_zero();
        for (const auto& fac : squarefree_factorization(r).factors) ok = ok && fac.multiplicity < m;
        bad_ram += !ok;
    }
    check(bad_field == 0, std::to_string(bad_field) + " field-axiom failures");
    check(bad_euler == 0, std::to_string(bad_euler) + " Euler-identity failures");
    check(bad_action == 0, std::to_string(bad_action) + " action-functoriality failures");
    check(bad_reynolds == 0, std::to_string(bad_reynolds) + " Reynolds failures");
    check(bad_ram == 0, std::to_string(bad_ram) + " ramification failures");
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Criterion {
        int id;
        std::string name;
        double limit;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "equivariant endomorphisms of degree 9 (10 s per group)", 0, criterion_equivariant},
        {2, "orbit classification and PGL2 x PGL2 invariance", 5, criterion_classification},
        {3, "one-parameter limits", 0, criterion_limit},
        {4, "unipotent fixed maps", 30, criterion_unipotent},
        {5, "torus weight witnesses", 0, criterion_torus},
        {6, "hom counts against enumeration", 10, criterion_counting},
        {7, "Chow ring identities", 1, criterion_chow},
        {8, "infrastructure properties on 100 instances each", 60, criterion_infrastructure},
    };
    std::vector<CriterionResult> out;
    for (const auto& s : criteria) {
        CriterionResult r{s.id, s.name, false, "", 0, s.limit};
        Checker check;
        const auto start = std::chrono::steady_clock::now();
        try {
            s.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s.limit > 0 && r.seconds > s.limit) {
            std::ostringstream msg;
            msg << "took " << r.seconds << " s, limit " << s.limit << " s";
            check.failures.push_back(msg.str());
        }
        r.passed = check.failures.empty();
        for (std::size_t i = 0; i < check.failures.size(); ++i) r.detail += (i ? "; " : "") + check.failures[i];
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace projendo
