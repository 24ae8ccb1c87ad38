#include "projendo/chow.hpp"

#include "projendo/error.hpp"

#include <algorithm>

namespace projendo::chow {

namespace {

constexpr std::array<unsigned, kNumVars> kGrading{1, 1, 2, 1, 2, 1, 1, 0};
constexpr std::array<const char*, kNumVars> kNames{"xi", "c1E", "c2E", "c1F", "c2F", "D", "KB", "k"};

unsigned grading(const ChowClass::Exponents& e) {
    unsigned d = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) d += kGrading[i] * e[i];
    return d;
}

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

ChowClass power(const ChowClass& c, unsigned e) {
    ChowClass r(1);
    for (unsigned i = 0; i < e; ++i) r = r * c;
    return r;
}

ChowClass scaled(const ChowClass& c, const Rational& s) { return ChowClass(s) * c; }

// Integer fiber degrees must be at least 1; the symbol k passes.
void check_fiber_degree(const ChowClass& k, long minimum) {
    if (!k.is_constant()) return;
    const Rational v = k.constant_value();
    require(v.get_den() == 1 && v >= minimum, "invalid-argument",
            "fiber degree must be an integer >= " + std::to_string(minimum));
}

} // namespace

std::string to_string(Var v) { return kNames[idx(v)]; }

ChowClass::ChowClass(const Rational& c) {
    if (c != 0) terms_[Exponents{}] = c;
}

ChowClass ChowClass::var(Var v) {
    ChowClass r;
    Exponents e{};
    e[idx(v)] = 1;
    r.add(e, 1);
    return r;
}

void ChowClass::add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ChowClass::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return grading(t.first) == grading(terms_.begin()->first); });
}

unsigned ChowClass::degree() const { return terms_.empty() ? 0 : grading(terms_.begin()->first); }

unsigned ChowClass::max_exponent(Var v) const {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[idx(v)]);
    return m;
}

ChowClass ChowClass::coefficient(Var v, unsigned e) const {
    ChowClass r;
    for (const auto& [ex, c] : terms_)
        if (ex[idx(v)] == e) {
            Exponents f = ex;
            f[idx(v)] = 0;
            r.add(f, c);
        }
    return r;
}

ChowClass ChowClass::substitute(Var v, const ChowClass& value) const {
    ChowClass r;
    for (const auto& [ex, c] : terms_) {
        Exponents f = ex;
        f[idx(v)] = 0;
        ChowClass t;
        t.add(f, c);
        r += t * power(value, ex[idx(v)]);
    }
    return r;
}

bool ChowClass::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

Rational ChowClass::constant_value() const {
    require(is_constant(), "invalid-argument", "class is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    ChowClass r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ChowClass::Exponents e{};
            for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

ChowClass xi() { return ChowClass::var(Var::Xi); }
ChowClass c1E() { return ChowClass::var(Var::C1E); }
ChowClass c2E() { return ChowClass::var(Var::C2E); }
ChowClass c1F() { return ChowClass::var(Var::C1F); }
ChowClass c2F() { return ChowClass::var(Var::C2F); }
ChowClass D() { return ChowClass::var(Var::D); }
ChowClass KB() { return ChowClass::var(Var::KB); }
ChowClass k() { return ChowClass::var(Var::K); }

std::string to_string(const ChowClass& c) {
    if (c.is_zero()) return "0";
    std::vector<std::pair<ChowClass::Exponents, Rational>> terms(c.terms().begin(), c.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        const unsigned gx = grading(x.first), gy = grading(y.first);
        if (gx != gy) return gx > gy;
        return x.first > y.first;
    });
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        Rational coef = terms[t].second;
        const bool negative = coef < 0;
        if (negative) coef = -coef;
        out += t == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mon;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            const unsigned e = terms[t].first[i];
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += kNames[i];
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) out += projendo::to_string(coef);
        else if (coef == 1) out += mon;
        else out += projendo::to_string(coef) + "*" + mon;
    }
    return out;
}

ChowClass reduce(const ChowClass& c, const Relation& rel) {
    const ChowClass square = scaled(xi() * c1E(), rel.a) + scaled(c2E(), rel.b);
    ChowClass cur = c;
    while (cur.max_exponent(Var::Xi) >= 2) {
        const unsigned top = cur.max_exponent(Var::Xi);
        const ChowClass lead = cur.coefficient(Var::Xi, top);
        cur -= lead * power(xi(), top);
        cur += lead * power(xi(), top - 2) * square;
    }
    return cur;
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b, const Relation& rel) { return reduce(a * b, rel); }

ChowClass c2_twist_unreduced(const ChowClass& fiber_degree, const ChowClass& twist) {
    const ChowClass l = fiber_degree * xi() + twist;
    return c2F() + l * c1F() + l * l;
}

ChowClass c2_twist_expand(const ChowClass& fiber_degree, const ChowClass& twist, const Relation& rel) {
    check_fiber_degree(fiber_degree, 1);
    return reduce(c2_twist_unreduced(fiber_degree, twist), rel);
}

ChowClass solve_twist_degree(const ChowClass& fiber_degree, const Relation& rel) {
    check_fiber_degree(fiber_degree, 1);
    const ChowClass linear = c2_twist_expand(fiber_degree, D(), rel).coefficient(Var::Xi, 1);
    require(linear.max_exponent(Var::D) <= 1, "inconsistency", "the xi-linear part is not linear in D");
    const ChowClass a = linear.coefficient(Var::D, 1), b = linear.coefficient(Var::D, 0);
    // a must be c * k^j so that -b / a stays polynomial
    require(a.terms().size() == 1, "inconsistency", "the coefficient of D is not a monomial in k");
    const auto& [ae, ac] = *a.terms().begin();
    for (std::size_t i = 0; i < kNumVars; ++i)
        require(i == idx(Var::K) || ae[i] == 0, "inconsistency", "the coefficient of D involves base classes");
    const unsigned j = ae[idx(Var::K)];
    ChowClass solution;
    for (const auto& [e, c] : b.terms()) {
        require(e[idx(Var::K)] >= j, "inconsistency", "the twist degree is not polynomial in k");
        ChowClass::Exponents f = e;
        f[idx(Var::K)] -= j;
        ChowClass t(-c / ac);
        for (std::size_t i = 0; i < kNumVars; ++i) t = t * power(ChowClass::var(static_cast<Var>(i)), f[i]);
        solution += t;
    }
    if (!c2_twist_expand(fiber_degree, solution, rel).coefficient(Var::Xi, 1).is_zero())
        fail("inconsistency", "the solved twist leaves a xi-linear remainder");
    return solution;
}

ChowClass ramification_class(const ChowClass& fiber_degree, const Relation& rel) {
    const ChowClass d = solve_twist_degree(fiber_degree, rel);
    const ChowClass source = ChowClass(-2) * xi() + KB() - c1E();
    const ChowClass pulled = ChowClass(-2) * (fiber_degree * xi() + d) + KB() - c1F();
    return reduce(source - pulled, rel);
}

ChowClass symmetric_power_det(long l, long a) {
    require(l >= 0, "invalid-argument", "symmetric power must be non-negative");
    // Chern roots of E^* are -alpha, -beta; S^l E^* has roots -(i alpha + (l - i) beta)
    Rational alpha = 0, beta = 0;
    for (long i = 0; i <= l; ++i) {
        alpha -= i;
        beta -= l - i;
    }
    if (alpha != beta) throw InternalError("splitting sum is not symmetric");
    return ChowClass(alpha + Rational(l + 1) * a) * c1E();
}

ChowClass symmetric_power_det(const ChowClass& l, const ChowClass& a) {
    // sum_{i=0}^{l} i = l (l + 1) / 2
    const ChowClass root_sum = ChowClass(Rational(1, 2)) * l * (l + ChowClass(1));
    return (ChowClass(0) - root_sum + (l + ChowClass(1)) * a) * c1E();
}

PullbackConstraint pullback_twist_constraint(long fiber_degree) {
    require(fiber_degree >= 2, "invalid-argument", "the pullback system is vacuous for k = 1");
    const Rational kk = fiber_degree;
    // k c1E = c1E + 2 L
    const ChowClass twist = ChowClass((kk - 1) / 2) * c1E();
    // k^2 c2E = c2E + L c1E + L^2, with everything moved to one side
    const ChowClass diff = c2E() + twist * c1E() + twist * twist - ChowClass(kk * kk) * c2E();
    const ChowClass relation = ChowClass(Rational(4) / (kk * kk - 1)) * diff;
    return {twist, relation};
}

std::vector<CheckRow> check_all(const Relation& rel) {
    std::vector<CheckRow> rows;
    const auto row = [&](std::string name, bool ok, std::string detail) {
        rows.push_back({std::move(name), ok, std::move(detail)});
    };
    const auto expected_twist = [](const ChowClass& kv) { return ChowClass(Rational(1, 2)) * (kv * c1E() - c1F()); };
    const auto expected_ram = [](const ChowClass& kv) {
        return (ChowClass(2) * kv - ChowClass(2)) * xi() + (kv - ChowClass(1)) * c1E();
    };

    const ChowClass sq = chow_mul(xi(), xi(), rel);
    row("xi^2 relation", sq == -(xi() * c1E()) - c2E(), to_string(sq));

    const auto guarded = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            row(name, false, std::string(e.code()) + ": " + e.what());
        }
    };

    guarded("twist degree, k = 1..6", [&] {
        bool ok = true;
        std::string detail;
        for (long kv = 1; kv <= 6; ++kv) {
            const ChowClass d = solve_twist_degree(kv, rel);
            ok = ok && d == expected_twist(kv);
            if (kv == 6) detail = "k=6: D = " + to_string(d);
        }
        row("twist degree, k = 1..6", ok, detail);
    });
    guarded("twist degree, symbolic k", [&] {
        const ChowClass d = solve_twist_degree(k(), rel);
        row("twist degree, symbolic k", d == expected_twist(k()), "D = " + to_string(d));
    });
    guarded("twist degree, E = F", [&] {
        const ChowClass d = solve_twist_degree(1, rel).substitute(Var::C1F, c1E()).substitute(Var::C2F, c2E());
        row("twist degree, E = F", d.is_zero(), "D = " + to_string(d));
    });
    guarded("ramification, k = 1..6", [&] {
        bool ok = true;
        for (long kv = 1; kv <= 6; ++kv) ok = ok && ramification_class(kv, rel) == expected_ram(kv);
        row("ramification, k = 1..6", ok, "k=2: " + to_string(ramification_class(2, rel)));
    });
    guarded("ramification, symbolic k", [&] {
        const ChowClass r = ramification_class(k(), rel);
        row("ramification, symbolic k", r == expected_ram(k()), to_string(r));
    });
    guarded("ramification free of KB and c1F", [&] {
        const ChowClass r = ramification_class(k(), rel);
        row("ramification free of KB and c1F", r.max_exponent(Var::KB) == 0 && r.max_exponent(Var::C1F) == 0,
            to_string(r));
    });
    {
        bool ok = true;
        for (long kv = 1; kv <= 10; ++kv) ok = ok && symmetric_power_det(2 * kv - 2, kv - 1).is_zero();
        const ChowClass sym = symmetric_power_det(ChowClass(2) * k() - ChowClass(2), k() - ChowClass(1));
        row("det S^(2k-2) E^*((k-1) det E) trivial", ok && sym.is_zero(), "symbolic: " + to_string(sym));
    }
    {
        const ChowClass target = c1E() * c1E() - ChowClass(4) * c2E();
        bool ok = true;
        for (long kv = 2; kv <= 6; ++kv) {
            const auto p = pullback_twist_constraint(kv);
            ok = ok && p.relation == target && p.twist == ChowClass(Rational(kv - 1) / 2) * c1E();
        }
        row("pullback relation c1E^2 = 4 c2E, k = 2..6", ok, to_string(pullback_twist_constraint(2).relation));
    }
    return rows;
}

} // namespace projendo::chow
