#include "projendo/form.hpp"

#include "projendo/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace projendo {

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0U); }

Monomial operator*(const Monomial& a, const Monomial& b) {
    require(a.num_vars() == b.num_vars(), "shape-mismatch", "monomials in different variable counts");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
    return r;
}

bool GrlexOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                        a.exponents.end());
}

std::size_t count_monomials(std::size_t num_vars, unsigned degree) {
    if (num_vars == 0) return degree == 0 ? 1 : 0;
    // binomial(degree + n - 1, n - 1)
    std::size_t r = 1;
    for (std::size_t k = 1; k < num_vars; ++k) r = r * (degree + k) / k;
    return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
    std::vector<Monomial> out;
    if (num_vars == 0) return out;
    out.reserve(count_monomials(num_vars, degree));
    std::vector<unsigned> e(num_vars, 0);
    // recursive fill, largest exponent of the earliest variable first
    auto fill = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i + 1 == num_vars) {
            e[i] = remaining;
            out.push_back(Monomial{e});
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
    };
    fill(fill, 0, degree);
    return out;
}

std::size_t monomial_index(const Monomial& m) {
    const std::size_t n = m.num_vars();
    unsigned d = m.degree();
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (unsigned e = m.exponents[i] + 1; e <= d; ++e) idx += count_monomials(n - i - 1, d - e);
        d -= m.exponents[i];
    }
    return idx;
}

Form::Form(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {
    require(num_vars >= 1, "shape-mismatch", "forms need at least one variable");
}

Form Form::variable(std::size_t num_vars, std::size_t i) {
    require(i < num_vars, "index-out-of-range", "variable index out of range");
    Monomial m{std::vector<unsigned>(num_vars, 0)};
    m.exponents[i] = 1;
    return monomial(m);
}

Form Form::constant(std::size_t num_vars, const FieldElement& c) {
    return monomial(Monomial{std::vector<unsigned>(num_vars, 0)}, c);
}

Form Form::monomial(const Monomial& m, const FieldElement& c) {
    Form f(m.num_vars(), m.degree());
    f.add_term(m, c);
    return f;
}

FieldElement Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement(0) : it->second;
}

const FieldElement& Form::leading_coefficient() const {
    require(!terms_.empty(), "invalid-argument", "leading coefficient of the zero form");
    return terms_.begin()->second;
}

const Monomial& Form::leading_monomial() const {
    require(!terms_.empty(), "invalid-argument", "leading monomial of the zero form");
    return terms_.begin()->first;
}

FieldPtr Form::field() const {
    FieldPtr f = NumberField::rationals();
    for (const auto& [m, c] : terms_) f = common_field(f, c.field());
    return f;
}

void Form::add_term(const Monomial& m, const FieldElement& c) {
    require(m.num_vars() == num_vars_ && m.degree() == degree_, "shape-mismatch",
            "monomial does not match the form's variable count and degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Form& Form::operator+=(const Form& o) {
    require(num_vars_ == o.num_vars_ && degree_ == o.degree_, "shape-mismatch",
            "adding forms of different shapes");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require(num_vars_ == o.num_vars_ && degree_ == o.degree_, "shape-mismatch",
            "subtracting forms of different shapes");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const FieldElement& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Form operator*(const Form& a, const Form& b) {
    require(a.num_vars_ == b.num_vars_, "shape-mismatch", "multiplying forms in different variable counts");
    Form r(a.num_vars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

bool operator==(const Form& a, const Form& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Form pow(const Form& f, unsigned e) {
    Form r = Form::constant(f.num_vars(), FieldElement(1));
    Form base = f;
    while (e != 0) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return r;
}

Form partial_derivative(const Form& f, std::size_t i) {
    require(i < f.num_vars(), "index-out-of-range", "derivative variable out of range");
    require(f.degree() >= 1, "invalid-argument", "derivative of a degree-0 form");
    Form r(f.num_vars(), f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        if (m.exponents[i] == 0) continue;
        Monomial d = m;
        --d.exponents[i];
        r.add_term(d, FieldElement(static_cast<long>(m.exponents[i])) * c);
    }
    return r;
}

Form substitute(const Form& f, std::span<const Form> args) {
    require(args.size() == f.num_vars(), "dimension-mismatch", "substitution needs one form per variable");
    require(!args.empty(), "dimension-mismatch", "empty substitution");
    const std::size_t n = args.front().num_vars();
    const unsigned d = args.front().degree();
    for (const auto& a : args)
        require(a.num_vars() == n && a.degree() == d, "shape-mismatch", "substituted forms differ in shape");
    // powers[j][k] = args[j]^k, built lazily
    std::vector<std::vector<Form>> powers(args.size());
    for (std::size_t j = 0; j < args.size(); ++j) powers[j].push_back(Form::constant(n, FieldElement(1)));
    auto power = [&](std::size_t j, unsigned k) -> const Form& {
        while (powers[j].size() <= k) powers[j].push_back(powers[j].back() * args[j]);
        return powers[j][k];
    };
    Form r(n, f.degree() * d);
    for (const auto& [m, c] : f.terms()) {
        Form prod = Form::constant(n, c);
        for (std::size_t j = 0; j < m.exponents.size(); ++j)
            if (m.exponents[j] != 0) prod = prod * power(j, m.exponents[j]);
        r += prod;
    }
    return r;
}

Form substitute_linear(const Form& f, const FieldMatrix& m) {
    const auto n = static_cast<Index>(f.num_vars());
    require(m.rows() == n && m.cols() == n, "dimension-mismatch", "substitution matrix has the wrong size");
    std::vector<Form> rows;
    rows.reserve(f.num_vars());
    for (Index i = 0; i < n; ++i) {
        Form l(f.num_vars(), 1);
        for (Index k = 0; k < n; ++k) {
            if (m(i, k).is_zero()) continue;
            l += m(i, k) * Form::variable(f.num_vars(), static_cast<std::size_t>(k));
        }
        rows.push_back(std::move(l));
    }
    return substitute(f, rows);
}

FieldElement evaluate(const Form& f, std::span<const FieldElement> point) {
    require(point.size() == f.num_vars(), "dimension-mismatch", "evaluation point has the wrong length");
    FieldElement acc(0);
    for (const auto& [m, c] : f.terms()) {
        FieldElement t = c;
        for (std::size_t j = 0; j < m.exponents.size(); ++j)
            for (unsigned k = 0; k < m.exponents[j]; ++k) t *= point[j];
        acc += t;
    }
    return acc;
}

Form normalized(const Form& f) {
    if (f.is_zero()) return f;
    return f.leading_coefficient().inverse() * f;
}

bool proportional(const Form& f, const Form& g) {
    if (f.num_vars() != g.num_vars() || f.degree() != g.degree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return normalized(f) == normalized(g);
}

std::vector<FieldElement> dense_coefficients(const Form& f) {
    std::vector<FieldElement> v(count_monomials(f.num_vars(), f.degree()), FieldElement(0));
    for (const auto& [m, c] : f.terms()) v[monomial_index(m)] = c;
    return v;
}

Form form_from_dense(std::size_t num_vars, unsigned degree, std::span<const FieldElement> coeffs) {
    const auto mons = monomials_of_degree(num_vars, degree);
    require(coeffs.size() == mons.size(), "shape-mismatch", "dense coefficient vector has the wrong length");
    Form f(num_vars, degree);
    for (std::size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], coeffs[i]);
    return f;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string coeff;
        bool neg = false;
        if (c.is_rational()) {
            Rational v = c.rational_value();
            neg = sgn(v) < 0;
            coeff = to_string(Rational(abs(v)));
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream mon;
        bool any = false;
        for (std::size_t j = 0; j < m.exponents.size(); ++j) {
            if (m.exponents[j] == 0) continue;
            if (any) mon << '*';
            mon << 'x' << j;
            if (m.exponents[j] > 1) mon << '^' << m.exponents[j];
            any = true;
        }
        if (!any) {
            os << coeff;
        } else {
            if (coeff != "1") os << coeff << '*';
            os << mon.str();
        }
        first = false;
    }
    return os.str();
}

Poly<FieldElement> dehomogenize(const Form& f) {
    require(f.num_vars() == 2, "non-binary", "expected a binary form");
    std::vector<FieldElement> c(f.degree() + 1, FieldElement(0));
    for (const auto& [m, v] : f.terms()) c[m.exponents[0]] = v;
    return Poly<FieldElement>(std::move(c));
}

Form homogenize(const Poly<FieldElement>& p, unsigned degree) {
    require(p.degree() <= static_cast<int>(degree), "shape-mismatch", "polynomial degree exceeds the form degree");
    Form f(2, degree);
    for (std::size_t i = 0; i < p.size(); ++i) f.add_term(Monomial{{static_cast<unsigned>(i), degree - static_cast<unsigned>(i)}}, p.coeffs()[i]);
    return f;
}

} // namespace projendo
