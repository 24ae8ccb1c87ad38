#include "projendo/number_field.hpp"

#include "projendo/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace projendo {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1000000UL;

// Positive divisors of |n| (n != 0). Sets *complete = false when a cofactor
// could not be proven prime by trial division.
std::vector<Integer> positive_divisors(const Integer& n, bool* complete) {
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (unsigned long d = 2; d <= kTrialDivisionLimit; ++d) {
        if (Integer(d) * d > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
                m /= d;
                ++e;
            }
            factors.emplace_back(Integer(d), e);
        }
    }
    if (m > 1) {
        const Integer bound = Integer(kTrialDivisionLimit) * kTrialDivisionLimit;
        if (m > bound && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0 && complete != nullptr) *complete = false;
        factors.emplace_back(m, 1);
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Integer coefficients of a primitive integer multiple of p.
std::vector<Integer> primitive_integer_coeffs(const Poly<Rational>& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(p.size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (g > 1)
        for (auto& v : z) v /= g;
    return z;
}

bool is_perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) return false;
    *root = r;
    return true;
}

Poly<Rational> cyclotomic_poly(unsigned n, std::map<unsigned, Poly<Rational>>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    Poly<Rational> num = Poly<Rational>::monomial(Rational(1), n) - Poly<Rational>::constant(Rational(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = exact_quotient(num, cyclotomic_poly(d, memo));
    memo.emplace(n, num);
    return num;
}

Poly<Rational> coords_poly(const std::vector<Rational>& v) { return Poly<Rational>(v); }

} // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& p, bool* complete) {
    require(!p.is_zero(), "invalid-argument", "rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    Poly<Rational> sq = exact_quotient(monic(p), gcd(p, derivative(p)));
    if (is_zero(sq.coeff(0))) {
        roots.emplace_back(0);
        sq = exact_quotient(sq, Poly<Rational>::monomial(Rational(1), 1));
    }
    if (sq.degree() >= 1) {
        const auto z = primitive_integer_coeffs(sq);
        const auto num_divs = positive_divisors(z.front(), complete);
        const auto den_divs = positive_divisors(z.back(), complete);
        std::set<Rational> seen;
        for (const auto& a : num_divs) {
            for (const auto& b : den_divs) {
                Rational cand(a, b);
                cand.canonicalize();
                for (int sign : {1, -1}) {
                    const Rational r = sign * cand;
                    if (!seen.insert(r).second) continue;
                    if (is_zero(sq(r))) roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_irreducible_over_q(const Poly<Rational>& p) {
    const int d = p.degree();
    require(d >= 1 && d <= 4, "invalid-argument", "irreducibility test supports degree 1..4");
    if (d == 1) return true;
    bool complete = true;
    if (!rational_roots(p, &complete).empty()) return false;
    require(complete, "unverifiable-modulus", "modulus coefficients too large to verify irreducibility");
    if (d < 4) return true;

    // Monic integer rescaling: c^4 p(y/c) with c the lcm of the denominators.
    const Poly<Rational> mp = monic(p);
    Integer c = 1;
    for (const auto& a : mp.coeffs()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Integer> a(5);
    Integer ck = 1;
    for (int i = 4; i >= 0; --i) {
        Rational v = mp.coeff(static_cast<std::size_t>(i)) * ck;
        a[static_cast<std::size_t>(i)] = v.get_num();
        ck *= c;
    }
    // (y^2 + p y + q)(y^2 + r y + s): qs = a0, p + r = a3, q + s + pr = a2, ps + qr = a1.
    for (const auto& dv : positive_divisors(a[0], &complete)) {
        for (int sign : {1, -1}) {
            const Integer q = sign * dv;
            const Integer s = a[0] / q;
            const Integer disc = a[3] * a[3] - 4 * (a[2] - q - s);
            Integer root;
            if (!is_perfect_square(disc, &root)) continue;
            for (const Integer& pp : {Integer((a[3] + root) / 2), Integer((a[3] - root) / 2)}) {
                if (2 * pp != a[3] + root && 2 * pp != a[3] - root) continue;
                const Integer rr = a[3] - pp;
                if (pp * s + q * rr == a[1]) return false;
            }
        }
    }
    require(complete, "unverifiable-modulus", "modulus coefficients too large to verify irreducibility");
    return true;
}

FieldPtr NumberField::rationals() {
    static const FieldPtr q(new NumberField({Rational(0), Rational(1)}, true));
    return q;
}

FieldPtr NumberField::make(std::vector<Rational> modulus) {
    while (!modulus.empty() && is_zero(modulus.back())) modulus.pop_back();
    require(modulus.size() >= 2, "invalid-argument", "minimal polynomial must have degree >= 1");
    require(modulus.back() == 1, "invalid-argument", "minimal polynomial must be monic");
    if (modulus.size() == 2) return rationals();
    const std::size_t d = modulus.size() - 1;
    bool verified = false;
    if (d <= 4) {
        require(is_irreducible_over_q(Poly<Rational>(modulus)), "reducible-modulus",
                "minimal polynomial is reducible over Q");
        verified = true;
    }
    return FieldPtr(new NumberField(std::move(modulus), verified));
}

FieldPtr NumberField::cyclotomic(unsigned n) {
    require(n >= 1, "invalid-argument", "cyclotomic index must be positive");
    std::map<unsigned, Poly<Rational>> memo;
    return make(cyclotomic_poly(n, memo).coeffs());
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b || b->is_rationals()) return a;
    if (a->is_rationals()) return b;
    require(*a == *b, "field-mismatch", "elements of distinct number fields combined");
    return a;
}

FieldElement::FieldElement() : FieldElement(Rational(0)) {}
FieldElement::FieldElement(int v) : FieldElement(Rational(v)) {}
FieldElement::FieldElement(long v) : FieldElement(Rational(v)) {}
FieldElement::FieldElement(const Rational& v) : field_(NumberField::rationals()), coords_{v} {}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    require(field_ != nullptr, "invalid-argument", "null field");
    require(coords_.size() == field_->degree(), "shape-mismatch", "coordinate count must equal field degree");
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    std::vector<Rational> c(field->degree(), Rational(0));
    if (field->degree() == 1) {
        c[0] = -field->modulus()[0];
    } else {
        c[1] = 1;
    }
    return {field, std::move(c)};
}

FieldElement FieldElement::embed(const FieldPtr& field, const Rational& v) {
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = v;
    return {field, std::move(c)};
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw Error("invalid-argument", "element is not rational");
    return coords_[0];
}

FieldElement FieldElement::in_field(const FieldPtr& field) const {
    if (same_field(field, field_)) return *this;
    require(is_rational(), "field-mismatch", "cannot move an irrational element to another field");
    return embed(field, coords_[0]);
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    field_ = common_field(field_, o.field_);
    coords_.resize(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    field_ = common_field(field_, o.field_);
    coords_.resize(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    const FieldPtr f = common_field(field_, o.field_);
    if (o.is_rational()) {
        const Rational s = o.coords_[0];
        field_ = f;
        coords_.resize(f->degree(), Rational(0));
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (is_rational()) {
        const Rational s = coords_[0];
        *this = o;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    const std::size_t d = f->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(coords_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    const auto& mu = f->modulus();
    for (std::size_t k = prod.size(); k-- > d;) {
        if (sgn(prod[k]) == 0) continue;
        const Rational c = prod[k];
        for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= c * mu[j];
    }
    prod.resize(d);
    field_ = f;
    coords_ = std::move(prod);
    return *this;
}

FieldElement FieldElement::inverse() const {
    require(!is_zero(), "division-by-zero", "inverse of zero field element");
    if (is_rational()) return embed(field_, projendo::inverse(coords_[0]));
    auto [g, s] = half_extended_gcd(coords_poly(coords_), coords_poly(field_->modulus()));
    require(g.degree() == 0, "reducible-modulus", "element not invertible: minimal polynomial is reducible");
    std::vector<Rational> c(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) c[i] = s.coeffs()[i];
    return {field_, std::move(c)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_->is_rationals() || b.field_->is_rationals()) {
        return a.is_rational() && b.is_rational() && a.coords_[0] == b.coords_[0];
    }
    return same_field(a.field_, b.field_) && a.coords_ == b.coords_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << projendo::to_string(mag);
        } else {
            if (mag != 1) os << projendo::to_string(mag) << '*';
            os << 'a';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::string to_string(const FieldElement& x) { return x.to_string(); }

std::vector<Rational> rational_roots(const Poly<FieldElement>& p, bool* complete) {
    require(!p.is_zero(), "invalid-argument", "rational_roots of the zero polynomial");
    std::size_t d = 1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.field()->degree());
    Poly<Rational> g;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> cj;
        cj.reserve(p.size());
        for (const auto& c : p.coeffs()) cj.push_back(j < c.coords().size() ? c.coords()[j] : Rational(0));
        g = gcd(g, Poly<Rational>(std::move(cj)));
    }
    if (g.degree() < 1) return {};
    return rational_roots(g, complete);
}

} // namespace projendo

namespace projendo {
std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }
} // namespace projendo
