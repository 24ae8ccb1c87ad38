#pragma once

#include "projendo/error.hpp"
#include "projendo/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace projendo {

namespace detail {
template <class S>
bool scalar_is_zero(const S& x) {
    return is_zero(x);
}
} // namespace detail

/// Dense univariate polynomial over an exact field scalar `S`, coefficients
/// stored low-to-high with no trailing zeros (the zero polynomial is empty).
///
/// `S` must provide +, -, *, construction from int, and the free functions
/// `is_zero(S)` and `inverse(S)`.
template <class S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const S& c) { return Poly(std::vector<S>{c}); }
    static Poly monomial(const S& c, std::size_t k) {
        std::vector<S> v(k + 1, S(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    /// t - root
    static Poly linear_root(const S& root) { return Poly(std::vector<S>{-root, S(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
    const S& leading() const { return c_.back(); }

    S operator()(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const S& s, const Poly& a) {
        std::vector<S> r = a.c_;
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

/// Quotient and remainder, a = q*b + r with deg r < deg b.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b) {
    require(!b.is_zero(), "division-by-zero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<S>(), a};
    std::vector<S> rem = a.coeffs();
    std::vector<S> quo(rem.size() - b.size() + 1, S(0));
    const S lead_inv = inverse(b.leading());
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = rem.size(); k-- > db;) {
        if (is_zero(rem[k])) continue;
        const S q = rem[k] * lead_inv;
        quo[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - q * b.coeffs()[j];
    }
    rem.resize(db);
    return {Poly<S>(std::move(quo)), Poly<S>(std::move(rem))};
}

template <class S>
Poly<S> monic(const Poly<S>& p) {
    if (p.is_zero()) return p;
    return inverse(p.leading()) * p;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
template <class S>
std::pair<Poly<S>, Poly<S>> half_extended_gcd(const Poly<S>& a, const Poly<S>& m) {
    Poly<S> r0 = m, r1 = a;
    Poly<S> s0, s1 = Poly<S>::constant(S(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<S> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    const S inv = inverse(r0.leading());
    return {inv * r0, inv * s0};
}

template <class S>
Poly<S> derivative(const Poly<S>& p) {
    if (p.degree() < 1) return Poly<S>();
    std::vector<S> d(p.size() - 1, S(0));
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = S(static_cast<long>(i)) * p.coeffs()[i];
    return Poly<S>(std::move(d));
}

template <class S>
Poly<S> pow(const Poly<S>& p, unsigned e) {
    Poly<S> r = Poly<S>::constant(S(1)), base = p;
    while (e != 0) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return r;
}

/// Exact quotient; throws InternalError if b does not divide a.
template <class S>
Poly<S> exact_quotient(const Poly<S>& a, const Poly<S>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("exact_quotient: nonzero remainder");
    return q;
}

/// Yun's squarefree decomposition in characteristic zero: returns monic
/// nonconstant parts (part, multiplicity) with p = lc(p) * prod part^mult.
template <class S>
std::vector<std::pair<Poly<S>, unsigned>> squarefree_decomposition(const Poly<S>& p) {
    std::vector<std::pair<Poly<S>, unsigned>> out;
    if (p.degree() < 1) return out;
    const Poly<S> f = monic(p);
    const Poly<S> df = derivative(f);
    Poly<S> a = gcd(f, df);
    Poly<S> b = exact_quotient(f, a);
    Poly<S> c = exact_quotient(df, a);
    Poly<S> d = c - derivative(b);
    for (unsigned i = 1; b.degree() > 0; ++i) {
        Poly<S> g = gcd(b, d);
        b = exact_quotient(b, g);
        c = exact_quotient(d, g);
        d = c - derivative(b);
        if (g.degree() > 0) out.emplace_back(std::move(g), i);
    }
    return out;
}

} // namespace projendo
