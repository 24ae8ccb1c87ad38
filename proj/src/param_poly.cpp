#include "projendo/param_poly.hpp"

#include <algorithm>

namespace projendo {

namespace {

using Exponents = ParamPoly::Exponents;

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    // canonical form: no trailing zeros
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace

ParamPoly ParamPoly::parameter(std::size_t i, const FieldElement& c) {
    ParamPoly p;
    Exponents e(i + 1, 0);
    e[i] = 1;
    p.add_term(e, c);
    return p;
}

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

FieldElement ParamPoly::evaluate(const std::vector<FieldElement>& point) const {
    FieldElement acc(0);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point.at(i);
        acc += t;
    }
    return acc;
}

void ParamPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

} // namespace projendo
