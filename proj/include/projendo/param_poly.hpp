#pragma once

#include "projendo/number_field.hpp"

#include <map>
#include <vector>

namespace projendo {

/// Sparse polynomial in a fixed number of parameters over a number field.
/// Ring operations only; enough for division-free determinants.
class ParamPoly {
public:
    using Exponents = std::vector<unsigned>;

    ParamPoly() = default;
    ParamPoly(int c) : ParamPoly(FieldElement(c)) {}  // NOLINT: ring literal
    explicit ParamPoly(const FieldElement& c) {
        if (!c.is_zero()) terms_[Exponents{}] = c;
    }
    /// c * p_i.
    static ParamPoly parameter(std::size_t i, const FieldElement& c = FieldElement(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, FieldElement>& terms() const { return terms_; }
    unsigned total_degree() const;

    /// Value at a parameter point.
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponents& e, const FieldElement& c);
    // exponent vectors carry no trailing zeros, so constants use the empty one
    std::map<Exponents, FieldElement> terms_;
};

} // namespace projendo
