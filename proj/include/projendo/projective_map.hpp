#pragma once

#include "projendo/form.hpp"
#include "projendo/resultant.hpp"

#include <optional>
#include <vector>

namespace projendo {

/// Reduce: divide out the common factor of the components (the full gcd for
/// binary forms, the common monomial factor otherwise).
/// Keep: scalar normalization only, so irregular tuples such as
/// (x0^2, x0*x1) survive as given.
enum class ContentPolicy { Reduce, Keep };

/// A tuple of s+1 forms of degree m in r+1 variables, up to a common scalar.
/// Stored normalized: the first nonzero coefficient (components in order,
/// terms in canonical order) is 1.
class ProjectiveMap {
public:
    std::size_t source_dim() const { return components_.front().num_vars() - 1; }
    std::size_t target_dim() const { return components_.size() - 1; }
    unsigned degree() const { return components_.front().degree(); }
    const std::vector<Form>& components() const { return components_; }
    const Form& component(std::size_t i) const { return components_.at(i); }
    Regularity regularity() const { return regularity_; }
    bool is_regular() const { return regularity_ == Regularity::CertifiedRegular; }
    FieldPtr field() const;

    ProjectiveMap with_regularity(Regularity r) const;

    friend ProjectiveMap make_map(std::vector<Form> components, ContentPolicy policy);
    friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) { return a.components_ == b.components_; }

private:
    explicit ProjectiveMap(std::vector<Form> components) : components_(std::move(components)) {}
    std::vector<Form> components_;
    Regularity regularity_ = Regularity::Unchecked;
};

/// Validates shape, reduces content per `policy`, normalizes the scalar.
/// Regularity starts unchecked.
ProjectiveMap make_map(std::vector<Form> components, ContentPolicy policy = ContentPolicy::Reduce);

/// Scales the tuple so that its first nonzero coefficient is 1.
std::vector<Form> normalize_tuple(std::vector<Form> components);

/// Common factor removed by ContentPolicy::Reduce (constant 1 when none).
Form common_content(const std::vector<Form>& components);

ProjectiveMap identity_map(std::size_t r);

/// Runs certify_components on the components and records the verdict.
ProjectiveMap certify_regular(const ProjectiveMap& f);

/// F o G; both must be certified regular, and the result is regular.
ProjectiveMap compose(const ProjectiveMap& f, const ProjectiveMap& g);

/// (g, h) . F = h F(g^{-1} x). Regularity is carried over.
ProjectiveMap pair_act(const FieldMatrix& g, const FieldMatrix& h, const ProjectiveMap& f);

/// g . F = g F(g^{-1} x).
ProjectiveMap conjugate_act(const FieldMatrix& g, const ProjectiveMap& f);

/// True iff F = mu G for a nonzero scalar mu.
bool projectively_equal(const ProjectiveMap& f, const ProjectiveMap& g);

/// True iff (g, h) (or g by conjugation when h is absent) fixes F projectively.
bool stabilizer_check(const ProjectiveMap& f, const FieldMatrix& g, const std::optional<FieldMatrix>& h = std::nullopt);

/// h F(g^{-1} x) on raw tuples, with no normalization.
std::vector<Form> act_on_tuple(const FieldMatrix& g_inverse, const FieldMatrix& h, const std::vector<Form>& tuple);

} // namespace projendo
