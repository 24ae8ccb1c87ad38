#include "projendo/invariants.hpp"

#include "projendo/error.hpp"

#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

namespace projendo {

namespace {

std::string matrix_key(const FieldMatrix& m) {
    std::string key;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            key += m(i, j).to_string();
            key += ';';
        }
    return key;
}

FieldPtr matrix_field(const FieldMatrix& m) {
    FieldPtr f = NumberField::rationals();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) f = common_field(f, m(i, j).field());
    return f;
}

} // namespace

FiniteMatrixGroup enumerate_group(const std::vector<FieldMatrix>& generators, std::size_t cap, Index dim) {
    require(cap >= 1, "invalid-argument", "group cap must be at least 1");
    FiniteMatrixGroup g;
    g.field = NumberField::rationals();
    g.dim = generators.empty() ? dim : generators.front().rows();
    require(g.dim >= 1, "invalid-argument", "group dimension must be positive");
    for (const auto& x : generators) {
        require(x.rows() == g.dim && x.cols() == g.dim, "dimension-mismatch", "generators differ in size");
        require(!exact_determinant(x).is_zero(), "singular-matrix", "a generator is singular");
        g.field = common_field(g.field, matrix_field(x));
    }
    g.generators = generators;

    std::unordered_set<std::string> seen;
    std::deque<std::size_t> queue;
    const FieldMatrix id = identity_matrix<FieldElement>(g.dim);
    g.elements.push_back(id);
    seen.insert(matrix_key(id));
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& x : generators) {
            FieldMatrix next = g.elements[cur] * x;
            if (!seen.insert(matrix_key(next)).second) continue;
            require(g.elements.size() < cap, "group-too-large",
                    "closure exceeds the cap of " + std::to_string(cap) + " elements; the group may be infinite");
            g.elements.push_back(std::move(next));
            queue.push_back(g.elements.size() - 1);
        }
    }
    return g;
}

FiniteMatrixGroup dual_group(const FiniteMatrixGroup& g) {
    FiniteMatrixGroup d = g;
    for (auto& x : d.generators) x = exact_inverse(x).transpose();
    for (auto& x : d.elements) x = exact_inverse(x).transpose();
    return d;
}

FiniteMatrixGroup signed_swap_group() {
    FieldMatrix flip = FieldMatrix::Identity(2, 2);
    flip(1, 1) = FieldElement(-1);
    FieldMatrix swap = FieldMatrix::Zero(2, 2);
    swap(0, 1) = FieldElement(1);
    swap(1, 0) = FieldElement(1);
    return enumerate_group({flip, swap});
}

FiniteMatrixGroup cube_rotation_group() {
    FieldMatrix quarter = FieldMatrix::Zero(3, 3);  // quarter turn about the z axis
    quarter(0, 1) = FieldElement(-1);
    quarter(1, 0) = FieldElement(1);
    quarter(2, 2) = FieldElement(1);
    FieldMatrix third = FieldMatrix::Zero(3, 3);  // cyclic permutation of the axes
    third(0, 2) = FieldElement(1);
    third(1, 0) = FieldElement(1);
    third(2, 1) = FieldElement(1);
    return enumerate_group({quarter, third});
}

Form reynolds_project(const FiniteMatrixGroup& g, const Form& f) {
    require(static_cast<Index>(f.num_vars()) == g.dim, "dimension-mismatch", "form and group differ in dimension");
    // summing f(g x) over the group equals summing f(g^{-1} x)
    Form acc(f.num_vars(), f.degree());
    for (const auto& x : g.elements) acc += substitute_linear(f, x);
    return FieldElement(Rational(1, static_cast<unsigned long>(g.order()))) * acc;
}

InvariantBasis invariant_basis(const FiniteMatrixGroup& g, unsigned degree) {
    require(degree >= 1, "invalid-argument", "invariant degree must be at least 1");
    const auto n = static_cast<std::size_t>(g.dim);
    const auto mons = monomials_of_degree(n, degree);
    FieldMatrix images(static_cast<Index>(mons.size()), static_cast<Index>(mons.size()));
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const auto dense = dense_coefficients(reynolds_project(g, Form::monomial(mons[i])));
        for (std::size_t j = 0; j < dense.size(); ++j) images(static_cast<Index>(i), static_cast<Index>(j)) = dense[j];
    }
    const auto ech = exact_rref(std::move(images));
    InvariantBasis out{degree, {}};
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        std::vector<FieldElement> row(mons.size(), FieldElement(0));
        for (std::size_t j = 0; j < mons.size(); ++j) row[j] = ech.reduced(static_cast<Index>(r), static_cast<Index>(j));
        out.basis.push_back(form_from_dense(n, degree, row));
    }
    return out;
}

namespace {

std::vector<Form> gradient(const Form& f) {
    std::vector<Form> parts;
    for (std::size_t i = 0; i < f.num_vars(); ++i) parts.push_back(partial_derivative(f, i));
    return parts;
}

// Visits candidate coefficient vectors in sweep order until `visit` returns true
// or `budget` candidates were produced.
template <class Visit>
void sweep(std::size_t k, std::size_t budget, Visit&& visit) {
    std::size_t produced = 0;
    for (long bound = 1;; ++bound) {
        for (std::size_t s = 1; s <= k; ++s) {
            std::vector<std::size_t> subset(s);
            std::iota(subset.begin(), subset.end(), 0);
            for (;;) {
                std::vector<long> c(s, -bound);
                c[0] = 1;
                for (bool more = true; more;) {
                    bool valid = true, hits = false;
                    long g = 0;
                    for (long v : c) {
                        valid = valid && v != 0;
                        hits = hits || v == bound || v == -bound;
                        g = std::gcd(g, v);
                    }
                    if (valid && hits && g == 1) {
                        if (visit(subset, c)) return;
                        if (++produced >= budget) return;
                    }
                    // odometer, last coordinate fastest; the first stays positive
                    more = false;
                    for (std::size_t i = s; i-- > 0;) {
                        if (c[i] < bound) {
                            ++c[i];
                            more = true;
                            break;
                        }
                        c[i] = i == 0 ? 1 : -bound;
                    }
                }
                // next subset in lexicographic order
                std::size_t i = s;
                while (i > 0 && subset[i - 1] == k - s + i - 1) --i;
                if (i == 0) break;
                ++subset[i - 1];
                for (std::size_t j = i; j < s; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
    }
}

} // namespace

bool is_smooth(const Form& f) {
    require(f.degree() >= 2, "degree-too-small", "smoothness test needs degree at least 2");
    const auto parts = gradient(f);
    if (f.num_vars() == 2) return !sylvester_resultant(parts[0], parts[1]).is_zero();
    return certify_components(parts).verdict == Regularity::CertifiedRegular;
}

SmoothSearchResult smooth_invariant_search(const FiniteMatrixGroup& g, unsigned degree, std::uint64_t seed,
                                           std::size_t budget) {
    require(degree >= 2, "degree-too-small", "the search needs degree at least 2");
    const auto basis = invariant_basis(g, degree);
    require(basis.dim() >= 1, "no-invariants", "no invariant forms of degree " + std::to_string(degree));
    std::vector<std::size_t> perm(basis.dim());
    std::iota(perm.begin(), perm.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = perm.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(perm[i - 1], perm[j]);
        }
    }
    SmoothSearchResult out{Form(basis.basis.front().num_vars(), degree), 0};
    bool found = false;
    sweep(basis.dim(), budget, [&](const std::vector<std::size_t>& subset, const std::vector<long>& c) {
        Form f(out.form.num_vars(), degree);
        for (std::size_t i = 0; i < subset.size(); ++i) f += FieldElement(c[i]) * basis.basis[perm[subset[i]]];
        ++out.candidates_tried;
        if (is_smooth(f)) {
            out.form = std::move(f);
            found = true;
        }
        return found;
    });
    require(found, "search-exhausted",
            "no smooth invariant among " + std::to_string(out.candidates_tried) + " candidates");
    return out;
}

ProjectiveMap gradient_map(const Form& f) {
    require(f.degree() >= 2, "degree-too-small", "gradient map needs degree at least 2");
    auto m = certify_regular(make_map(gradient(f), ContentPolicy::Keep));
    require(m.is_regular(), "smoothness-not-certified", "the gradient of the form has a certified or possible base point");
    return m;
}

std::vector<bool> equivariance_transcript(const ProjectiveMap& f, const FiniteMatrixGroup& g, EquivarianceMode mode) {
    require(static_cast<Index>(f.source_dim() + 1) == g.dim && f.source_dim() == f.target_dim(), "dimension-mismatch",
            "map and group differ in dimension");
    std::vector<bool> out;
    out.reserve(g.order());
    for (const auto& x : g.elements) {
        const FieldMatrix h = mode == EquivarianceMode::Conjugation ? x : FieldMatrix(exact_inverse(x).transpose());
        out.push_back(projectively_equal(pair_act(x, h, f), f));
    }
    return out;
}

bool verify_equivariance(const ProjectiveMap& f, const FiniteMatrixGroup& g, EquivarianceMode mode) {
    for (bool ok : equivariance_transcript(f, g, mode))
        if (!ok) return false;
    return true;
}

EquivariantResult equivariant_endomorphism(const FiniteMatrixGroup& g, unsigned degree, std::uint64_t seed,
                                           std::size_t budget) {
    const Form f = smooth_invariant_search(g, degree, seed, budget).form;
    const FiniteMatrixGroup dual = dual_group(g);
    const Form fd = smooth_invariant_search(dual, degree, seed, budget).form;
    ProjectiveMap grad = gradient_map(f);
    ProjectiveMap dual_grad = gradient_map(fd);
    ProjectiveMap map = compose(dual_grad, grad);
    auto transcript = equivariance_transcript(map, g, EquivarianceMode::Conjugation);
    for (bool ok : transcript)
        if (!ok) throw InternalError("equivariant endomorphism failed its equivariance check");
    return {f, fd, std::move(grad), std::move(dual_grad), std::move(map), std::move(transcript)};
}

} // namespace projendo
