#include "projendo/hom_counting.hpp"

#include "projendo/error.hpp"

#include <map>
#include <numeric>
#include <set>

namespace projendo {

GroupFamily parse_group_family(std::string_view name, long* n) {
    if (name == "cyclic") return GroupFamily::Cyclic;
    if (name == "dihedral") return GroupFamily::Dihedral;
    if (name == "A4") return GroupFamily::A4;
    if (name == "S4") return GroupFamily::S4;
    if (name == "A5") return GroupFamily::A5;
    if (name == "S3") {
        if (n) *n = 3;
        return GroupFamily::Dihedral;
    }
    fail("unknown-group", "unknown group family '" + std::string(name) + "' (S5 is not a finite subgroup of PU(2); use A5)");
}

std::string to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::Cyclic: return "cyclic";
        case GroupFamily::Dihedral: return "dihedral";
        case GroupFamily::A4: return "A4";
        case GroupFamily::S4: return "S4";
        case GroupFamily::A5: return "A5";
    }
    return "unknown";
}

GroupRepData::GroupRepData(std::string name_, std::uint64_t order_, std::vector<std::uint64_t> degrees)
    : name(std::move(name_)), order(order_), irrep_degrees(std::move(degrees)) {
    Integer sum = 0;
    for (auto d : irrep_degrees) {
        require(d >= 1, "burnside-violation", "irreducible degrees must be positive");
        sum += Integer(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    }
    require(sum == Integer(static_cast<unsigned long>(order)), "burnside-violation",
            name + ": squares of irreducible degrees sum to " + sum.get_str() + ", not the order");
}

GroupRepData builtin_group_data(GroupFamily family, long n) {
    switch (family) {
        case GroupFamily::Cyclic:
            require(n >= 1, "invalid-argument", "cyclic groups need n >= 1");
            return {"C" + std::to_string(n), static_cast<std::uint64_t>(n),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(n), 1)};
        case GroupFamily::Dihedral: {
            require(n >= 3, "invalid-argument", "dihedral groups need n >= 3");
            std::vector<std::uint64_t> d(n % 2 == 0 ? 4 : 2, 1);
            d.insert(d.end(), static_cast<std::size_t>(n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2), 2);
            return {"D" + std::to_string(n), static_cast<std::uint64_t>(2 * n), std::move(d)};
        }
        case GroupFamily::A4: return {"A4", 12, {1, 1, 1, 3}};
        case GroupFamily::S4: return {"S4", 24, {1, 1, 2, 3, 3}};
        case GroupFamily::A5: return {"A5", 60, {1, 3, 3, 4, 5}};
    }
    fail("unknown-group", "unknown group family");
}

Rational count_homs(const GroupRepData& g, long genus) {
    require(genus >= 0, "invalid-argument", "genus must be non-negative");
    const long e = 2 * genus - 2;
    Rational sum = 0;
    for (auto d : g.irrep_degrees) {
        Rational base(Integer(static_cast<unsigned long>(g.order)), Integer(static_cast<unsigned long>(d)));
        base.canonicalize();
        Rational p = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= base;
        sum += e < 0 ? Rational(1) / p : p;
    }
    return Rational(Integer(static_cast<unsigned long>(g.order))) * sum;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation inverse(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<unsigned>(i);
    return r;
}

PermGroup perm_closure(unsigned degree, const std::vector<Permutation>& generators, std::size_t cap) {
    PermGroup g;
    g.degree = degree;
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    for (const auto& p : generators) {
        require(p.size() == degree, "dimension-mismatch", "generator acts on the wrong number of letters");
        std::vector<bool> hit(degree, false);
        for (unsigned x : p) {
            require(x < degree && !hit[x], "invalid-argument", "generator is not a permutation");
            hit[x] = true;
        }
    }
    std::set<Permutation> seen{id};
    g.elements.push_back(id);
    for (std::size_t cur = 0; cur < g.elements.size(); ++cur)
        for (const auto& p : generators) {
            Permutation next = compose(g.elements[cur], p);
            if (!seen.insert(next).second) continue;
            require(g.elements.size() < cap, "group-too-large", "permutation group exceeds the cap");
            g.elements.push_back(std::move(next));
        }
    return g;
}

namespace {

Permutation cycle(unsigned degree, std::initializer_list<unsigned> letters) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    const std::vector<unsigned> c(letters);
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

} // namespace

PermGroup builtin_perm_group(GroupFamily family, long n) {
    switch (family) {
        case GroupFamily::Cyclic: {
            require(n >= 1, "invalid-argument", "cyclic groups need n >= 1");
            const auto d = static_cast<unsigned>(n);
            Permutation rot(d);
            for (unsigned i = 0; i < d; ++i) rot[i] = (i + 1) % d;
            return perm_closure(d, {rot});
        }
        case GroupFamily::Dihedral: {
            require(n >= 3, "invalid-argument", "dihedral groups need n >= 3");
            const auto d = static_cast<unsigned>(n);
            Permutation rot(d), flip(d);
            for (unsigned i = 0; i < d; ++i) {
                rot[i] = (i + 1) % d;
                flip[i] = (d - i) % d;
            }
            return perm_closure(d, {rot, flip});
        }
        case GroupFamily::A4: return perm_closure(4, {cycle(4, {0, 1, 2}), compose(cycle(4, {0, 1}), cycle(4, {2, 3}))});
        case GroupFamily::S4: return perm_closure(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
        case GroupFamily::A5: return perm_closure(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})});
    }
    fail("unknown-group", "unknown group family");
}

std::size_t conjugacy_class_count(const PermGroup& g) {
    std::set<Permutation> done;
    std::size_t classes = 0;
    for (const auto& x : g.elements) {
        if (done.count(x)) continue;
        ++classes;
        for (const auto& y : g.elements) done.insert(compose(compose(y, x), inverse(y)));
    }
    return classes;
}

std::uint64_t brute_force_homs(const PermGroup& g, long genus) {
    require(genus >= 0, "invalid-argument", "genus must be non-negative");
    const std::size_t n = g.elements.size();
    double size = 1;
    for (long i = 0; i < 2 * genus; ++i) size *= static_cast<double>(n);
    require(size <= 1e7, "guard-exceeded", "|G|^(2g) exceeds 10^7");
    if (genus == 0) return 1;

    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[g.elements[i]] = i;
    std::vector<std::size_t> mul(n * n), inv(n);
    for (std::size_t a = 0; a < n; ++a) {
        inv[a] = index.at(inverse(g.elements[a]));
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(g.elements[a], g.elements[b]));
    }
    // comm[a][b] = a b a^{-1} b^{-1}
    std::vector<std::size_t> comm(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) comm[a * n + b] = mul[mul[mul[a * n + b] * n + inv[a]] * n + inv[b]];

    const auto slots = static_cast<std::size_t>(2 * genus);
    std::vector<std::size_t> t(slots, 0);
    std::uint64_t count = 0;
    for (;;) {
        std::size_t prod = 0;  // identity is element 0
        for (std::size_t i = 0; i < slots; i += 2) prod = mul[prod * n + comm[t[i] * n + t[i + 1]]];
        if (prod == 0) ++count;
        std::size_t i = 0;
        while (i < slots && t[i] == n - 1) t[i++] = 0;
        if (i == slots) break;
        ++t[i];
    }
    return count;
}

} // namespace projendo
