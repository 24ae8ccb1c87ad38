#pragma once

#include "projendo/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projendo {

enum class GroupFamily { Cyclic, Dihedral, A4, S4, A5 };

/// "cyclic", "dihedral", "A4", "S4", "A5"; "S3" is accepted as dihedral with
/// n = 3 and reported through `n`. Errors: "unknown-group".
GroupFamily parse_group_family(std::string_view name, long* n = nullptr);
std::string to_string(GroupFamily f);

/// Order and irreducible degrees of a finite group. Construction checks
/// sum d^2 = order ("burnside-violation").
struct GroupRepData {
    std::string name;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> irrep_degrees;

    GroupRepData(std::string name, std::uint64_t order, std::vector<std::uint64_t> degrees);
};

/// Dihedral n means the symmetries of the n-gon, of order 2n.
/// Errors: "invalid-argument" (n < 1 for cyclic, n < 3 for dihedral).
GroupRepData builtin_group_data(GroupFamily family, long n = 0);

/// #G sum_r (#G / d_r)^(2g - 2). Errors: "invalid-argument" for g < 0.
Rational count_homs(const GroupRepData& g, long genus);

using Permutation = std::vector<unsigned>;

/// Exhaustive element list of a permutation group on {0, ..., degree-1}.
struct PermGroup {
    unsigned degree = 0;
    std::vector<Permutation> elements;  // identity first
};

Permutation compose(const Permutation& a, const Permutation& b);  // (a b)(i) = a(b(i))
Permutation inverse(const Permutation& a);

/// Closure of the generators under composition. Errors: "group-too-large" past `cap`.
PermGroup perm_closure(unsigned degree, const std::vector<Permutation>& generators, std::size_t cap = 100000);

/// C_n as an n-cycle, dihedral n on the vertices of the n-gon, A4 and S4 on
/// four letters, A5 on five.
PermGroup builtin_perm_group(GroupFamily family, long n = 0);

std::size_t conjugacy_class_count(const PermGroup& g);

/// Tuples (a_1, b_1, ..., a_g, b_g) with prod [a_i, b_i] = 1, by enumeration.
/// Errors: "guard-exceeded" when |G|^(2g) > 10^7.
std::uint64_t brute_force_homs(const PermGroup& g, long genus);

} // namespace projendo
