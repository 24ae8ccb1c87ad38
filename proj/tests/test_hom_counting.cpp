#include "projendo/error.hpp"
#include "projendo/hom_counting.hpp"

#include <doctest.h>

using namespace projendo;

namespace {

struct Case {
    GroupFamily family;
    long n;
};

const std::vector<Case> kBuiltins{{GroupFamily::Cyclic, 1}, {GroupFamily::Cyclic, 2}, {GroupFamily::Cyclic, 5},
                                  {GroupFamily::Dihedral, 3}, {GroupFamily::Dihedral, 4}, {GroupFamily::Dihedral, 7},
                                  {GroupFamily::A4, 0}, {GroupFamily::S4, 0}, {GroupFamily::A5, 0}};

Rational integer_power(long base, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

TEST_CASE("builtin group data") {
    const auto c5 = builtin_group_data(GroupFamily::Cyclic, 5);
    CHECK(c5.order == 5);
    CHECK(c5.irrep_degrees == std::vector<std::uint64_t>(5, 1));
    CHECK(builtin_group_data(GroupFamily::S4).irrep_degrees == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
    const auto s3 = builtin_group_data(GroupFamily::Dihedral, 3);
    CHECK(s3.order == 6);
    CHECK(s3.irrep_degrees == std::vector<std::uint64_t>{1, 1, 2});
    CHECK(builtin_group_data(GroupFamily::Dihedral, 6).irrep_degrees == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2});
    CHECK(builtin_group_data(GroupFamily::A5).order == 60);
    CHECK_THROWS_AS(builtin_group_data(GroupFamily::Dihedral, 2), Error);
    CHECK_THROWS_AS(builtin_group_data(GroupFamily::Cyclic, 0), Error);
    CHECK_THROWS_AS(GroupRepData("bad", 6, {1, 1, 1}), Error);
    long n = 0;
    CHECK(parse_group_family("S3", &n) == GroupFamily::Dihedral);
    CHECK(n == 3);
    CHECK_THROWS_AS(parse_group_family("S5"), Error);
}

TEST_CASE("irreducible counts match conjugacy classes") {
    for (const auto& c : kBuiltins) {
        const auto data = builtin_group_data(c.family, c.n);
        const auto perm = builtin_perm_group(c.family, c.n);
        CHECK(perm.elements.size() == data.order);
        CHECK(conjugacy_class_count(perm) == data.irrep_degrees.size());
    }
}

TEST_CASE("counting formula values") {
    for (const auto& c : kBuiltins) CHECK(count_homs(builtin_group_data(c.family, c.n), 0) == 1);
    for (long n = 1; n <= 6; ++n)
        for (long g = 0; g <= 4; ++g) CHECK(count_homs(builtin_group_data(GroupFamily::Cyclic, n), g) == integer_power(n, 2 * g));
    CHECK(count_homs(builtin_group_data(GroupFamily::Dihedral, 3), 2) == 486);
    for (const auto& c : kBuiltins) {
        const auto d = builtin_group_data(c.family, c.n);
        CHECK(count_homs(d, 1) == Rational(static_cast<unsigned long>(d.order * d.irrep_degrees.size())));
        for (long g = 1; g <= 4; ++g) CHECK(count_homs(d, g).get_den() == 1);
    }
    CHECK_THROWS_AS(count_homs(builtin_group_data(GroupFamily::A4), -1), Error);
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_homs(builtin_perm_group(GroupFamily::Cyclic, 2), 1) == 4);
    CHECK(brute_force_homs(builtin_perm_group(GroupFamily::A4), 1) == 48);
    CHECK(brute_force_homs(builtin_perm_group(GroupFamily::Dihedral, 3), 2) == 486);
    CHECK_THROWS_AS(brute_force_homs(builtin_perm_group(GroupFamily::A5), 2), Error);
}

TEST_CASE("formula agrees with enumeration") {
    const std::vector<Case> small{{GroupFamily::Cyclic, 2}, {GroupFamily::Cyclic, 3}, {GroupFamily::Cyclic, 4},
                                  {GroupFamily::Dihedral, 3}, {GroupFamily::Dihedral, 4}, {GroupFamily::A4, 0}};
    for (const auto& c : small)
        for (long g = 1; g <= 2; ++g)
            CHECK(count_homs(builtin_group_data(c.family, c.n), g) ==
                  Rational(static_cast<unsigned long>(brute_force_homs(builtin_perm_group(c.family, c.n), g))));
    CHECK(count_homs(builtin_group_data(GroupFamily::S4), 1) == brute_force_homs(builtin_perm_group(GroupFamily::S4), 1));
    CHECK(count_homs(builtin_group_data(GroupFamily::A5), 1) == brute_force_homs(builtin_perm_group(GroupFamily::A5), 1));
}
