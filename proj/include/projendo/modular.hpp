#pragma once

#include "projendo/number_field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace projendo {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
/// Inverse modulo a prime p; a must be nonzero mod p.
u64 invmod(u64 a, u64 p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

/// A ring homomorphism Z_(p)[alpha] -> F_p, alpha -> root, for a prime p at
/// which the minimal polynomial has a root and all its coefficients are
/// p-integral. A nonzero image certifies a nonzero element.
struct PrimeEmbedding {
    u64 p = 0;
    u64 root = 0;
};

/// The first `count` usable embeddings of `field` among primes just below
/// 2^62, in decreasing prime order.
std::vector<PrimeEmbedding> prime_embeddings(const NumberField& field, std::size_t count);

/// Image of x; nullopt when some denominator is divisible by p.
std::optional<u64> reduce(const FieldElement& x, const PrimeEmbedding& e);

/// Rank of a dense row-major matrix over F_p (the buffer is consumed).
std::size_t rank_mod_p(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p);

} // namespace projendo
