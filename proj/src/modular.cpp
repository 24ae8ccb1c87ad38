#include "projendo/modular.hpp"

#include "projendo/error.hpp"

#include <algorithm>

namespace projendo {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw InternalError("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Dense polynomials over F_p, low-to-high, trimmed.
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

ModPoly rem(ModPoly a, const ModPoly& b, u64 p) {
    const std::size_t db = b.size() - 1;
    const u64 inv = invmod(b.back(), p);
    while (a.size() > db) {
        const u64 q = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - mulmod(q, b[j], p)) % p;
        trim(a);
    }
    return a;
}

ModPoly mulrem(const ModPoly& a, const ModPoly& b, const ModPoly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return rem(std::move(r), m, p);
}

ModPoly powrem(ModPoly base, u64 e, const ModPoly& m, u64 p) {
    ModPoly r{1};
    base = rem(std::move(base), m, p);
    while (e != 0) {
        if (e & 1U) r = mulrem(r, base, m, p);
        base = mulrem(base, base, m, p);
        e >>= 1U;
    }
    return r;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        ModPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

ModPoly quotient(ModPoly a, const ModPoly& b, u64 p) {
    const std::size_t db = b.size() - 1;
    ModPoly q(a.size() - db, 0);
    const u64 inv = invmod(b.back(), p);
    for (std::size_t k = a.size(); k-- > db;) {
        const u64 c = mulmod(a[k], inv, p);
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = (a[k - db + j] + p - mulmod(c, b[j], p)) % p;
    }
    trim(q);
    return q;
}

// One root of a monic product of distinct linear factors (equal-degree splitting).
u64 split_root(ModPoly g, u64 p) {
    while (g.size() > 2) {
        bool split = false;
        for (u64 delta = 0; delta < 1000 && !split; ++delta) {
            ModPoly h = powrem(ModPoly{delta, 1}, (p - 1) / 2, g, p);
            h = sub(std::move(h), ModPoly{1}, p);
            ModPoly d = gcd(g, h, p);
            if (d.size() >= 2 && d.size() < g.size()) {
                const std::size_t other = g.size() - d.size() + 1;
                g = d.size() <= other ? d : quotient(g, d, p);
                split = true;
            }
        }
        if (!split) throw InternalError("split_root: no splitting found");
    }
    // g = t + c
    return (p - g[0]) % p;
}

} // namespace

std::optional<u64> reduce(const FieldElement& x, const PrimeEmbedding& e) {
    const u64 p = e.p;
    Integer pz;
    mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
    u64 acc = 0, power = 1;
    for (const auto& c : x.coords()) {
        Integer nm, dm;
        mpz_mod(nm.get_mpz_t(), c.get_num_mpz_t(), pz.get_mpz_t());
        mpz_mod(dm.get_mpz_t(), c.get_den_mpz_t(), pz.get_mpz_t());
        const u64 dv = mpz_get_ui(dm.get_mpz_t());
        if (dv == 0) return std::nullopt;
        const u64 term = mulmod(mpz_get_ui(nm.get_mpz_t()), invmod(dv, p), p);
        acc = (acc + mulmod(term, power, p)) % p;
        power = mulmod(power, e.root, p);
    }
    return acc;
}

std::vector<PrimeEmbedding> prime_embeddings(const NumberField& field, std::size_t count) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    std::vector<PrimeEmbedding> out;
    const auto& mu = field.modulus();
    for (u64 p = (1ULL << 62) - 1; out.size() < count; p -= 2) {
        if (!is_prime_u64(p)) continue;
        if (field.is_rationals()) {
            out.push_back({p, 0});
            continue;
        }
        // reduce the modulus; skip primes dividing a denominator
        PrimeEmbedding probe{p, 1};
        ModPoly m;
        bool ok = true;
        for (const auto& c : mu) {
            auto v = reduce(FieldElement(c), probe);
            if (!v) {
                ok = false;
                break;
            }
            m.push_back(*v);
        }
        if (!ok) continue;
        trim(m);
        // linear part: gcd(m, t^p - t)
        ModPoly tp = powrem(ModPoly{0, 1}, p, m, p);
        ModPoly g = gcd(m, sub(std::move(tp), ModPoly{0, 1}, p), p);
        if (g.size() < 2) continue;
        out.push_back({p, split_root(std::move(g), p)});
    }
    return out;
}

std::size_t rank_mod_p(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
        const u64 inv = invmod(a[rank * cols + col], p);
        u64* prow = &a[rank * cols];
        for (std::size_t j = col; j < cols; ++j) prow[j] = mulmod(prow[j], inv, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            u64* row = &a[i * cols];
            const u64 f = row[col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                if (prow[j] == 0) continue;
                row[j] = (row[j] + p - mulmod(f, prow[j], p)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace projendo
