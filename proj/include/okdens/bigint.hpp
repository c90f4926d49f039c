#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace okdens {

using BigInt = mpz_class;

inline BigInt big_from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt big_from_i64(std::int64_t v)
{
    if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
    // -(v+1)+1 avoids overflow at INT64_MIN
    BigInt r = big_from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
    return -r;
}

/// Least non-negative residue of x modulo p (p > 0).
inline std::uint64_t mod_u64(const BigInt& x, std::uint64_t p)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

inline bool fits_u64(const BigInt& x)
{
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& x)
{
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, x.get_mpz_t());
    return v;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace okdens
