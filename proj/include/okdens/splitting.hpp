#pragma once

#include <cstdint>
#include <vector>

#include "okdens/field.hpp"
#include "okdens/poly_mod_p.hpp"

namespace okdens {

/// One prime ideal (p, g(theta)) above p.
struct PrimeIdealFactor {
    PolyModP g;          // monic irreducible factor of f mod p
    int e = 1;           // ramification index
    int f_deg = 1;       // inertia degree = deg g
};

/// p O_K = prod p_i^{e_i}; invariant sum e_i * f_deg_i = k.
struct PrimeSplit {
    std::uint64_t p = 0;
    std::vector<PrimeIdealFactor> factors;

    int degree_sum() const;
};

/// Factorization of p in O_K read off from f mod p (Dedekind-Kummer).
/// Throws NotPrime, or UnverifiedAtP if p^2 | disc(f) and maximality at p was never checked.
PrimeSplit split_prime(const NumberField& field, std::uint64_t p);

/// Image of a in the residue field F_p[x]/(g_i). Throws IndexOutOfRange.
PolyModP reduce_elem(const PrimeSplit& split, std::size_t i, const AlgElem& a);

/// Compact splitting data (inertia degrees only) for every prime up to a bound,
/// computed per fixed-size block of the integer range. Blocks are written by
/// exactly one worker each and published only after all workers join, so
/// readers only ever see complete entries.
class SplitTable {
public:
    static constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 16;

    struct Entry {
        std::uint64_t p;
        std::uint8_t count;       // number of prime ideals above p
        std::uint8_t degrees[15]; // their inertia degrees
    };

    /// Splits every prime p <= prime_bound using up to `workers` threads.
    static SplitTable build(const NumberField& field, std::uint64_t prime_bound, unsigned workers = 1);

    std::uint64_t prime_bound() const noexcept { return bound_; }
    int field_degree() const noexcept { return k_; }
    /// Entries of block b in ascending prime order.
    const std::vector<std::vector<Entry>>& blocks() const noexcept { return blocks_; }
    std::size_t prime_count() const;

private:
    std::uint64_t bound_ = 0;
    int k_ = 0;
    std::vector<std::vector<Entry>> blocks_;
};

/// Primes in [lo, hi) by a segmented sieve (lo >= 0).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace okdens
