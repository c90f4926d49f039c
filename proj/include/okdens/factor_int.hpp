#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "okdens/bigint.hpp"

namespace okdens {

/// All primes <= limit (simple sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Budget for integer factorization: trial division up to trial_limit,
/// then Pollard-Brent rho capped at rho_iterations per composite.
struct FactorBudget {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_iterations = 10'000'000;
};

struct PrimePower {
    BigInt prime;
    int exponent;
};

/// Factorization of |n| into primes (ascending). n must be nonzero.
/// Throws FactorizationTooHard when the budget runs out.
std::vector<PrimePower> factor_integer(const BigInt& n, const FactorBudget& budget = {});

bool is_probable_prime(const BigInt& n);

}  // namespace okdens
