#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "okdens/field.hpp"
#include "okdens/splitting.hpp"

namespace okdens {

/// 113-bit mantissa binary float.
using HighPrecision = boost::multiprecision::cpp_bin_float_quad;

inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

/// Truncated Euler product for prod_{i<n} 1/zeta_K(m-i) over primes p <= prime_bound.
struct EulerProductResult {
    HighPrecision value = 1;
    std::uint64_t prime_bound = 0;
    /// Certified relative truncation error: |true - value| / value <= tail_bound.
    double tail_bound = 0;
    int n = 0;
    int m = 0;

    double to_double() const { return value.convert_to<double>(); }
    std::string value_string(int digits = 30) const { return value.str(digits); }
};

/// prod over prime ideals above p of (1 - p^{-deg * s}); ramification is ignored.
/// Throws BadExponent for s < 2.
HighPrecision euler_factor(const PrimeSplit& split, int s);

/// 2 k n P^{1-s} / (s-1) with s = m - n + 1.
double euler_tail_bound(int field_degree, int n, int m, std::uint64_t prime_bound);

/// Density of unimodular n x m matrices predicted by prod_{i<n} 1/zeta_K(m-i),
/// truncated at prime_bound. Primes are processed in blocks of
/// SplitTable::kBlockSize; partial products are combined in block order, so
/// the value does not depend on the number of workers.
/// Throws BadShape (unless 1 <= n < m) and BadBound (prime_bound < 2).
EulerProductResult predicted_density(const NumberField& field, int n, int m,
                                     std::uint64_t prime_bound = kDefaultPrimeBound, unsigned workers = 1);

/// Same, reusing a precomputed split table (its bound is the truncation point).
EulerProductResult predicted_density(const SplitTable& table, int n, int m);

}  // namespace okdens
