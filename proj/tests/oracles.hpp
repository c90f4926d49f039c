#pragma once

// Test-only reference computations. They deliberately avoid the library's
// algorithms (no Bareiss, no HNF, no factor_mod_p) so they can check them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "okdens/bigint.hpp"

namespace oracle {

using okdens::BigInt;
using Grid = std::vector<std::vector<BigInt>>;

/// Determinant by Laplace expansion along the first row.
inline BigInt cofactor_det(const Grid& a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        Grid minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        BigInt term = a[0][j] * cofactor_det(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

/// Sylvester matrix of f, g (constant term first), highest coefficients left.
inline Grid sylvester(const std::vector<BigInt>& f, const std::vector<BigInt>& g)
{
    const std::size_t a = f.size() - 1, b = g.size() - 1, n = a + b;
    Grid s(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j <= a; ++j) s[i][i + j] = f[a - j];
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j <= b; ++j) s[b + i][i + j] = g[b - j];
    return s;
}

/// Roots of c0 + c1 x + ... in F_p by trying every residue.
inline std::vector<std::uint64_t> roots_mod_p(const std::vector<std::int64_t>& c, std::uint64_t p)
{
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        __int128 acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = (acc * static_cast<__int128>(x) + *it) % static_cast<__int128>(p);
            if (acc < 0) acc += p;
        }
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

/// gcd of all n x n minors of an integer matrix, minors by cofactor expansion.
inline BigInt gcd_of_minors(const Grid& mat)
{
    const std::size_t n = mat.size(), m = mat[0].size();
    BigInt g = 0;
    std::vector<int> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), 1);
    std::sort(pick.begin(), pick.end());
    do {
        Grid sub(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (pick[j]) sub[i].push_back(mat[i][j]);
        BigInt d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::next_permutation(pick.begin(), pick.end()));
    return g;
}

/// Count of integer m-tuples in [-B, B)^m with gcd 1, by enumeration.
inline std::uint64_t coprime_tuples(int m, long bound)
{
    const long range = 2 * bound;
    long total = 1;
    for (int i = 0; i < m; ++i) total *= range;
    std::uint64_t hits = 0;
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx, g = 0;
        for (int i = 0; i < m; ++i) {
            g = std::gcd(g, rest % range - bound);
            rest /= range;
        }
        if (g == 1) ++hits;
    }
    return hits;
}

inline std::vector<long> random_ints(std::mt19937_64& rng, std::size_t count, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<long> v(count);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace oracle
