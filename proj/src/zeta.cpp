#include "okdens/zeta.hpp"

#include <cmath>

#include "okdens/error.hpp"

namespace okdens {

namespace {

HighPrecision ideal_factor(std::uint64_t p, int deg, int s)
{
    // 1 - (p^deg)^{-s}
    HighPrecision q = 1;
    for (int i = 0; i < deg; ++i) q *= p;
    HighPrecision x = 1 / q;
    HighPrecision t = 1;
    for (int i = 0; i < s; ++i) t *= x;
    return 1 - t;
}

void check_shape(int n, int m)
{
    if (n < 1 || n >= m)
        throw Error(ErrorCode::BadShape, "need 1 <= n < m (zeta_K(1) diverges), got n=" + std::to_string(n) +
                                             ", m=" + std::to_string(m));
}

}  // namespace

HighPrecision euler_factor(const PrimeSplit& split, int s)
{
    if (s < 2) throw Error(ErrorCode::BadExponent, "Euler factor exponent must be >= 2, got " + std::to_string(s));
    HighPrecision r = 1;
    for (const auto& f : split.factors) r *= ideal_factor(split.p, f.f_deg, s);
    return r;
}

double euler_tail_bound(int field_degree, int n, int m, std::uint64_t prime_bound)
{
    const int s_min = m - n + 1;
    return 2.0 * field_degree * n * std::pow(static_cast<double>(prime_bound), 1 - s_min) / (s_min - 1);
}

EulerProductResult predicted_density(const SplitTable& table, int n, int m)
{
    check_shape(n, m);
    EulerProductResult result;
    result.n = n;
    result.m = m;
    result.prime_bound = table.prime_bound();
    result.tail_bound = euler_tail_bound(table.field_degree(), n, m, table.prime_bound());
    HighPrecision total = 1;
    for (const auto& block : table.blocks()) {
        HighPrecision partial = 1;
        for (const auto& e : block) {
            for (int idx = 0; idx < e.count; ++idx) {
                const int deg = e.degrees[idx];
                // x = p^{-deg}; the factors for s = m-n+1 .. m share its powers
                HighPrecision q = 1;
                for (int i = 0; i < deg; ++i) q *= e.p;
                const HighPrecision x = 1 / q;
                HighPrecision t = 1;
                for (int i = 0; i < m - n + 1; ++i) t *= x;
                for (int s = m - n + 1; s <= m; ++s) {
                    partial *= (1 - t);
                    t *= x;
                }
            }
        }
        total *= partial;
    }
    result.value = total;
    return result;
}

EulerProductResult predicted_density(const NumberField& field, int n, int m, std::uint64_t prime_bound,
                                     unsigned workers)
{
    check_shape(n, m);
    if (prime_bound < 2) throw Error(ErrorCode::BadBound, "prime bound must be at least 2");
    return predicted_density(SplitTable::build(field, prime_bound, workers), n, m);
}

}  // namespace okdens
