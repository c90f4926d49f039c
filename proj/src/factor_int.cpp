#include "okdens/factor_int.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "okdens/error.hpp"

namespace okdens {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

bool is_probable_prime(const BigInt& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace {

const std::vector<std::uint64_t>& trial_primes(std::uint64_t limit)
{
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(limit);
    if (it == cache.end()) it = cache.emplace(limit, primes_up_to(limit)).first;
    return it->second;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 on budget exhaustion.
BigInt pollard_brent(const BigInt& n, std::uint64_t max_iterations)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::uint64_t used = 0;
    for (unsigned long c = 1; used < max_iterations; ++c) {
        BigInt y = 2, x, ys, q = 1, g = 1, tmp;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (g == 1 && used < max_iterations) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    tmp = x - y;
                    q = q * abs(tmp);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                used += lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                step(ys);
                tmp = x - ys;
                mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
                g = abs(g);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void split_composite(const BigInt& n, const FactorBudget& budget, std::map<BigInt, int>& out, int mult)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            split_composite(root, budget, out, mult * static_cast<int>(k));
            return;
        }
    }
    BigInt d = pollard_brent(n, budget.rho_iterations);
    if (d == 0)
        throw Error(ErrorCode::FactorizationTooHard,
                    "could not split " + n.get_str() + " within the rho budget of " +
                        std::to_string(budget.rho_iterations) + " iterations");
    split_composite(d, budget, out, mult);
    split_composite(BigInt(n / d), budget, out, mult);
}

}  // namespace

std::vector<PrimePower> factor_integer(const BigInt& n_in, const FactorBudget& budget)
{
    if (n_in == 0) throw Error(ErrorCode::InvalidInput, "cannot factor zero");
    BigInt n = abs(n_in);
    std::map<BigInt, int> found;
    for (std::uint64_t p : trial_primes(budget.trial_limit)) {
        if (n == 1) break;
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) found[big_from_u64(p)] += e;
    }
    if (n != 1) split_composite(n, budget, found, 1);
    std::vector<PrimePower> out;
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

}  // namespace okdens
