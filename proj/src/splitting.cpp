#include "okdens/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "okdens/error.hpp"
#include "okdens/factor_int.hpp"
#include "okdens/modular.hpp"

namespace okdens {

int PrimeSplit::degree_sum() const
{
    int s = 0;
    for (const auto& f : factors) s += f.e * f.f_deg;
    return s;
}

PrimeSplit split_prime(const NumberField& field, std::uint64_t p)
{
    if (!modular::is_prime(p) || p >= (std::uint64_t{1} << 63))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^63");
    if (!field.maximality_established_at(big_from_u64(p)))
        throw Error(ErrorCode::UnverifiedAtP,
                    "maximality of Z[theta] at p=" + std::to_string(p) + " (p^2 | disc) was not established");
    std::vector<std::uint64_t> c(field.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_u64(field.coeffs()[i], p);
    PrimeSplit split;
    split.p = p;
    for (auto& [g, e] : factor_mod_p(PolyModP(p, std::move(c))))
        split.factors.push_back({g, e, g.degree()});
    return split;
}

PolyModP reduce_elem(const PrimeSplit& split, std::size_t i, const AlgElem& a)
{
    if (i >= split.factors.size())
        throw Error(ErrorCode::IndexOutOfRange, "prime ideal index " + std::to_string(i) + " out of range");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(a.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = mod_u64(a[j], split.p);
    return PolyModP(split.p, std::move(c)) % split.factors[i].g;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi <= 2 || hi <= lo) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    while (root * root >= hi && root > 1) --root;
    const auto small = primes_up_to(root + 1);
    std::vector<bool> composite(hi - lo, false);
    for (std::uint64_t q : small) {
        if (q * q >= hi) break;
        std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
        for (std::uint64_t j = start; j < hi; j += q) composite[j - lo] = true;
    }
    for (std::uint64_t v = lo; v < hi; ++v)
        if (!composite[v - lo]) out.push_back(v);
    return out;
}

SplitTable SplitTable::build(const NumberField& field, std::uint64_t prime_bound, unsigned workers)
{
    if (field.degree() > 15) throw Error(ErrorCode::InvalidInput, "split tables support field degree <= 15");
    if (prime_bound < 2) throw Error(ErrorCode::BadBound, "prime bound must be at least 2");
    SplitTable table;
    table.bound_ = prime_bound;
    table.k_ = field.degree();
    const std::uint64_t nblocks = prime_bound / kBlockSize + 1;
    table.blocks_.resize(nblocks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= nblocks || failed.load()) return;
            try {
                const std::uint64_t lo = b * kBlockSize;
                const std::uint64_t hi = std::min(lo + kBlockSize, prime_bound + 1);
                std::vector<Entry> entries;
                for (std::uint64_t p : primes_in_range(lo, hi)) {
                    const PrimeSplit s = split_prime(field, p);
                    Entry e{};
                    e.p = p;
                    e.count = static_cast<std::uint8_t>(s.factors.size());
                    for (std::size_t i = 0; i < s.factors.size(); ++i)
                        e.degrees[i] = static_cast<std::uint8_t>(s.factors[i].f_deg);
                    entries.push_back(e);
                }
                table.blocks_[b] = std::move(entries);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

std::size_t SplitTable::prime_count() const
{
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
}

}  // namespace okdens
