#include "okdens/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

#include "okdens/error.hpp"

namespace okdens {

namespace {

void check_bound(std::uint64_t bound)
{
    if (bound < 1 || bound > (std::uint64_t{1} << 62))
        throw Error(ErrorCode::BadBound, "coordinate bound B must be in [1, 2^62]");
}

// Runs fn(task) for task in [0, count) on up to `workers` threads; rethrows the first failure.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn)
{
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    auto work = [&] {
        for (;;) {
            const std::uint64_t task = next.fetch_add(1);
            if (task >= count || failed.load()) return;
            try {
                fn(task);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), std::max<std::uint64_t>(count, 1)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

MatrixOK sample_matrix(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                       Xoshiro256StarStar& rng)
{
    check_bound(bound);
    const int k = field->degree();
    MatrixOK mat;
    mat.field = field;
    mat.n = n;
    mat.m = m;
    mat.entries.reserve(n * m);
    const std::uint64_t range = 2 * bound;
    const auto offset = static_cast<long>(bound);
    for (std::size_t e = 0; e < n * m; ++e) {
        std::vector<BigInt> coords(static_cast<std::size_t>(k));
        for (auto& c : coords) c = static_cast<long>(rng.below(range)) - offset;
        mat.entries.emplace_back(std::move(coords));
    }
    return mat;
}

std::uint64_t batch_seed(std::uint64_t master_seed, std::uint64_t batch) noexcept
{
    return splitmix64_mix(master_seed ^ batch);
}

std::uint64_t sweep_seed(std::uint64_t master_seed, std::uint64_t bound) noexcept
{
    return master_seed ^ splitmix64_mix(bound);
}

std::uint64_t count_unimodular(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                               std::uint64_t samples, std::uint64_t seed, unsigned workers)
{
    check_bound(bound);
    if (n < 1 || n > m) throw Error(ErrorCode::BadShape, "need 1 <= n <= m");
    const std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;
    std::vector<std::uint64_t> tallies(batches, 0);
    UnimodOptions options;
    options.want_witness = false;
    parallel_for(batches, workers, [&](std::uint64_t b) {
        Xoshiro256StarStar rng(batch_seed(seed, b));
        const std::uint64_t size = std::min(kBatchSize, samples - b * kBatchSize);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < size; ++i)
            if (is_unimodular(sample_matrix(field, n, m, bound, rng), options).verdict) ++hits;
        tallies[b] = hits;
    });
    std::uint64_t total = 0;
    for (auto h : tallies) total += h;
    return total;
}

ExperimentReport run_experiment(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                                std::uint64_t samples, std::uint64_t seed, const ExperimentOptions& options)
{
    if (n < 1 || n >= m) throw Error(ErrorCode::BadShape, "experiments need 1 <= n < m");
    if (samples < 1) throw Error(ErrorCode::BadBound, "sample count must be at least 1");
    check_bound(bound);
    ExperimentReport report;
    report.field = field;
    report.n = n;
    report.m = m;
    report.bound = bound;
    report.samples = samples;
    report.seed = seed;
    report.workers = std::max(1u, options.workers);
    report.warnings = field->warnings();

    const auto start = std::chrono::steady_clock::now();
    report.hits = count_unimodular(field, n, m, bound, samples, seed, report.workers);
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.empirical = static_cast<double>(report.hits) / static_cast<double>(samples);
    report.ci_half_width =
        3.0 * std::sqrt(report.empirical * (1.0 - report.empirical) / static_cast<double>(samples));
    if (options.split_table)
        report.predicted = predicted_density(*options.split_table, static_cast<int>(n), static_cast<int>(m));
    else
        report.predicted = predicted_density(*field, static_cast<int>(n), static_cast<int>(m), options.prime_bound,
                                             report.workers);
    return report;
}

std::vector<ExperimentReport> sweep_B(const FieldPtr& field, std::size_t n, std::size_t m,
                                      const std::vector<std::uint64_t>& bounds, std::uint64_t samples,
                                      std::uint64_t seed, const ExperimentOptions& options)
{
    if (n < 1 || n >= m) throw Error(ErrorCode::BadShape, "experiments need 1 <= n < m");
    for (auto b : bounds) check_bound(b);
    std::optional<SplitTable> own_table;
    ExperimentOptions opts = options;
    if (!opts.split_table && !bounds.empty()) {
        own_table = SplitTable::build(*field, options.prime_bound, std::max(1u, options.workers));
        opts.split_table = &*own_table;
    }
    std::vector<ExperimentReport> out;
    out.reserve(bounds.size());
    for (auto b : bounds) out.push_back(run_experiment(field, n, m, b, samples, sweep_seed(seed, b), opts));
    return out;
}

void write_sweep_csv(std::ostream& os, const std::vector<ExperimentReport>& reports)
{
    os << kSweepCsvHeader << '\n';
    const auto old_precision = os.precision(10);
    for (const auto& r : reports) {
        os << r.field->polynomial_string() << ',' << r.n << ',' << r.m << ',' << r.bound << ',' << r.samples << ','
           << r.seed << ',' << r.hits << ',' << r.empirical << ',' << r.predicted.to_double() << ','
           << r.predicted.tail_bound << ',' << r.ci_half_width << '\n';
    }
    os.precision(old_precision);
}

ExactDensity brute_force_density(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                                 unsigned workers)
{
    check_bound(bound);
    if (n < 1 || n > m) throw Error(ErrorCode::BadShape, "need 1 <= n <= m");
    const std::size_t k = static_cast<std::size_t>(field->degree());
    const std::size_t coords = n * m * k;
    const BigInt range = big_from_u64(2 * bound);
    BigInt total;
    mpz_pow_ui(total.get_mpz_t(), range.get_mpz_t(), coords);
    if (total > kBruteForceBudget)
        throw Error(ErrorCode::BudgetExceeded, "(2B)^(n m k) = " + total.get_str() + " exceeds the enumeration budget of " +
                                                   std::to_string(kBruteForceBudget));
    const std::uint64_t count = to_u64(total);
    const std::uint64_t base = 2 * bound;
    const std::uint64_t chunks = (count + kBatchSize - 1) / kBatchSize;
    std::vector<std::uint64_t> tallies(chunks, 0);
    UnimodOptions options;
    options.want_witness = false;
    parallel_for(chunks, workers, [&](std::uint64_t c) {
        MatrixOK mat;
        mat.field = field;
        mat.n = n;
        mat.m = m;
        mat.entries.assign(n * m, AlgElem::zero(static_cast<int>(k)));
        std::uint64_t hits = 0;
        const std::uint64_t end = std::min(count, (c + 1) * kBatchSize);
        for (std::uint64_t idx = c * kBatchSize; idx < end; ++idx) {
            // mixed-radix digits of idx are the coordinates shifted by B
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < coords; ++j) {
                mat.entries[j / k][j % k] = static_cast<long>(rest % base) - static_cast<long>(bound);
                rest /= base;
            }
            if (is_unimodular(mat, options).verdict) ++hits;
        }
        tallies[c] = hits;
    });
    ExactDensity out;
    out.total = total;
    out.hits = 0;
    for (auto h : tallies) out.hits += big_from_u64(h);
    return out;
}

}  // namespace okdens
