#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "okdens/field.hpp"
#include "okdens/rng.hpp"
#include "okdens/unimodular.hpp"
#include "okdens/zeta.hpp"

namespace okdens {

inline constexpr std::uint64_t kBatchSize = 1024;
inline constexpr std::uint64_t kDefaultBound = 3;
inline constexpr std::uint64_t kDefaultSamples = 50'000;
inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

/// n x m matrix whose n*m*k coordinates are drawn independently and uniformly
/// from the 2B integers -B, ..., B-1 (row-major entries, coordinates in order).
MatrixOK sample_matrix(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                       Xoshiro256StarStar& rng);

/// Seed of batch b: SplitMix64(master ^ b).
std::uint64_t batch_seed(std::uint64_t master_seed, std::uint64_t batch) noexcept;

/// Seed used for bound B in a sweep: master ^ SplitMix64(B).
std::uint64_t sweep_seed(std::uint64_t master_seed, std::uint64_t bound) noexcept;

/// Number of unimodular matrices among `samples` draws. Samples are cut into
/// batches of kBatchSize, each with its own generator; workers claim whole
/// batches, so the count is independent of the worker count.
std::uint64_t count_unimodular(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                               std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

struct ExperimentOptions {
    unsigned workers = 1;
    std::uint64_t prime_bound = kDefaultPrimeBound;
    /// Reused when present instead of rebuilding the split table per report.
    const SplitTable* split_table = nullptr;
};

struct ExperimentReport {
    FieldPtr field;
    std::size_t n = 0, m = 0;
    std::uint64_t bound = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    double empirical = 0;
    EulerProductResult predicted;
    double ci_half_width = 0;
    double wall_time = 0;
    unsigned workers = 1;
    std::vector<std::string> warnings;
};

/// Monte-Carlo estimate of the unimodular proportion at bound B.
ExperimentReport run_experiment(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                                std::uint64_t samples, std::uint64_t seed, const ExperimentOptions& options = {});

/// One experiment per bound; bound B uses sweep_seed(seed, B).
std::vector<ExperimentReport> sweep_B(const FieldPtr& field, std::size_t n, std::size_t m,
                                      const std::vector<std::uint64_t>& bounds, std::uint64_t samples,
                                      std::uint64_t seed, const ExperimentOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "field,n,m,B,N,seed,hits,empirical,predicted,tail_bound,ci_half_width";

void write_sweep_csv(std::ostream& os, const std::vector<ExperimentReport>& reports);

/// hits / total over the whole box, as an unreduced fraction.
struct ExactDensity {
    BigInt hits;
    BigInt total;

    std::string fraction() const { return hits.get_str() + "/" + total.get_str(); }
    double value() const { return mpq_class(hits, total).get_d(); }
};

/// Exhaustive count over all (2B)^{n m k} coordinate assignments.
/// Throws BudgetExceeded above kBruteForceBudget matrices.
ExactDensity brute_force_density(const FieldPtr& field, std::size_t n, std::size_t m, std::uint64_t bound,
                                 unsigned workers = 1);

}  // namespace okdens
