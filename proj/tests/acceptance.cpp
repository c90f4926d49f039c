// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include <boost/math/constants/constants.hpp>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "okdens/linalg.hpp"
#include "okdens/montecarlo.hpp"
#include "okdens/splitting.hpp"
#include "okdens/unimodular.hpp"
#include "okdens/zeta.hpp"

using namespace okdens;

namespace {

constexpr double kTableTolerance = 1e-4;
constexpr std::uint64_t kAnalyticBoundPrime = 1'000'000;
constexpr std::uint64_t kMcBound = 3;
constexpr std::uint64_t kMcSamples = 50'000;
constexpr double kMcTolerance = 0.01;
constexpr std::uint64_t kSweepSamples = 100'000;
constexpr double kSweepGapLimit = 0.01;
constexpr std::size_t kOracleMatricesPerField = 10'000;
constexpr double kSigmaMultiple = 4.0;
constexpr std::size_t kNormPairsPerField = 10'000;
constexpr std::uint64_t kSplitCheckLimit = 10'000;
constexpr std::uint64_t kSeed = 0;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass;
    std::string detail;
};

struct Context {
    std::map<std::string, FieldPtr> fields;
    std::map<std::string, std::unique_ptr<SplitTable>> tables;

    const SplitTable& table(const reference::FieldTable& t)
    {
        auto& slot = tables[t.name];
        if (!slot) slot = std::make_unique<SplitTable>(SplitTable::build(*field(t), kDefaultPrimeBound, workers()));
        return *slot;
    }
    FieldPtr field(const reference::FieldTable& t)
    {
        auto& slot = fields[t.name];
        if (!slot) slot = std::make_shared<const NumberField>(parse_field(t.coeffs));
        return slot;
    }
};

std::string fmt(double v, int digits = 6)
{
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

Outcome predicted_table(Context& ctx)
{
    double worst = 0;
    std::string where;
    for (const auto& t : reference::tables()) {
        const auto& split = ctx.table(t);
        for (const auto& c : t.cells) {
            const double v = predicted_density(split, c.n, c.m).to_double();
            const double gap = std::abs(v - c.predicted);
            std::printf("    %-10s (%d,%d) predicted %.6f reference %.5f gap %.1e\n", t.name.c_str(), c.n, c.m, v,
                        c.predicted, gap);
            if (gap > worst) {
                worst = gap;
                where = t.name + " (" + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
            }
        }
    }
    return {worst <= kTableTolerance, "max gap " + fmt(worst, 3) + " at " + where + ", tolerance 1e-4"};
}

Outcome analytic(Context&)
{
    const auto q = parse_field({0, 1});
    const auto r = predicted_density(q, 1, 2, kAnalyticBoundPrime, workers());
    const double pi = boost::math::constants::pi<double>();
    const double target = 6.0 / (pi * pi);
    const double gap = std::abs(r.to_double() - target);
    return {gap <= r.tail_bound,
            "|" + fmt(r.to_double(), 12) + " - 6/pi^2| = " + fmt(gap, 3) + ", tail bound " + fmt(r.tail_bound, 3)};
}

Outcome monte_carlo_table(Context& ctx)
{
    double worst = 0;
    std::string where;
    for (const auto& t : reference::tables()) {
        ExperimentOptions o;
        o.workers = workers();
        o.split_table = &ctx.table(t);
        for (const auto& c : t.cells) {
            const auto r = run_experiment(ctx.field(t), static_cast<std::size_t>(c.n), static_cast<std::size_t>(c.m),
                                          kMcBound, kMcSamples, kSeed, o);
            const double gap = std::abs(r.empirical - c.observed);
            std::printf("    %-10s (%d,%d) empirical %.5f reference %.5f gap %.4f (%.1fs)\n", t.name.c_str(), c.n,
                        c.m, r.empirical, c.observed, gap, r.wall_time);
            if (gap > worst) {
                worst = gap;
                where = t.name + " (" + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
            }
        }
    }
    return {worst <= kMcTolerance, "max gap " + fmt(worst, 3) + " at " + where + ", tolerance 0.01"};
}

Outcome sweep(Context&)
{
    const auto q = std::make_shared<const NumberField>(parse_field({0, 1}));
    ExperimentOptions o;
    o.workers = workers();
    const auto rs = sweep_B(q, 5, 9, {10, 50, 150, 350}, kSweepSamples, kSeed, o);
    for (const auto& r : rs)
        std::printf("    B=%-4llu empirical %.5f predicted %.5f gap %.5f ci %.5f (%.1fs)\n",
                    static_cast<unsigned long long>(r.bound), r.empirical, r.predicted.to_double(),
                    std::abs(r.empirical - r.predicted.to_double()), r.ci_half_width, r.wall_time);
    const double gap10 = std::abs(rs.front().empirical - rs.front().predicted.to_double());
    const double gap350 = std::abs(rs.back().empirical - rs.back().predicted.to_double());
    const bool ok = gap350 <= kSweepGapLimit && gap350 <= gap10 + 2 * rs.back().ci_half_width;
    return {ok, "gap(350) " + fmt(gap350, 3) + ", gap(10) " + fmt(gap10, 3) + ", ci " +
                    fmt(rs.back().ci_half_width, 3)};
}

Outcome oracle_equivalence(Context& ctx)
{
    std::size_t total = 0, disagree = 0, gcd_mismatch = 0;
    for (const auto& t : reference::tables()) {
        const auto f = ctx.field(t);
        Xoshiro256StarStar rng(splitmix64_mix(0xacce55 ^ t.coeffs.size()));
        UnimodOptions opt;
        opt.want_witness = false;
        std::size_t done = 0, hits = 0;
        for (std::size_t i = 0; done < kOracleMatricesPerField; ++i) {
            const auto& c = t.cells[i % t.cells.size()];
            const auto mat = sample_matrix(f, static_cast<std::size_t>(c.n), static_cast<std::size_t>(c.m),
                                           kMcBound, rng);
            const bool a = is_unimodular(mat, opt).verdict;
            const bool b = is_unimodular_modp(mat, opt).verdict;
            if (a != b) ++disagree;
            if (f->degree() == 1) {
                oracle::Grid g(mat.n);
                for (std::size_t r = 0; r < mat.n; ++r)
                    for (std::size_t col = 0; col < mat.m; ++col) g[r].push_back(mat.at(r, col)[0]);
                if ((oracle::gcd_of_minors(g) == 1) != a) ++gcd_mismatch;
            }
            hits += a;
            ++done;
        }
        std::printf("    %-10s %zu matrices, %zu unimodular\n", t.name.c_str(), done, hits);
        total += done;
    }
    return {disagree == 0 && gcd_mismatch == 0,
            std::to_string(total) + " matrices, " + std::to_string(disagree) + " route disagreements, " +
                std::to_string(gcd_mismatch) + " gcd-oracle mismatches"};
}

Outcome exact_small(Context&)
{
    const auto q = std::make_shared<const NumberField>(parse_field({0, 1}));
    struct Case {
        std::size_t m;
        std::uint64_t B;
        std::string expected;
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : std::vector<Case>{{2, 1, "3/4"}, {2, 2, "12/16"}, {3, 1, "7/8"}}) {
        const auto exact = brute_force_density(q, 1, c.m, c.B, workers());
        const bool enum_ok = exact.fraction() == c.expected && exact.hits == oracle::coprime_tuples(
                                                                                 static_cast<int>(c.m),
                                                                                 static_cast<long>(c.B));
        const double p = exact.value();
        const double got = static_cast<double>(count_unimodular(q, 1, c.m, c.B, kMcSamples, kSeed, workers())) /
                           static_cast<double>(kMcSamples);
        const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(kMcSamples));
        const bool mc_ok = std::abs(got - p) <= kSigmaMultiple * sigma;
        std::printf("    (1,%zu) B=%llu exact %s Monte Carlo %.5f (%.2f sigma)\n", c.m,
                    static_cast<unsigned long long>(c.B), exact.fraction().c_str(), got, std::abs(got - p) / sigma);
        ok = ok && enum_ok && mc_ok;
        detail += (detail.empty() ? "" : ", ") + exact.fraction();
    }
    return {ok, detail + "; Monte Carlo within 4 sigma"};
}

Outcome properties(Context& ctx)
{
    std::mt19937_64 rng(7);
    std::size_t failures = 0;
    std::vector<std::string> notes;
    // norm multiplicativity
    for (const auto& t : reference::tables()) {
        const auto f = ctx.field(t);
        const auto k = static_cast<std::size_t>(f->degree());
        for (std::size_t i = 0; i < kNormPairsPerField; ++i) {
            const auto a = AlgElem::from_ints(oracle::random_ints(rng, k, -50, 50));
            const auto b = AlgElem::from_ints(oracle::random_ints(rng, k, -50, 50));
            if (norm(*f, elem_mul(*f, a, b)) != norm(*f, a) * norm(*f, b)) ++failures;
        }
    }
    notes.push_back("norm multiplicativity");
    // degree sums and factor reconstruction
    const auto primes = primes_up_to(kSplitCheckLimit);
    for (const auto& t : reference::tables()) {
        const auto f = ctx.field(t);
        for (auto p : primes) {
            const auto s = split_prime(*f, p);
            if (s.degree_sum() != f->degree()) ++failures;
            std::vector<PolyFactor> fac;
            for (const auto& x : s.factors) fac.push_back({x.g, x.e});
            std::vector<std::uint64_t> c;
            for (const auto& v : f->coeffs()) c.push_back(mod_u64(v, p));
            if (expand(fac, p) != PolyModP(p, c)) ++failures;
        }
    }
    notes.push_back("degree sums and reconstruction for p <= 10^4");
    // HNF idempotence and span preservation
    for (int i = 0; i < 2'000; ++i) {
        const std::size_t r = 1 + static_cast<std::size_t>(i % 6), c = 1 + static_cast<std::size_t>(i % 4);
        const auto v = oracle::random_ints(rng, r * c, -6, 6);
        const IntMatrix m(r, c, std::vector<BigInt>(v.begin(), v.end()));
        const auto h = hnf(m);
        if (hnf(h) != h) ++failures;
        // span: stacking m onto h changes nothing, and h onto m gives h again
        IntMatrix both(r + h.rows(), c);
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < c; ++y) both(x, y) = m(x, y);
        for (std::size_t x = 0; x < h.rows(); ++x)
            for (std::size_t y = 0; y < c; ++y) both(r + x, y) = h(x, y);
        if (hnf(both) != h) ++failures;
    }
    notes.push_back("HNF idempotence and span");
    // GL invariance of verdicts
    for (const auto& t : reference::tables()) {
        const auto f = ctx.field(t);
        Xoshiro256StarStar x(splitmix64_mix(t.coeffs.size()));
        for (int i = 0; i < 200; ++i) {
            auto mat = sample_matrix(f, 2, 4, kMcBound, x);
            const auto before = is_unimodular(mat).index;
            const auto lam = AlgElem::from_ints(oracle::random_ints(rng, static_cast<std::size_t>(f->degree()), -3, 3));
            for (std::size_t j = 0; j < 4; ++j) mat.at(0, j) = mat.at(0, j) + elem_mul(*f, lam, mat.at(1, j));
            for (std::size_t r = 0; r < 2; ++r) {
                std::swap(mat.at(r, 0), mat.at(r, 3));
                mat.at(r, 1) = mat.at(r, 1) - mat.at(r, 2);
            }
            if (is_unimodular(mat).index != before) ++failures;
        }
    }
    notes.push_back("GL invariance");
    // batch determinism
    const auto q5 = ctx.field(reference::tables()[3]);
    const auto c1 = count_unimodular(q5, 2, 3, kMcBound, 5'000, 99, 1);
    if (count_unimodular(q5, 2, 3, kMcBound, 5'000, 99, 2) != c1) ++failures;
    if (count_unimodular(q5, 2, 3, kMcBound, 5'000, 99, 8) != c1) ++failures;
    notes.push_back("1/2/8-worker determinism");
    std::string detail;
    for (const auto& n : notes) detail += (detail.empty() ? "" : ", ") + n;
    return {failures == 0, std::to_string(failures) + " failures over " + detail};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> criteria{
        {"predicted-density table (40 cells, P=10^6)", predicted_table},
        {"analytic cross-check with 6/pi^2", analytic},
        {"Monte-Carlo table (40 cells, B=3, N=50000)", monte_carlo_table},
        {"bound sweep over Z, n=5, m=9", sweep},
        {"HNF and mod-p routes agree", oracle_equivalence},
        {"exact small-case densities", exact_small},
        {"property suites", properties},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
    Context ctx;
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = criteria[i].second(ctx);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
