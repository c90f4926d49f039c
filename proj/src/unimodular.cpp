#include "okdens/unimodular.hpp"

#include <numeric>

#include "okdens/error.hpp"
#include "okdens/linalg.hpp"
#include "okdens/residue_rank.hpp"
#include "okdens/splitting.hpp"

namespace okdens {

std::string_view to_string(UnimodMethod m) noexcept
{
    return m == UnimodMethod::MinorIdealHNF ? "MinorIdealHNF" : "ModPRank";
}

MatrixOK MatrixOK::from_ints(FieldPtr field, const std::vector<std::vector<std::vector<long>>>& rows)
{
    MatrixOK mat;
    mat.field = std::move(field);
    mat.n = rows.size();
    mat.m = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != mat.m) throw Error(ErrorCode::BadShape, "ragged matrix rows");
        for (const auto& e : row) mat.entries.push_back(AlgElem::from_ints(e));
    }
    mat.validate();
    return mat;
}

void MatrixOK::validate() const
{
    if (!field) throw Error(ErrorCode::InvalidInput, "matrix has no field");
    if (entries.size() != n * m) throw Error(ErrorCode::BadShape, "entry count does not match n*m");
    for (const auto& e : entries)
        if (e.size() != field->degree())
            throw Error(ErrorCode::DegreeMismatch, "matrix entry has " + std::to_string(e.size()) +
                                                       " coordinates, field degree is " +
                                                       std::to_string(field->degree()));
}

namespace {

void require_shape(const MatrixOK& mat)
{
    mat.validate();
    if (mat.n == 0 || mat.n > mat.m)
        throw Error(ErrorCode::BadShape, "need 1 <= n <= m, got n=" + std::to_string(mat.n) +
                                             ", m=" + std::to_string(mat.m));
    if (mat.m > 20) throw Error(ErrorCode::BadShape, "at most 20 columns supported");
}

// Column subsets of size r of {0..m-1} as bitmasks, lexicographic in the sorted index tuple.
std::vector<std::uint32_t> subsets(std::size_t m, std::size_t r)
{
    std::vector<std::uint32_t> out;
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::uint32_t mask = 0;
        for (auto i : idx) mask |= std::uint32_t{1} << i;
        out.push_back(mask);
        std::size_t pos = r;
        while (pos > 0 && idx[pos - 1] == m - r + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<AlgElem> minors(const MatrixOK& mat)
{
    require_shape(mat);
    const NumberField& field = *mat.field;
    const int k = field.degree();
    const std::size_t n = mat.n, m = mat.m;

    // level r holds det(rows 0..r-1, columns in mask) for every mask of size r
    std::vector<std::vector<std::uint32_t>> level_masks(n + 1);
    std::vector<int> position(std::size_t{1} << m, -1);
    std::vector<AlgElem> prev, cur;
    std::vector<BigInt> scratch;

    level_masks[1] = subsets(m, 1);
    prev.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        position[std::size_t{1} << j] = static_cast<int>(j);
        prev.push_back(mat.at(0, j));
    }
    for (std::size_t r = 2; r <= n; ++r) {
        level_masks[r] = subsets(m, r);
        cur.assign(level_masks[r].size(), AlgElem::zero(k));
        for (std::size_t s = 0; s < level_masks[r].size(); ++s) {
            const std::uint32_t mask = level_masks[r][s];
            std::size_t t = 0;
            for (std::size_t col = 0; col < m; ++col) {
                if (!(mask & (std::uint32_t{1} << col))) continue;
                const AlgElem& entry = mat.at(r - 1, col);
                const AlgElem& sub = prev[static_cast<std::size_t>(position[mask & ~(std::uint32_t{1} << col)])];
                const bool negate = ((r - 1) + t) % 2 == 1;
                if (!entry.is_zero() && !sub.is_zero()) elem_fma(field, cur[s], entry, sub, negate, scratch);
                ++t;
            }
        }
        for (std::size_t s = 0; s < level_masks[r].size(); ++s) position[level_masks[r][s]] = static_cast<int>(s);
        prev.swap(cur);
    }
    return prev;
}

std::optional<RankWitness> find_rank_drop(const MatrixOK& mat, const BigInt& modulus, const FactorBudget& budget)
{
    for (const auto& [p, e] : factor_integer(modulus, budget)) {
        if (!fits_u64(p) || to_u64(p) >= (std::uint64_t{1} << 63))
            throw Error(ErrorCode::FactorizationTooHard, "prime factor " + p.get_str() + " exceeds 63 bits");
        const PrimeSplit split = split_prime(*mat.field, to_u64(p));
        for (std::size_t i = 0; i < split.factors.size(); ++i) {
            if (rank_over_residue_field(split, i, mat.entries, mat.n, mat.m) < mat.n)
                return RankWitness{split.p, split.factors[i].g};
        }
    }
    return std::nullopt;
}

UnimodReport is_unimodular(const MatrixOK& mat, const UnimodOptions& options)
{
    const auto all_minors = minors(mat);
    const NumberField& field = *mat.field;
    const std::size_t k = static_cast<std::size_t>(field.degree());

    HnfBuilder lattice(k);
    for (const auto& a : all_minors) {
        if (a.is_zero()) continue;
        AlgElem power = a;
        for (std::size_t i = 0; i < k && !lattice.is_whole_lattice(); ++i) {
            lattice.insert(power.coords());
            if (i + 1 < k) power = mul_by_theta(field, power);
        }
        if (lattice.is_whole_lattice()) break;
    }

    UnimodReport report;
    report.method = UnimodMethod::MinorIdealHNF;
    report.warnings = field.warnings();
    const auto idx = lattice.index();
    report.index = idx ? LatticeIndex::finite(*idx) : LatticeIndex::unbounded();
    report.verdict = report.index->is_one();
    if (!report.verdict && !report.index->infinite && options.want_witness) {
        report.witness = find_rank_drop(mat, report.index->value, options.budget);
        if (!report.witness)
            report.warnings.push_back("no rank-dropping prime ideal found above the index; Z[theta] may not be maximal");
    }
    return report;
}

UnimodReport is_unimodular_modp(const MatrixOK& mat, const UnimodOptions& options)
{
    const auto all_minors = minors(mat);
    const NumberField& field = *mat.field;

    UnimodReport report;
    report.method = UnimodMethod::ModPRank;
    report.warnings = field.warnings();

    BigInt g = 0;
    for (const auto& a : all_minors) {
        if (a.is_zero()) continue;
        BigInt nrm = norm(field, a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nrm.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0) {
        report.verdict = false;
        report.index = LatticeIndex::unbounded();
        return report;
    }
    if (g != 1) report.witness = find_rank_drop(mat, g, options.budget);
    report.verdict = !report.witness.has_value();
    if (options.include_index) {
        UnimodOptions hnf_only = options;
        hnf_only.want_witness = false;
        report.index = is_unimodular(mat, hnf_only).index;
    }
    return report;
}

}  // namespace okdens
