#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "okdens/factor_int.hpp"
#include "okdens/field.hpp"
#include "okdens/poly_mod_p.hpp"

namespace okdens {

/// n x m matrix over O_K, entries row-major.
struct MatrixOK {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<AlgElem> entries;

    const AlgElem& at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
    AlgElem& at(std::size_t i, std::size_t j) { return entries[i * m + j]; }

    /// Builds from nested integer lists: rows -> entries -> k coordinates.
    static MatrixOK from_ints(FieldPtr field, const std::vector<std::vector<std::vector<long>>>& rows);

    /// Throws BadShape / DegreeMismatch when the entries do not fit the declared shape.
    void validate() const;
};

/// [O_K : I] for the minor ideal I; infinite when every minor vanishes.
struct LatticeIndex {
    bool infinite = false;
    BigInt value = 0;

    static LatticeIndex finite(BigInt v) { return {false, std::move(v)}; }
    static LatticeIndex unbounded() { return {true, 0}; }
    bool is_one() const { return !infinite && value == 1; }
    std::string to_string() const { return infinite ? "infinite" : value.get_str(); }
    friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

enum class UnimodMethod { MinorIdealHNF, ModPRank };
std::string_view to_string(UnimodMethod m) noexcept;

/// A prime ideal (p, g(theta)) modulo which the matrix loses rank.
struct RankWitness {
    std::uint64_t p = 0;
    PolyModP g{2};
};

struct UnimodReport {
    bool verdict = false;
    std::optional<LatticeIndex> index;
    std::optional<RankWitness> witness;
    UnimodMethod method = UnimodMethod::MinorIdealHNF;
    std::vector<std::string> warnings;
};

struct UnimodOptions {
    /// Locate a rank-dropping prime ideal for non-unimodular verdicts.
    bool want_witness = true;
    /// For the mod-p method: also compute the lattice index by the HNF route.
    bool include_index = false;
    FactorBudget budget{};
};

/// All n x n minors, column subsets in lexicographic order, computed by
/// Laplace expansion along the last row with shared sub-minors. Requires m <= 20.
std::vector<AlgElem> minors(const MatrixOK& mat);

/// Minor-ideal test: the Z-span of {minor * theta^i} is the ideal I; its HNF
/// determinant is [O_K : I], and M is unimodular iff that index is 1.
UnimodReport is_unimodular(const MatrixOK& mat, const UnimodOptions& options = {});

/// Independent check: every prime ideal containing all minors lies above a
/// prime dividing g = gcd |N(minor)|, so testing rank modulo each prime ideal
/// above each prime factor of g decides unimodularity.
UnimodReport is_unimodular_modp(const MatrixOK& mat, const UnimodOptions& options = {});

/// First prime ideal above a prime factor of `modulus` at which rank(M mod p) < n.
std::optional<RankWitness> find_rank_drop(const MatrixOK& mat, const BigInt& modulus, const FactorBudget& budget);

}  // namespace okdens
