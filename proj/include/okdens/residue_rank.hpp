#pragma once

#include <cstddef>
#include <span>

#include "okdens/field.hpp"
#include "okdens/poly_mod_p.hpp"
#include "okdens/splitting.hpp"

namespace okdens {

/// F_p[x]/(g) for g monic irreducible; elements are reduced PolyModP values.
class ResidueField {
public:
    explicit ResidueField(PolyModP modulus);

    const PolyModP& modulus() const noexcept { return g_; }
    std::uint64_t characteristic() const noexcept { return g_.modulus(); }
    int degree() const noexcept { return g_.degree(); }

    PolyModP add(const PolyModP& a, const PolyModP& b) const { return a + b; }
    PolyModP sub(const PolyModP& a, const PolyModP& b) const { return a - b; }
    PolyModP mul(const PolyModP& a, const PolyModP& b) const { return mulmod(a, b, g_); }
    PolyModP inv(const PolyModP& a) const { return invmod(a, g_); }

private:
    PolyModP g_;
};

/// Rank of an already-reduced rows x cols matrix over a residue field (Gaussian elimination).
std::size_t rank_over(const ResidueField& field, std::vector<PolyModP> entries, std::size_t rows, std::size_t cols);

/// Rank of M mod p_i where p_i = (p, g_i(theta)) is the i-th ideal of the split.
/// `entries` is row-major with rows * cols elements. Throws IndexOutOfRange.
std::size_t rank_over_residue_field(const PrimeSplit& split, std::size_t i, std::span<const AlgElem> entries,
                                    std::size_t rows, std::size_t cols);

}  // namespace okdens
