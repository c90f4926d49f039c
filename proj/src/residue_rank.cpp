#include "okdens/residue_rank.hpp"

#include <utility>

#include "okdens/error.hpp"

namespace okdens {

ResidueField::ResidueField(PolyModP modulus) : g_(std::move(modulus))
{
    if (g_.degree() < 1 || !g_.is_monic())
        throw Error(ErrorCode::InvalidInput, "residue field modulus must be monic of positive degree");
}

std::size_t rank_over(const ResidueField& field, std::vector<PolyModP> a, std::size_t rows, std::size_t cols)
{
    if (a.size() != rows * cols) throw Error(ErrorCode::BadShape, "entry count does not match dimensions");
    auto at = [&](std::size_t i, std::size_t j) -> PolyModP& { return a[i * cols + j]; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        const PolyModP inv = field.inv(at(rank, c));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, c).is_zero()) continue;
            const PolyModP factor = field.mul(at(i, c), inv);
            for (std::size_t j = c; j < cols; ++j) at(i, j) = field.sub(at(i, j), field.mul(factor, at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_over_residue_field(const PrimeSplit& split, std::size_t i, std::span<const AlgElem> entries,
                                    std::size_t rows, std::size_t cols)
{
    if (i >= split.factors.size())
        throw Error(ErrorCode::IndexOutOfRange, "prime ideal index " + std::to_string(i) + " out of range");
    if (entries.size() != rows * cols) throw Error(ErrorCode::BadShape, "entry count does not match dimensions");
    ResidueField field(split.factors[i].g);
    std::vector<PolyModP> reduced;
    reduced.reserve(entries.size());
    for (const auto& e : entries) reduced.push_back(reduce_elem(split, i, e));
    return rank_over(field, std::move(reduced), rows, cols);
}

}  // namespace okdens
