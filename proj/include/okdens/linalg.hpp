#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "okdens/bigint.hpp"

namespace okdens {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data);
    /// Convenience for literals in tests and examples.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<BigInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const std::vector<BigInt>& data() const noexcept { return data_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Throws NotSquare.
BigInt bareiss_det(const IntMatrix& m);

/// Row-style Hermite normal form built one generator at a time.
///
/// Convention: rows are sorted by pivot column (left to right), each pivot is
/// positive, every entry above a pivot lies in [0, pivot), and entries left of
/// a row's pivot are zero. Zero rows never appear. Two generator rows are merged
/// with an extended-gcd (Blankinship) transform of determinant 1, so the row
/// span is preserved exactly. Once the lattice has full rank with index D,
/// incoming generators are reduced modulo D (D * Z^cols lies in the lattice),
/// which bounds entry growth.
class HnfBuilder {
public:
    explicit HnfBuilder(std::size_t cols);

    void insert(std::span<const BigInt> generator);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rank_; }
    bool full_rank() const noexcept { return rank_ == cols_; }
    /// True once the span is all of Z^cols.
    bool is_whole_lattice() const noexcept { return full_rank() && det_ == 1; }
    /// Index [Z^cols : span] when full rank.
    std::optional<BigInt> index() const;

    /// Canonical form (rank x cols).
    IntMatrix result() const;

private:
    void reduce_above(std::size_t pivot_col);
    void refresh_det();

    std::size_t cols_;
    std::size_t rank_ = 0;
    std::vector<std::optional<std::vector<BigInt>>> basis_;  // indexed by pivot column
    BigInt det_ = 0;
};

/// Hermite normal form of the row span of m (zero matrix gives an empty result).
IntMatrix hnf(const IntMatrix& m);

}  // namespace okdens
