#include "okdens/linalg.hpp"

#include <utility>

#include "okdens/error.hpp"

namespace okdens {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::BadShape, "entry count does not match dimensions");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::BadShape, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

BigInt bareiss_det(const IntMatrix& input)
{
    if (input.rows() != input.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    BigInt prev = 1;
    int sign = 1;
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    BigInt det = a(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

HnfBuilder::HnfBuilder(std::size_t cols) : cols_(cols), basis_(cols) {}

void HnfBuilder::insert(std::span<const BigInt> generator)
{
    if (generator.size() != cols_) throw Error(ErrorCode::BadShape, "generator length differs from lattice dimension");
    std::vector<BigInt> v(generator.begin(), generator.end());
    if (full_rank() && det_ != 1) {
        for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), det_.get_mpz_t());
    } else if (is_whole_lattice()) {
        return;
    }
    BigInt g, s, t, q, tmp;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        auto& slot = basis_[c];
        if (!slot) {
            if (v[c] < 0)
                for (auto& x : v) x = -x;
            slot = std::move(v);
            ++rank_;
            reduce_above(c);
            refresh_det();
            return;
        }
        auto& b = *slot;
        if (mpz_divisible_p(v[c].get_mpz_t(), b[c].get_mpz_t())) {
            mpz_divexact(q.get_mpz_t(), v[c].get_mpz_t(), b[c].get_mpz_t());
            for (std::size_t j = c; j < cols_; ++j) v[j] -= q * b[j];
            continue;
        }
        // [b; v] <- [[s, t], [-v_c/g, b_c/g]] [b; v], a determinant-one transform
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
        BigInt vc_g = v[c] / g;
        BigInt bc_g = b[c] / g;
        for (std::size_t j = c; j < cols_; ++j) {
            tmp = s * b[j] + t * v[j];
            v[j] = bc_g * v[j] - vc_g * b[j];
            b[j] = std::move(tmp);
        }
        reduce_above(c);
        refresh_det();
    }
}

void HnfBuilder::reduce_above(std::size_t pivot_col)
{
    // reduce the new/changed pivot row against later pivots, then rows above against it
    auto& row = *basis_[pivot_col];
    BigInt q;
    for (std::size_t c = pivot_col + 1; c < cols_; ++c) {
        if (!basis_[c]) continue;
        const auto& piv = *basis_[c];
        mpz_fdiv_q(q.get_mpz_t(), row[c].get_mpz_t(), piv[c].get_mpz_t());
        if (q != 0)
            for (std::size_t j = c; j < cols_; ++j) row[j] -= q * piv[j];
    }
    for (std::size_t r = 0; r < pivot_col; ++r) {
        if (!basis_[r]) continue;
        auto& above = *basis_[r];
        for (std::size_t c = pivot_col; c < cols_; ++c) {
            if (!basis_[c]) continue;
            const auto& piv = *basis_[c];
            mpz_fdiv_q(q.get_mpz_t(), above[c].get_mpz_t(), piv[c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = c; j < cols_; ++j) above[j] -= q * piv[j];
        }
    }
}

void HnfBuilder::refresh_det()
{
    if (!full_rank()) return;
    det_ = 1;
    for (std::size_t c = 0; c < cols_; ++c) det_ *= (*basis_[c])[c];
}

std::optional<BigInt> HnfBuilder::index() const
{
    if (!full_rank()) return std::nullopt;
    return det_;
}

IntMatrix HnfBuilder::result() const
{
    IntMatrix out(rank_, cols_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!basis_[c]) continue;
        for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*basis_[c])[j];
        ++r;
    }
    return out;
}

IntMatrix hnf(const IntMatrix& m)
{
    HnfBuilder builder(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) builder.insert(m.row(i));
    return builder.result();
}

}  // namespace okdens
