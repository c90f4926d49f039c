#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okdens/bigint.hpp"
#include "okdens/factor_int.hpp"

namespace okdens {

enum class Maximality { Verified, AssumedByUser };

std::string_view to_string(Maximality m) noexcept;

struct FieldOptions {
    /// Accept f even when no small prime certifies irreducibility.
    bool assume_irreducible = false;
    /// Accept Z[theta] even where the Dedekind criterion fails (computes over the order).
    bool allow_nonmaximal = false;
    /// Run the Dedekind criterion at every p with p^2 | disc(f).
    bool verify_maximality = true;
    FactorBudget budget{};
};

/// K = Q[x]/(f) with f monic, squarefree and irreducible; O_K is represented
/// as Z[theta] with the power basis 1, theta, ..., theta^{k-1}. Q itself is f = x.
/// Instances are immutable and only produced by parse_field.
class NumberField {
public:
    /// Coefficients of f, constant term first; size degree()+1, last entry 1.
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& discriminant() const noexcept { return disc_; }
    Maximality maximality() const noexcept { return maximality_; }
    /// Primes p with p^2 | disc(f) at which the Dedekind criterion was evaluated.
    const std::vector<BigInt>& checked_primes() const noexcept { return checked_; }
    /// Subset of checked_primes() where Z[theta] is not p-maximal (only with allow_nonmaximal).
    const std::vector<BigInt>& nonmaximal_primes() const noexcept { return nonmaximal_; }
    /// Prime p with f mod p irreducible, or 0 when irreducibility was assumed.
    std::uint64_t irreducibility_witness() const noexcept { return irreducible_mod_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// True when p^2 does not divide disc or p went through the Dedekind check.
/// Primes in nonmaximal_primes() count as established once the user overrides.
    bool maximality_established_at(const BigInt& p) const;

    /// Human-readable f, e.g. "x^5-13x-7".
    std::string polynomial_string() const;

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.coeffs_ == b.coeffs_; }

private:
    friend NumberField parse_field(std::span<const BigInt>, const FieldOptions&);

    std::vector<BigInt> coeffs_;
    BigInt disc_;
    Maximality maximality_ = Maximality::Verified;
    std::vector<BigInt> checked_;
    std::vector<BigInt> nonmaximal_;
    std::uint64_t irreducible_mod_ = 0;
    std::vector<std::string> warnings_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Validates f and builds the field. Errors: NotMonic, NotSquarefree,
/// HasRationalRoot, IrreducibilityUnverified, NotMaximal.
NumberField parse_field(std::span<const BigInt> coeffs, const FieldOptions& options = {});
NumberField parse_field(const std::vector<long>& coeffs, const FieldOptions& options = {});

/// Parses "c0,c1,...,ck" or a JSON integer array "[c0, ..., ck]".
std::vector<BigInt> parse_coefficient_text(std::string_view text);

/// disc(f) = (-1)^{k(k-1)/2} Res(f, f') for monic f, via Bareiss on the Sylvester matrix.
BigInt discriminant(std::span<const BigInt> monic_coeffs);

/// Resultant via the Sylvester matrix (coefficient lists constant term first).
BigInt resultant(std::span<const BigInt> f, std::span<const BigInt> g);

/// Dedekind criterion: true iff Z[theta] is p-maximal for theta a root of f.
/// Throws NotPrime when p is not prime.
bool dedekind_check(std::span<const BigInt> monic_coeffs, std::uint64_t p);

/// Element of Z[theta] in the power basis (coefficient of theta^i at index i).
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
    static AlgElem zero(int k) { return AlgElem(std::vector<BigInt>(static_cast<std::size_t>(k))); }
    static AlgElem one(int k);
    static AlgElem from_ints(const std::vector<long>& coords);

    int size() const noexcept { return static_cast<int>(coords_.size()); }
    const std::vector<BigInt>& coords() const noexcept { return coords_; }
    std::vector<BigInt>& coords() noexcept { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }
    BigInt& operator[](std::size_t i) { return coords_[i]; }
    bool is_zero() const noexcept;

    friend bool operator==(const AlgElem&, const AlgElem&) = default;

private:
    std::vector<BigInt> coords_;
};

AlgElem operator+(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a);

/// Product reduced modulo f. Throws DegreeMismatch.
AlgElem elem_mul(const NumberField& field, const AlgElem& a, const AlgElem& b);
/// theta * a, a cheap shift-and-reduce.
AlgElem mul_by_theta(const NumberField& field, const AlgElem& a);

/// acc += sign * a * b without temporaries beyond scratch (hot path for minors).
void elem_fma(const NumberField& field, AlgElem& acc, const AlgElem& a, const AlgElem& b, bool negate,
              std::vector<BigInt>& scratch);

/// Matrix of multiplication by a in the power basis (column j = a * theta^j).
std::vector<std::vector<BigInt>> multiplication_matrix(const NumberField& field, const AlgElem& a);

/// N_{K/Q}(a) = det of the multiplication-by-a matrix. Throws DegreeMismatch.
BigInt norm(const NumberField& field, const AlgElem& a);

}  // namespace okdens
