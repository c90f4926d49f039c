#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace okdens {

/// Polynomial over F_p, constant term first, canonical (no trailing zeros).
/// The zero polynomial has an empty coefficient list and degree -1.
class PolyModP {
public:
    using u64 = std::uint64_t;

    explicit PolyModP(u64 p) : p_(p) {}
    /// Coefficients are reduced mod p and trimmed.
    PolyModP(u64 p, std::vector<u64> coeffs);

    static PolyModP from_signed(u64 p, const std::vector<std::int64_t>& coeffs);
    static PolyModP constant(u64 p, u64 c);
    static PolyModP x(u64 p);
    static PolyModP monomial(u64 p, u64 c, int degree);

    u64 modulus() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    u64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    u64 operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    u64 evaluate(u64 x) const;
    PolyModP monic() const;
    PolyModP derivative() const;

    friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator-(const PolyModP& a);
    friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
    PolyModP scaled(u64 c) const;

    friend bool operator==(const PolyModP& a, const PolyModP& b) = default;

    /// Order by (degree, coefficients lexicographically from the constant term).
    friend bool operator<(const PolyModP& a, const PolyModP& b);

private:
    void trim();

    u64 p_;
    std::vector<u64> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP operator/(const PolyModP& a, const PolyModP& b);

/// Monic gcd (zero if both inputs are zero).
PolyModP gcd(const PolyModP& a, const PolyModP& b);

/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
    PolyModP g, s, t;
};
ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b);

PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& modulus);
PolyModP powmod(const PolyModP& base, std::uint64_t exp, const PolyModP& modulus);
/// Inverse of a modulo an irreducible (or coprime) modulus; a must be invertible.
PolyModP invmod(const PolyModP& a, const PolyModP& modulus);

struct PolyFactor {
    PolyModP factor;
    int multiplicity;
    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Squarefree decomposition of a monic f: pairwise coprime squarefree parts with multiplicities.
std::vector<PolyFactor> squarefree_decomposition(const PolyModP& f);

/// Complete factorization of a monic nonzero f into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). Deterministic: the
/// equal-degree splitter's randomness is seeded from (p, coefficients).
std::vector<PolyFactor> factor_mod_p(const PolyModP& f);

/// Rabin-style irreducibility test: x^{p^d} = x mod g and gcd(x^{p^j} - x, g) = 1 for 1 <= j < d.
bool is_irreducible(const PolyModP& g);

/// Product of factor^multiplicity.
PolyModP expand(const std::vector<PolyFactor>& factors, std::uint64_t p);

}  // namespace okdens
