#include "okdens/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "okdens/error.hpp"
#include "okdens/linalg.hpp"
#include "okdens/modular.hpp"
#include "okdens/poly_mod_p.hpp"

namespace okdens {

std::string_view to_string(Maximality m) noexcept
{
    return m == Maximality::Verified ? "Verified" : "AssumedByUser";
}

namespace {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZPoly lift(const PolyModP& g)
{
    ZPoly r;
    r.reserve(g.coeffs().size());
    for (auto c : g.coeffs()) r.push_back(big_from_u64(c));
    return r;
}

PolyModP reduce(std::span<const BigInt> f, std::uint64_t p)
{
    std::vector<std::uint64_t> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = mod_u64(f[i], p);
    return PolyModP(p, std::move(c));
}

BigInt evaluate(std::span<const BigInt> f, const BigInt& x)
{
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void require_size(const NumberField& field, const AlgElem& a)
{
    if (a.size() != field.degree())
        throw Error(ErrorCode::DegreeMismatch, "element has " + std::to_string(a.size()) +
                                                   " coordinates, field degree is " + std::to_string(field.degree()));
}

// Integer roots of a monic f must divide f(0).
std::optional<BigInt> find_rational_root(std::span<const BigInt> f, const FactorBudget& budget)
{
    if (f[0] == 0) return BigInt(0);
    std::vector<PrimePower> pf;
    try {
        pf = factor_integer(f[0], budget);
    } catch (const Error&) {
        return std::nullopt;
    }
    std::vector<BigInt> divisors{1};
    for (const auto& [p, e] : pf) {
        const std::size_t count = divisors.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pk);
        }
    }
    for (const auto& d : divisors) {
        if (evaluate(f, d) == 0) return d;
        if (evaluate(f, BigInt(-d)) == 0) return BigInt(-d);
    }
    return std::nullopt;
}

}  // namespace

BigInt resultant(std::span<const BigInt> f_in, std::span<const BigInt> g_in)
{
    ZPoly f(f_in.begin(), f_in.end()), g(g_in.begin(), g_in.end());
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    const std::size_t a = f.size() - 1, b = g.size() - 1;
    const std::size_t n = a + b;
    if (n == 0) return 1;
    IntMatrix syl(n, n);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j <= a; ++j) syl(i, i + j) = f[a - j];
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j <= b; ++j) syl(b + i, i + j) = g[b - j];
    return bareiss_det(syl);
}

BigInt discriminant(std::span<const BigInt> f)
{
    const std::size_t k = f.size() - 1;
    ZPoly df(k);
    for (std::size_t i = 1; i <= k; ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);
    BigInt res = resultant(f, df);
    return (k * (k - 1) / 2) % 2 ? BigInt(-res) : res;
}

bool dedekind_check(std::span<const BigInt> f, std::uint64_t p)
{
    if (!modular::is_prime(p) || p >= (std::uint64_t{1} << 63))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^63");
    const PolyModP fbar = reduce(f, p);
    const auto factors = factor_mod_p(fbar);
    PolyModP gbar = PolyModP::constant(p, 1), hbar = PolyModP::constant(p, 1);
    ZPoly gstar{1}, hstar{1};
    for (const auto& [g, e] : factors) {
        gbar = gbar * g;
        gstar = zmul(gstar, lift(g));
        for (int i = 1; i < e; ++i) {
            hbar = hbar * g;
            hstar = zmul(hstar, lift(g));
        }
    }
    ZPoly diff = zmul(gstar, hstar);
    diff.resize(std::max(diff.size(), f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] -= f[i];
    for (auto& c : diff) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
    const PolyModP Fbar = reduce(diff, p);
    return gcd(gcd(Fbar, gbar), hbar).is_one();
}

bool NumberField::maximality_established_at(const BigInt& p) const
{
    if (mpz_divisible_p(disc_.get_mpz_t(), BigInt(p * p).get_mpz_t()) == 0) return true;
    return std::find(checked_.begin(), checked_.end(), p) != checked_.end();
}

std::string NumberField::polynomial_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return os.str();
}

NumberField parse_field(std::span<const BigInt> coeffs, const FieldOptions& options)
{
    if (coeffs.size() < 2) throw Error(ErrorCode::InvalidInput, "need at least two coefficients (degree >= 1)");
    if (coeffs.back() != 1) throw Error(ErrorCode::NotMonic, "leading coefficient must be 1");
    NumberField field;
    field.coeffs_.assign(coeffs.begin(), coeffs.end());
    const int k = field.degree();
    field.disc_ = discriminant(coeffs);
    if (field.disc_ == 0) throw Error(ErrorCode::NotSquarefree, "f has a repeated factor (discriminant 0)");

    if (k >= 2) {
        if (auto root = find_rational_root(coeffs, options.budget))
            throw Error(ErrorCode::HasRationalRoot, "f has the rational root " + root->get_str());
    }

    int tried = 0;
    for (std::uint64_t p : primes_up_to(20'000)) {
        if (tried == 100) break;
        if (mpz_divisible_ui_p(field.disc_.get_mpz_t(), p)) continue;
        ++tried;
        if (is_irreducible(reduce(coeffs, p))) {
            field.irreducible_mod_ = p;
            break;
        }
    }
    if (field.irreducible_mod_ == 0) {
        if (!options.assume_irreducible)
            throw Error(ErrorCode::IrreducibilityUnverified,
                        "f mod p is reducible for the first 100 primes not dividing disc(f); "
                        "pass assume-irreducible to accept it");
        field.warnings_.push_back("irreducibility of f assumed by user, not verified");
    }

    if (!options.verify_maximality) {
        field.maximality_ = Maximality::AssumedByUser;
        field.warnings_.push_back("maximality of Z[theta] not verified (user opted out)");
        return field;
    }
    std::vector<PrimePower> disc_factors;
    try {
        disc_factors = factor_integer(field.disc_, options.budget);
    } catch (const Error& e) {
        if (!options.allow_nonmaximal) throw;
        field.maximality_ = Maximality::AssumedByUser;
        field.warnings_.push_back(std::string("maximality not verified: ") + e.what());
        return field;
    }
    for (const auto& [p, e] : disc_factors) {
        if (e < 2) continue;
        if (!fits_u64(p) || to_u64(p) >= (std::uint64_t{1} << 63)) {
            if (!options.allow_nonmaximal)
                throw Error(ErrorCode::NotMaximal, "cannot run the Dedekind criterion at the large prime " + p.get_str());
            field.maximality_ = Maximality::AssumedByUser;
            field.warnings_.push_back("maximality at p=" + p.get_str() + " not verified");
            continue;
        }
        field.checked_.push_back(p);
        if (!dedekind_check(coeffs, to_u64(p))) {
            if (!options.allow_nonmaximal)
                throw Error(ErrorCode::NotMaximal, "Z[theta] is not maximal at p=" + p.get_str());
            field.nonmaximal_.push_back(p);
            field.maximality_ = Maximality::AssumedByUser;
            field.warnings_.push_back("WARNING: Z[theta] is not maximal at p=" + p.get_str() +
                                      "; results are computed over the order Z[theta], not O_K");
        }
    }
    return field;
}

NumberField parse_field(const std::vector<long>& coeffs, const FieldOptions& options)
{
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return parse_field(c, options);
}

std::vector<BigInt> parse_coefficient_text(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorCode::InvalidInput, "unterminated coefficient array");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<BigInt> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(start, end - start);
        BigInt v;
        if (tok.empty() || v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
            throw Error(ErrorCode::InvalidInput, "bad coefficient '" + tok + "' in field spec");
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

AlgElem AlgElem::one(int k)
{
    AlgElem e = zero(k);
    if (k > 0) e.coords_[0] = 1;
    return e;
}

AlgElem AlgElem::from_ints(const std::vector<long>& coords)
{
    return AlgElem(std::vector<BigInt>(coords.begin(), coords.end()));
}

bool AlgElem::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

AlgElem operator+(const AlgElem& a, const AlgElem& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DegreeMismatch, "adding elements of different lengths");
    AlgElem r = a;
    for (int i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

AlgElem operator-(const AlgElem& a, const AlgElem& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DegreeMismatch, "subtracting elements of different lengths");
    AlgElem r = a;
    for (int i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

AlgElem operator-(const AlgElem& a)
{
    AlgElem r = a;
    for (auto& c : r.coords()) c = -c;
    return r;
}

void elem_fma(const NumberField& field, AlgElem& acc, const AlgElem& a, const AlgElem& b, bool negate,
              std::vector<BigInt>& prod)
{
    require_size(field, a);
    require_size(field, b);
    require_size(field, acc);
    const std::size_t k = static_cast<std::size_t>(field.degree());
    const auto& f = field.coeffs();
    prod.resize(2 * k - 1);
    for (auto& c : prod) c = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    // theta^k = -(f_0 + f_1 theta + ... + f_{k-1} theta^{k-1})
    for (std::size_t d = 2 * k - 2; d >= k; --d) {
        if (prod[d] != 0) {
            for (std::size_t j = 0; j < k; ++j)
                if (f[j] != 0) mpz_submul(prod[d - k + j].get_mpz_t(), prod[d].get_mpz_t(), f[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (negate) acc[i] -= prod[i];
        else acc[i] += prod[i];
    }
}

AlgElem elem_mul(const NumberField& field, const AlgElem& a, const AlgElem& b)
{
    AlgElem acc = AlgElem::zero(field.degree());
    std::vector<BigInt> scratch;
    elem_fma(field, acc, a, b, false, scratch);
    return acc;
}

AlgElem mul_by_theta(const NumberField& field, const AlgElem& a)
{
    require_size(field, a);
    const std::size_t k = static_cast<std::size_t>(field.degree());
    const auto& f = field.coeffs();
    AlgElem r = AlgElem::zero(field.degree());
    const BigInt& top = a[k - 1];
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) r[i] = a[i - 1];
        if (top != 0) r[i] -= top * f[i];
    }
    return r;
}

std::vector<std::vector<BigInt>> multiplication_matrix(const NumberField& field, const AlgElem& a)
{
    require_size(field, a);
    const std::size_t k = static_cast<std::size_t>(field.degree());
    std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
    AlgElem col = a;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[i][j] = col[i];
        if (j + 1 < k) col = mul_by_theta(field, col);
    }
    return m;
}

BigInt norm(const NumberField& field, const AlgElem& a)
{
    const auto m = multiplication_matrix(field, a);
    const std::size_t k = m.size();
    IntMatrix mat(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) mat(i, j) = m[i][j];
    return bareiss_det(mat);
}

}  // namespace okdens
