#include "okdens/poly_mod_p.hpp"

#include <algorithm>
#include <map>

#include "okdens/error.hpp"
#include "okdens/modular.hpp"
#include "okdens/rng.hpp"

namespace okdens {

namespace md = modular;
using u64 = std::uint64_t;

PolyModP::PolyModP(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& c : c_) c %= p_;
    trim();
}

PolyModP PolyModP::from_signed(u64 p, const std::vector<std::int64_t>& coeffs)
{
    std::vector<u64> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t r = coeffs[i] % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        c[i] = static_cast<u64>(r);
    }
    return PolyModP(p, std::move(c));
}

PolyModP PolyModP::constant(u64 p, u64 c) { return PolyModP(p, {c}); }

PolyModP PolyModP::x(u64 p) { return PolyModP(p, {0, 1}); }

PolyModP PolyModP::monomial(u64 p, u64 c, int degree)
{
    std::vector<u64> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return PolyModP(p, std::move(v));
}

void PolyModP::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 PolyModP::evaluate(u64 x) const
{
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = md::add(md::mul(acc, x, p_), *it, p_);
    return acc;
}

PolyModP PolyModP::monic() const
{
    if (is_zero() || is_monic()) return *this;
    return scaled(md::inv(leading(), p_));
}

PolyModP PolyModP::derivative() const
{
    if (c_.size() <= 1) return PolyModP(p_);
    std::vector<u64> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = md::mul(c_[i], i % p_, p_);
    return PolyModP(p_, std::move(d));
}

PolyModP PolyModP::scaled(u64 c) const
{
    PolyModP r(p_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = md::mul(c_[i], c, p_);
    r.trim();
    return r;
}

PolyModP operator+(const PolyModP& a, const PolyModP& b)
{
    const u64 p = a.p_;
    PolyModP r(p);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = md::add(a[i], b[i], p);
    r.trim();
    return r;
}

PolyModP operator-(const PolyModP& a, const PolyModP& b)
{
    const u64 p = a.p_;
    PolyModP r(p);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = md::sub(a[i], b[i], p);
    r.trim();
    return r;
}

PolyModP operator-(const PolyModP& a)
{
    PolyModP r(a.p_);
    r.c_.resize(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = md::neg(a.c_[i], a.p_);
    return r;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b)
{
    const u64 p = a.p_;
    PolyModP r(p);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = md::add(r.c_[i + j], md::mul(a.c_[i], b.c_[j], p), p);
    }
    r.trim();
    return r;
}

bool operator<(const PolyModP& a, const PolyModP& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b)
{
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    const u64 p = a.modulus();
    if (a.degree() < b.degree()) return {PolyModP(p), a};
    std::vector<u64> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const u64 lead_inv = md::inv(b.leading(), p);
    std::vector<u64> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        u64 c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        c = md::mul(c, lead_inv, p);
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = md::sub(slot, md::mul(c, bc[static_cast<std::size_t>(j)], p), p);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {PolyModP(p, std::move(quot)), PolyModP(p, std::move(rem))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }
PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).first; }

PolyModP gcd(const PolyModP& a, const PolyModP& b)
{
    PolyModP x = a, y = b;
    while (!y.is_zero()) {
        PolyModP r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const PolyModP& a, const PolyModP& b)
{
    const u64 p = a.modulus();
    PolyModP r0 = a, r1 = b;
    PolyModP s0 = PolyModP::constant(p, 1), s1(p);
    PolyModP t0(p), t1 = PolyModP::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyModP s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        PolyModP t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const u64 li = md::inv(r0.leading(), p);
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& modulus)
{
    return (a * b) % modulus;
}

PolyModP powmod(const PolyModP& base, u64 exp, const PolyModP& modulus)
{
    const u64 p = modulus.modulus();
    PolyModP result = PolyModP::constant(p, 1) % modulus;
    PolyModP b = base % modulus;
    while (exp) {
        if (exp & 1) result = mulmod(result, b, modulus);
        exp >>= 1;
        if (exp) b = mulmod(b, b, modulus);
    }
    return result;
}

PolyModP invmod(const PolyModP& a, const PolyModP& modulus)
{
    ExtGcd e = ext_gcd(a % modulus, modulus);
    if (!e.g.is_one()) throw Error(ErrorCode::InvalidInput, "element is not invertible modulo the given polynomial");
    return e.s % modulus;
}

namespace {

void require_monic(const PolyModP& f)
{
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial to factor must be monic");
}

// g(x) = sum a_{ip} x^{ip}  ->  sum a_{ip} x^i  (a^{1/p} = a in F_p).
PolyModP pth_root(const PolyModP& g)
{
    const u64 p = g.modulus();
    std::vector<u64> r;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) r.push_back(g.coeffs()[i]);
    return PolyModP(p, std::move(r));
}

void squarefree_into(const PolyModP& f, int scale, std::vector<PolyFactor>& out)
{
    const u64 p = f.modulus();
    if (f.degree() <= 0) return;
    PolyModP c = gcd(f, f.derivative());
    PolyModP w = f / c;
    int i = 1;
    while (!w.is_one()) {
        PolyModP y = gcd(w, c);
        PolyModP z = w / y;
        if (z.degree() > 0) out.push_back({z, i * scale});
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        if (p > static_cast<u64>(c.degree()))
            throw Error(ErrorCode::InvalidInput, "inconsistent squarefree decomposition");
        squarefree_into(pth_root(c), scale * static_cast<int>(p), out);
    }
}

// Distinct-degree split of a squarefree monic f: (product of all degree-d factors, d).
std::vector<std::pair<PolyModP, int>> distinct_degree(const PolyModP& f)
{
    const u64 p = f.modulus();
    std::vector<std::pair<PolyModP, int>> out;
    PolyModP rest = f;
    PolyModP h = PolyModP::x(p) % rest;
    const PolyModP x = PolyModP::x(p);
    int d = 0;
    while (rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, p, rest);
        PolyModP g = gcd(rest, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

PolyModP random_poly(u64 p, int below_degree, Xoshiro256StarStar& rng)
{
    std::vector<u64> c(static_cast<std::size_t>(below_degree));
    for (auto& v : c) v = rng.below(p);
    return PolyModP(p, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of f (product of degree-d irreducibles).
void equal_degree(const PolyModP& f, int d, Xoshiro256StarStar& rng, std::vector<PolyModP>& out)
{
    const u64 p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        PolyModP a = random_poly(p, f.degree(), rng);
        if (a.degree() < 1) continue;
        PolyModP candidate(p);
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            PolyModP t = a, acc = a;
            for (int j = 1; j < d; ++j) {
                t = mulmod(t, t, f);
                acc = acc + t;
            }
            candidate = acc;
        } else {
            // a^{(p^d-1)/2} = (a^{1+p+...+p^{d-1}})^{(p-1)/2}
            PolyModP t = a % f, acc = a % f;
            for (int j = 1; j < d; ++j) {
                t = powmod(t, p, f);
                acc = mulmod(acc, t, f);
            }
            candidate = powmod(acc, (p - 1) / 2, f) - PolyModP::constant(p, 1);
        }
        PolyModP g = gcd(f, candidate);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

u64 factor_seed(const PolyModP& f)
{
    // fixed salt for the factorizer's internal stream
    constexpr u64 kFactorSalt = 0x6f6b64656e73ULL;
    u64 h = splitmix64_mix(kFactorSalt ^ f.modulus());
    for (u64 c : f.coeffs()) h = splitmix64_mix(h ^ c);
    return h;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const PolyModP& f)
{
    require_monic(f);
    std::vector<PolyFactor> out;
    squarefree_into(f, 1, out);
    return out;
}

std::vector<PolyFactor> factor_mod_p(const PolyModP& f)
{
    require_monic(f);
    Xoshiro256StarStar rng(factor_seed(f));
    std::map<PolyModP, int> collected;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& [block, d] : distinct_degree(part.factor)) {
            std::vector<PolyModP> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) collected[g] += part.multiplicity;
        }
    }
    std::vector<PolyFactor> out;
    out.reserve(collected.size());
    for (auto& [g, e] : collected) out.push_back({g, e});
    return out;
}

bool is_irreducible(const PolyModP& g)
{
    const int d = g.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const u64 p = g.modulus();
    const PolyModP m = g.monic();
    const PolyModP x = PolyModP::x(p);
    PolyModP h = x % m;
    for (int j = 1; j < d; ++j) {
        h = powmod(h, p, m);
        if (!gcd(m, h - x).is_one()) return false;
    }
    h = powmod(h, p, m);
    return h == x % m;
}

PolyModP expand(const std::vector<PolyFactor>& factors, u64 p)
{
    PolyModP r = PolyModP::constant(p, 1);
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) r = r * g;
    return r;
}

}  // namespace okdens
