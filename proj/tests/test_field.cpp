#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "okdens/error.hpp"
#include "okdens/field.hpp"

using namespace okdens;

namespace {

std::vector<BigInt> big(const std::vector<long>& c)
{
    std::vector<BigInt> out;
    for (long v : c) out.emplace_back(v);
    return out;
}

BigInt disc_oracle(const std::vector<long>& c)
{
    const auto f = big(c);
    std::vector<BigInt> df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
    const long k = static_cast<long>(f.size()) - 1;
    BigInt r = oracle::cofactor_det(oracle::sylvester(f, df));
    return ((k * (k - 1) / 2) % 2 == 0) ? r : BigInt(-r);
}

ErrorCode code_of(const std::vector<long>& c, const FieldOptions& o = {})
{
    try {
        (void)parse_field(c, o);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("discriminant examples")
{
    CHECK(discriminant(big({-2, 0, 1})) == 8);
    CHECK(discriminant(big({1, 0, 1})) == -4);
    CHECK(discriminant(big({1, 1, 0, 1})) == -31);
    CHECK(discriminant(big({-7, -13, 0, 0, 0, 1})) == BigInt(-87547883));
    CHECK(disc_oracle({-2, 0, 1}) == 8);
    CHECK(disc_oracle({1, 0, 1}) == -4);
    CHECK(disc_oracle({1, 1, 0, 1}) == -31);
}

TEST_CASE("discriminant agrees with Sylvester cofactor expansion")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + trial % 4;
        auto c = oracle::random_ints(rng, static_cast<std::size_t>(k), -9, 9);
        c.push_back(1);
        CHECK(discriminant(big(c)) == disc_oracle(c));
    }
}

TEST_CASE("quadratic discriminant is b^2-4c")
{
    for (long b = -6; b <= 6; ++b)
        for (long c = -6; c <= 6; ++c) CHECK(discriminant(big({c, b, 1})) == b * b - 4 * c);
}

TEST_CASE("parse_field validation")
{
    CHECK(code_of({1, 2}) == ErrorCode::NotMonic);
    CHECK(code_of({1, 2, 2}) == ErrorCode::NotMonic);
    CHECK(code_of({1, 2, 1}) == ErrorCode::NotSquarefree);
    CHECK(code_of({-4, 0, 1}) == ErrorCode::HasRationalRoot);
    CHECK(code_of({-6, 11, -6, 1}) == ErrorCode::HasRationalRoot);
    // (x^2+1)(x^2+2): no rational root, factors modulo every prime
    CHECK(code_of({2, 0, 3, 0, 1}) == ErrorCode::IrreducibilityUnverified);
    FieldOptions assume;
    assume.assume_irreducible = true;
    CHECK(parse_field({2, 0, 3, 0, 1}, assume).irreducibility_witness() == 0);
    CHECK(code_of({3, 0, 1}) == ErrorCode::NotMaximal);
}

TEST_CASE("the four example fields parse and are maximal")
{
    const auto q = parse_field({0, 1});
    CHECK(q.degree() == 1);
    CHECK(q.discriminant() == 1);
    CHECK(q.polynomial_string() == "x");
    const auto r2 = parse_field({-2, 0, 1});
    CHECK(r2.maximality() == Maximality::Verified);
    CHECK(r2.checked_primes() == std::vector<BigInt>{2});
    CHECK(r2.polynomial_string() == "x^2-2");
    const auto c3 = parse_field({1, 1, 0, 1});
    CHECK(c3.checked_primes().empty());
    CHECK(c3.polynomial_string() == "x^3+x+1");
    const auto q5 = parse_field({-7, -13, 0, 0, 0, 1});
    CHECK(q5.polynomial_string() == "x^5-13x-7");
    CHECK(q5.irreducibility_witness() == 3);
    CHECK(q5.maximality() == Maximality::Verified);
}

TEST_CASE("Dedekind criterion")
{
    CHECK(dedekind_check(big({-2, 0, 1}), 2));
    CHECK(dedekind_check(big({-2, 0, 1}), 5));
    // x^2+3 at 2: f = (x+1)^2 mod 2, F = (f - (x+1)^2)/2 = 1 - x, gcd(x+1, x+1) != 1
    CHECK_FALSE(dedekind_check(big({3, 0, 1}), 2));
    // x^2+7 at 2 is not 2-maximal, x^2-5 neither (disc 20, (1+sqrt5)/2)
    CHECK_FALSE(dedekind_check(big({7, 0, 1}), 2));
    CHECK_FALSE(dedekind_check(big({-5, 0, 1}), 2));
    CHECK(dedekind_check(big({-3, 0, 1}), 2));
    CHECK_THROWS_AS(dedekind_check(big({-2, 0, 1}), 4), Error);
}

TEST_CASE("non-maximal override")
{
    FieldOptions o;
    o.allow_nonmaximal = true;
    const auto f = parse_field({3, 0, 1}, o);
    CHECK(f.maximality() == Maximality::AssumedByUser);
    CHECK(f.nonmaximal_primes() == std::vector<BigInt>{2});
    CHECK_FALSE(f.warnings().empty());
    CHECK(f.maximality_established_at(2));
    FieldOptions skip;
    skip.verify_maximality = false;
    const auto g = parse_field({-2, 0, 1}, skip);
    CHECK(g.maximality() == Maximality::AssumedByUser);
    CHECK(g.checked_primes().empty());
    CHECK_FALSE(g.maximality_established_at(2));
    CHECK(g.maximality_established_at(3));
}

TEST_CASE("coefficient text")
{
    CHECK(parse_coefficient_text("-2,0,1") == big({-2, 0, 1}));
    CHECK(parse_coefficient_text("[-7, -13, 0, 0, 0, 1]") == big({-7, -13, 0, 0, 0, 1}));
    CHECK_THROWS_AS(parse_coefficient_text("1,a"), Error);
    CHECK_THROWS_AS(parse_coefficient_text(""), Error);
}

TEST_CASE("arithmetic in Z[sqrt2]")
{
    const auto f = parse_field({-2, 0, 1});
    const auto a = AlgElem::from_ints({1, 1});
    CHECK(elem_mul(f, a, a) == AlgElem::from_ints({3, 2}));
    CHECK(mul_by_theta(f, a) == AlgElem::from_ints({2, 1}));
    CHECK(norm(f, AlgElem::from_ints({0, 1})) == -2);
    CHECK(norm(f, AlgElem::from_ints({3, 1})) == 7);
    CHECK(norm(f, a) == -1);
    CHECK_THROWS_AS(elem_mul(f, a, AlgElem::from_ints({1})), Error);
    CHECK_THROWS_AS(norm(f, AlgElem::from_ints({1, 2, 3})), Error);
}

TEST_CASE("quadratic norm formula u^2 - b u v + c v^2")
{
    const auto f = parse_field({1, 1, 1});  // x^2+x+1
    for (long u = -5; u <= 5; ++u)
        for (long v = -5; v <= 5; ++v) CHECK(norm(f, AlgElem::from_ints({u, v})) == u * u - u * v + v * v);
}

TEST_CASE("ring axioms and norm multiplicativity")
{
    std::mt19937_64 rng(5);
    for (const std::vector<long>& c :
         {std::vector<long>{0, 1}, {-2, 0, 1}, {1, 1, 0, 1}, {-7, -13, 0, 0, 0, 1}}) {
        const auto f = parse_field(c);
        const auto k = static_cast<std::size_t>(f.degree());
        for (int t = 0; t < 100; ++t) {
            const auto a = AlgElem::from_ints(oracle::random_ints(rng, k, -20, 20));
            const auto b = AlgElem::from_ints(oracle::random_ints(rng, k, -20, 20));
            const auto d = AlgElem::from_ints(oracle::random_ints(rng, k, -20, 20));
            CHECK(elem_mul(f, a, b) == elem_mul(f, b, a));
            CHECK(elem_mul(f, elem_mul(f, a, b), d) == elem_mul(f, a, elem_mul(f, b, d)));
            CHECK(elem_mul(f, a, b + d) == elem_mul(f, a, b) + elem_mul(f, a, d));
            CHECK(elem_mul(f, a, AlgElem::one(f.degree())) == a);
            CHECK(norm(f, elem_mul(f, a, b)) == norm(f, a) * norm(f, b));
            AlgElem acc = d;
            std::vector<BigInt> scratch;
            elem_fma(f, acc, a, b, true, scratch);
            CHECK(acc == d - elem_mul(f, a, b));
            // norm via cofactor expansion of the multiplication matrix
            CHECK(norm(f, a) == oracle::cofactor_det(multiplication_matrix(f, a)));
        }
    }
}

TEST_CASE("degree one field is Z")
{
    const auto q = parse_field({0, 1});
    CHECK(elem_mul(q, AlgElem::from_ints({6}), AlgElem::from_ints({-7})) == AlgElem::from_ints({-42}));
    CHECK(norm(q, AlgElem::from_ints({-9})) == -9);
    const auto shifted = parse_field({5, 1});  // theta = -5
    CHECK(mul_by_theta(shifted, AlgElem::from_ints({2})) == AlgElem::from_ints({-10}));
}
