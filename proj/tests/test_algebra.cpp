/*
   Copyright 2026 The fdiv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/algebra/laurent_matrix.hpp"
#include "fdiv/algebra/pid.hpp"
#include "fdiv/error.hpp"
#include "fdiv/verify/generators.hpp"

namespace {

using namespace frobdiv;
using boost::multiprecision::cpp_int;

// Exact binomials from Pascal's rule, independent of any modular shortcut.
std::vector<std::vector<cpp_int>> pascal(std::size_t n)
{
    std::vector<std::vector<cpp_int>> c(n + 1, std::vector<cpp_int>(n + 1, 0));
    for (std::size_t l = 0; l <= n; ++l) {
        c[l][0] = 1;
        for (std::size_t k = 1; k <= l; ++k) c[l][k] = c[l - 1][k - 1] + c[l - 1][k];
    }
    return c;
}

cpp_int factorial(std::uint64_t n)
{
    cpp_int f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

Field f4() { return Field(2, 2, {1, 1, 1}); }

LaurentPoly poly(const Field& k, std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms)
{
    std::vector<std::pair<std::int64_t, FieldElement>> t;
    for (auto [e, c] : terms) t.emplace_back(e, k.from_int(c));
    return LaurentPoly::from_terms(k, t);
}

TEST(Binomial, Examples)
{
    const auto exact = pascal(8);
    EXPECT_EQ(binom_mod_p(7, 3, 2), static_cast<std::uint32_t>(exact[7][3] % 2));
    EXPECT_EQ(binom_mod_p(7, 3, 2), 1u);
    EXPECT_EQ(binom_mod_p(2, 1, 2), 0u);
    EXPECT_EQ(binom_mod_p(3, 5, 7), 0u);
}

TEST(Binomial, LucasAgreesWithPascal)
{
    const auto exact = pascal(200);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t l = 0; l <= 200; ++l)
            for (std::uint64_t k = 0; k <= 200; ++k) {
                const std::uint32_t expected = k > l ? 0 : static_cast<std::uint32_t>(exact[l][k] % p);
                ASSERT_EQ(binom_mod_p(l, k, p), expected) << "l=" << l << " k=" << k << " p=" << p;
            }
}

TEST(Binomial, Vandermonde)
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[gen::uniform(rng, 0, 3)];
        const auto a = static_cast<std::uint64_t>(gen::uniform(rng, 0, 60));
        const auto b = static_cast<std::uint64_t>(gen::uniform(rng, 0, 60));
        const auto k = static_cast<std::uint64_t>(gen::uniform(rng, 0, 60));
        std::uint64_t sum = 0;
        for (std::uint64_t i = 0; i <= k; ++i) sum += binom_mod_p(a, i, p) * binom_mod_p(b, k - i, p);
        ASSERT_EQ(sum % p, binom_mod_p(a + b, k, p));
    }
}

TEST(Binomial, MultinomialUnitExamples)
{
    EXPECT_EQ(multinomial_unit(3, 2), 1u);
    EXPECT_EQ(multinomial_unit(4, 2), 1u);
    for (std::uint32_t p : {2u, 3u}) {
        std::uint64_t pm = 1;
        for (int m = 0; m <= 3; ++m, pm *= p) EXPECT_EQ(multinomial_unit(pm, p), 1u);
    }
}

TEST(Binomial, MultinomialUnitMatchesFactorialRatio)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t j = 0; j <= 80; ++j) {
            cpp_int denom = 1;
            std::uint64_t pm = 1;
            for (std::uint32_t digit : base_p_digits(j, p)) {
                for (std::uint32_t c = 0; c < digit; ++c) denom *= factorial(pm);
                pm *= p;
            }
            const cpp_int ratio = factorial(j) / denom;
            ASSERT_EQ(factorial(j) % denom, 0);
            ASSERT_NE(ratio % p, 0) << "j=" << j << " p=" << p;
            ASSERT_EQ(multinomial_unit(j, p), static_cast<std::uint32_t>(ratio % p)) << "j=" << j << " p=" << p;
        }
}

TEST(Field, RejectsBadInput)
{
    EXPECT_THROW(Field::prime(4), InvalidField);
    EXPECT_THROW(Field(2, 2, {1, 0, 1}), InvalidField); // u^2 + 1 = (u + 1)^2
    EXPECT_THROW(Field(3, 2, {}), InvalidField);
    EXPECT_NO_THROW(Field(3, 2, {1, 0, 1}));
}

TEST(Field, FrobeniusExamples)
{
    const Field k = Field::prime(5);
    for (std::uint32_t c = 0; c < 5; ++c)
        for (std::int64_t n = -3; n <= 3; ++n) EXPECT_EQ(k.frobenius(k.element(c), n), k.element(c));

    const Field q = f4();
    const FieldElement u = q.generator_u();
    EXPECT_EQ(q.frobenius(u, 1), q.add(u, q.one()));
    EXPECT_EQ(q.mul(u, u), q.add(u, q.one()));
    for (std::uint32_t c = 0; c < q.size(); ++c) EXPECT_EQ(q.frobenius(q.frobenius(q.element(c), 1), -1), q.element(c));
}

void check_field_axioms_and_frobenius(const Field& k)
{
    const std::uint32_t q = k.size();
    std::vector<bool> hit(q, false);
    for (std::uint32_t a = 0; a < q; ++a) {
        const FieldElement x = k.element(a);
        const FieldElement fx = k.frobenius(x, 1);
        ASSERT_EQ(fx, k.pow(x, k.characteristic()));
        ASSERT_FALSE(hit[fx.code]);
        hit[fx.code] = true;
        ASSERT_EQ(k.frobenius(fx, -1), x);
        if (a != 0) {
            ASSERT_EQ(k.mul(x, k.inv(x)), k.one());
        }
        ASSERT_EQ(k.add(x, k.neg(x)), k.zero());
        for (std::uint32_t b = 0; b < q; ++b) {
            const FieldElement y = k.element(b);
            const FieldElement fy = k.frobenius(y, 1);
            ASSERT_EQ(k.frobenius(k.add(x, y), 1), k.add(fx, fy));
            ASSERT_EQ(k.frobenius(k.mul(x, y), 1), k.mul(fx, fy));
        }
    }
}

TEST(Field, FrobeniusIsAutomorphismExhaustive)
{
    const std::vector<Field> fields = {
        Field::prime(2),           Field::prime(3),          Field::prime(61),
        f4(),                      Field(2, 3, {1, 1, 0, 1}), Field(3, 2, {1, 0, 1}),
        Field(5, 2, {2, 0, 1}),    Field(3, 3, {1, 2, 0, 1}), Field(7, 2, {1, 0, 1}),
        Field(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}),
        Field(2, 12, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
    };
    for (const Field& k : fields) {
        SCOPED_TRACE(testing::Message() << "q=" << k.size());
        check_field_axioms_and_frobenius(k);
    }
}

TEST(Field, DistributivityRandom)
{
    gen::Rng rng(5);
    const Field k(3, 3, {1, 2, 0, 1});
    for (int i = 0; i < 2000; ++i) {
        const auto a = gen::element(rng, k), b = gen::element(rng, k), c = gen::element(rng, k);
        ASSERT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        ASSERT_EQ(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
    }
}

TEST(Laurent, NormalFormAndEmptyDegree)
{
    const Field k = Field::prime(3);
    const LaurentPoly z(k);
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.min_exponent().has_value());
    EXPECT_FALSE(poly_degree(z).has_value());
    const LaurentPoly f = poly(k, {{-2, 1}, {3, 2}});
    const LaurentPoly g = poly(k, {{3, 1}});
    const LaurentPoly s = f + g; // 2 + 1 = 0 in F_3
    EXPECT_EQ(s, poly(k, {{-2, 1}}));
    EXPECT_EQ(s.max_exponent(), std::optional<std::int64_t>(-2));
    EXPECT_TRUE((f - f).is_zero());
}

TEST(Laurent, SubstitutePowerExamples)
{
    const Field k2 = Field::prime(2);
    EXPECT_EQ(substitute_power(poly(k2, {{1, 1}, {0, 1}}), 2, true), poly(k2, {{2, 1}, {0, 1}}));

    const Field q = f4();
    const FieldElement c = q.generator_u();
    const LaurentPoly f = LaurentPoly::monomial(q, c, -1);
    EXPECT_EQ(substitute_power(f, 2, true), LaurentPoly::monomial(q, q.mul(c, c), -2));
    EXPECT_EQ(substitute_power(f, 2, false), LaurentPoly::monomial(q, c, -2));
    const LaurentPoly constant = LaurentPoly::constant(q, c);
    EXPECT_EQ(substitute_power(constant, 2, true), LaurentPoly::constant(q, q.frobenius(c, 1)));
}

TEST(Laurent, SubstitutePowerIsRingHomomorphism)
{
    gen::Rng rng(17);
    const std::vector<Field> fields = {Field::prime(2), Field::prime(5), f4(), Field(3, 2, {1, 0, 1})};
    for (int trial = 0; trial < 400; ++trial) {
        const Field& k = fields[trial % fields.size()];
        const auto f = gen::laurent(rng, k, gen::uniform(rng, -4, 0), gen::uniform(rng, 0, 4));
        const auto g = gen::laurent(rng, k, gen::uniform(rng, -4, 0), gen::uniform(rng, 0, 4));
        const bool flag = trial % 2 == 0;
        const std::uint64_t p = k.characteristic();
        ASSERT_EQ(substitute_power(f * g, p, flag), substitute_power(f, p, flag) * substitute_power(g, p, flag));
        ASSERT_EQ(substitute_power(f + g, p, flag), substitute_power(f, p, flag) + substitute_power(g, p, flag));
        ASSERT_EQ(frobenius_descend(frobenius_pullback(f, 2), 2), f);
    }
}

TEST(Laurent, PolyDivmod)
{
    gen::Rng rng(3);
    const Field k = Field::prime(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = gen::polynomial(rng, k, gen::uniform(rng, 0, 8));
        auto b = gen::polynomial(rng, k, gen::uniform(rng, 0, 4));
        if (b.is_zero()) continue;
        const auto [quot, rem] = poly_divmod(a, b);
        ASSERT_EQ(quot * b + rem, a);
        if (!rem.is_zero()) {
            ASSERT_LT(*poly_degree(rem), *poly_degree(b));
        }
    }
}

TEST(LaurentMatrix, InverseExamples)
{
    const Field k = Field::prime(3);
    const auto d = LaurentMatrix::diagonal_monomials(k, {2, -1});
    EXPECT_EQ(laurent_matrix_inverse(d), LaurentMatrix::diagonal_monomials(k, {-2, 1}));

    LaurentMatrix t(k, 2, 2);
    t(0, 0) = poly(k, {{1, 1}});
    t(0, 1) = poly(k, {{0, 1}});
    t(1, 1) = poly(k, {{1, 1}});
    LaurentMatrix expected(k, 2, 2);
    expected(0, 0) = poly(k, {{-1, 1}});
    expected(0, 1) = poly(k, {{-2, -1}});
    expected(1, 1) = poly(k, {{-1, 1}});
    EXPECT_EQ(laurent_matrix_inverse(t), expected);
    EXPECT_EQ(t * expected, LaurentMatrix::identity(k, 2));

    LaurentMatrix bad(k, 2, 2);
    bad(0, 0) = poly(k, {{0, 1}, {1, 1}});
    bad(1, 1) = poly(k, {{0, 1}});
    EXPECT_EQ(determinant(bad), poly(k, {{0, 1}, {1, 1}}));
    EXPECT_THROW(laurent_matrix_inverse(bad), NotATransitionMatrix);
}

TEST(LaurentMatrix, InverseIsTwoSided)
{
    gen::Rng rng(23);
    const std::vector<Field> fields = {Field::prime(2), Field::prime(3), Field::prime(5), f4()};
    for (int trial = 0; trial < 150; ++trial) {
        const Field& k = fields[trial % fields.size()];
        const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto t = gen::transition_matrix(rng, k, r, -3, 3);
        ASSERT_TRUE(determinant(t).is_monomial());
        const auto inv = laurent_matrix_inverse(t);
        ASSERT_EQ(t * inv, LaurentMatrix::identity(k, r));
        ASSERT_EQ(inv * t, LaurentMatrix::identity(k, r));
    }
}

TEST(LaurentMatrix, UnimodularGeneratorAndPolynomialInverse)
{
    gen::Rng rng(29);
    const Field k = Field::prime(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen::unimodular_matrix(rng, k, 2, 3);
        ASSERT_TRUE(a.is_polynomial());
        ASSERT_TRUE(determinant(a).is_constant());
        const auto inv = polynomial_matrix_inverse(a);
        ASSERT_TRUE(inv.is_polynomial());
        ASSERT_EQ(a * inv, LaurentMatrix::identity(k, 2));
    }
}

TEST(Matrix, KernelAndRank)
{
    gen::Rng rng(31);
    const Field k = f4();
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
        const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
        Matrix m = gen::matrix(rng, k, rows, cols);
        if (trial % 3 == 0) m = gen::matrix(rng, k, rows, 2) * gen::matrix(rng, k, 2, cols);
        const Matrix ker = kernel_basis(m);
        ASSERT_EQ(ker.cols() + rank(m), cols);
        ASSERT_TRUE((m * ker).is_zero());
        ASSERT_EQ(block_rank(m), rank(m));
    }
}

TEST(Matrix, InverseAndSolve)
{
    gen::Rng rng(37);
    const Field k = Field::prime(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = gen::invertible_matrix(rng, k, 4);
        const auto inv = inverse(a);
        ASSERT_TRUE(inv.has_value());
        ASSERT_EQ(a * *inv, Matrix::identity(k, 4));
        std::vector<FieldElement> b(4);
        for (auto& x : b) x = gen::element(rng, k);
        const auto v = solve(a, b);
        ASSERT_TRUE(v.has_value());
        ASSERT_EQ(a.apply(*v), b);
    }
}

TEST(Matrix, SpanIntersection)
{
    const Field k = Field::prime(2);
    const Matrix u = Matrix::from_columns(k, 3, {{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}});
    const Matrix w = Matrix::from_columns(k, 3, {{k.zero(), k.one(), k.zero()}, {k.zero(), k.zero(), k.one()}});
    const Matrix meet = intersect_spans(u, w);
    ASSERT_EQ(meet.cols(), 1u);
    EXPECT_TRUE(same_span(meet, Matrix::from_columns(k, 3, {{k.zero(), k.one(), k.zero()}})));
    EXPECT_TRUE(span_contains(u, meet));
    EXPECT_FALSE(span_contains(u, w));
}

TEST(Pid, SmithInvariants)
{
    const Field k = Field::prime(3);
    LaurentMatrix m(k, 2, 2);
    m(0, 0) = poly(k, {{1, 1}});
    m(1, 1) = poly(k, {{2, 1}});
    const auto inv = smith_invariants(m);
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(inv[0], poly(k, {{1, 1}}));
    EXPECT_EQ(inv[1], poly(k, {{2, 1}}));

    LaurentMatrix n(k, 2, 2);
    n(0, 0) = poly(k, {{0, 2}, {1, 1}});
    n(1, 1) = poly(k, {{0, 1}, {1, 1}});
    const auto coprime = smith_invariants(n);
    ASSERT_EQ(coprime.size(), 2u);
    EXPECT_EQ(coprime[0], poly(k, {{0, 1}}));
    EXPECT_EQ(coprime[1], poly(k, {{0, 2}, {1, 0}, {2, 1}}));

    gen::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = gen::unimodular_matrix(rng, k, 3, 2);
        for (const auto& f : smith_invariants(u)) ASSERT_EQ(f, poly(k, {{0, 1}}));
        ASSERT_EQ(smith_invariants(u).size(), 3u);
    }
}

TEST(Pid, ModuleBasisSpansSameModule)
{
    const Field k = Field::prime(2);
    // Columns (x, 0), (x^2, 0), (1, x): the module is generated by (x, 0) and (1, x).
    std::vector<std::vector<LaurentPoly>> cols = {
        {poly(k, {{1, 1}}), LaurentPoly(k)},
        {poly(k, {{2, 1}}), LaurentPoly(k)},
        {poly(k, {{0, 1}}), poly(k, {{1, 1}})},
    };
    const auto basis = module_basis(2, cols);
    ASSERT_EQ(basis.size(), 2u);
    LaurentMatrix b(k, 2, 2);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i) b(i, j) = basis[j][i];
    const auto det = determinant(b);
    ASSERT_TRUE(det.is_monomial());
    EXPECT_EQ(det.min_exponent(), std::optional<std::int64_t>(2));
}

TEST(Json, RoundTrip)
{
    gen::Rng rng(43);
    const Field k(3, 2, {1, 0, 1});
    const json jf = field_to_json(k);
    EXPECT_EQ(field_from_json(jf), k);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = gen::laurent(rng, k, -3, 3);
        ASSERT_EQ(poly_from_json(k, json::parse(poly_to_json(f).dump())), f);
        const auto t = gen::transition_matrix(rng, k, 2, -2, 2);
        ASSERT_EQ(laurent_matrix_from_json(k, laurent_matrix_to_json(t)), t);
        const auto m = gen::matrix(rng, k, 2, 3);
        ASSERT_EQ(matrix_from_json(k, matrix_to_json(m)), m);
    }
    EXPECT_EQ(element_from_json(k, json(4)), k.from_int(4));
    EXPECT_THROW(field_from_json(json::parse(R"({"p":2,"e":2,"modulus":[1,0,1]})")), InvalidField);
}

TEST(Json, DefaultModulus)
{
    EXPECT_EQ(default_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(default_modulus(2, 3), (std::vector<std::uint32_t>{1, 1, 0, 1}));
    EXPECT_EQ(default_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(field_from_json(json::parse(R"({"p":2,"e":2})")), Field(2, 2, {1, 1, 1}));
    EXPECT_EQ(field_from_json(json::parse(R"({"p":5})")), Field::prime(5));
    EXPECT_THROW(field_from_json(json::parse(R"({"p":4,"e":1})")), InvalidField);
}

} // namespace
