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
#include "fdiv/diffops/operator.hpp"
#include "fdiv/error.hpp"
#include "fdiv/verify/generators.hpp"

namespace {

using namespace frobdiv;
using boost::multiprecision::cpp_int;

cpp_int exact_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    cpp_int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

LaurentPoly xp(const Field& k, std::int64_t e) { return LaurentPoly::x_power(k, e); }

DividedOperator random_operator(gen::Rng& rng, const Field& k, std::uint64_t max_order)
{
    DividedOperator op(k);
    const auto terms = gen::uniform(rng, 0, 3);
    for (std::int64_t t = 0; t < terms; ++t)
        op.add_term(static_cast<std::uint64_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(max_order))),
                    gen::polynomial(rng, k, gen::uniform(rng, 0, 3)));
    return op;
}

bool agree_on_monomials(const DividedOperator& a, const DividedOperator& b, std::int64_t degree)
{
    for (std::int64_t m = 0; m <= degree; ++m)
        if (apply(a, xp(a.field(), m)) != apply(b, xp(a.field(), m))) return false;
    return true;
}

TEST(Apply, Examples)
{
    const Field k3 = Field::prime(3);
    const auto expected = static_cast<std::int64_t>(exact_binomial(5, 2) % 3);
    EXPECT_EQ(apply(DividedOperator::basis(k3, 2), xp(k3, 5)), LaurentPoly::monomial(k3, k3.from_int(expected), 3));
    EXPECT_EQ(apply(DividedOperator::basis(k3, 2), xp(k3, 5)), xp(k3, 3));

    gen::Rng rng(1);
    const auto f = gen::polynomial(rng, k3, 9);
    EXPECT_EQ(apply(DividedOperator::basis(k3, 0), f), f);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Field k = Field::prime(p);
        EXPECT_EQ(apply(DividedOperator::basis(k, p), xp(k, p)), xp(k, 0));
    }
    EXPECT_THROW(apply(DividedOperator::basis(k3, 1), xp(k3, -1)), InvalidInput);
}

TEST(Apply, MatchesExactBinomials)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        for (std::uint64_t i = 0; i <= 30; ++i)
            for (std::int64_t l = 0; l <= 40; ++l) {
                const auto c = static_cast<std::int64_t>(exact_binomial(static_cast<std::uint64_t>(l), i) % p);
                const LaurentPoly want = static_cast<std::int64_t>(i) > l
                                             ? LaurentPoly(k)
                                             : LaurentPoly::monomial(k, k.from_int(c), l - static_cast<std::int64_t>(i));
                ASSERT_EQ(apply(DividedOperator::basis(k, i), xp(k, l)), want);
            }
    }
}

TEST(Compose, Examples)
{
    const Field k2 = Field::prime(2);
    const auto d1 = DividedOperator::basis(k2, 1);
    EXPECT_TRUE(compose(d1, d1).is_zero());

    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        const auto d = DividedOperator::basis(k, 1);
        const auto x = DividedOperator::multiplication(xp(k, 1));
        const auto commutator = compose(d, x) - compose(x, d);
        EXPECT_EQ(commutator, DividedOperator::basis(k, 0));
        EXPECT_TRUE(agree_on_monomials(commutator, DividedOperator::basis(k, 0), 10));
    }

    gen::Rng rng(2);
    const Field k3 = Field::prime(3);
    for (int i = 0; i < 20; ++i) {
        const auto b = random_operator(rng, k3, 8);
        EXPECT_EQ(compose(DividedOperator::basis(k3, 0), b), b);
    }
}

TEST(Compose, BasisRelationAgainstExactBinomials)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        for (std::uint64_t a = 0; a <= 12; ++a)
            for (std::uint64_t b = 0; b <= 12; ++b) {
                const auto c = static_cast<std::int64_t>(exact_binomial(a + b, a) % p);
                const auto want = DividedOperator::basis(k, a + b).scaled(k.from_int(c));
                ASSERT_EQ(compose(DividedOperator::basis(k, a), DividedOperator::basis(k, b), 40), want);
            }
    }
}

TEST(Compose, AssociativeOnRandomTriples)
{
    gen::Rng rng(3);
    const std::vector<Field> fields = {Field::prime(2), Field::prime(3), Field::prime(5), Field(2, 2, {1, 1, 1})};
    for (int trial = 0; trial < 150; ++trial) {
        const Field& k = fields[trial % fields.size()];
        const auto a = random_operator(rng, k, 12);
        const auto b = random_operator(rng, k, 12);
        const auto c = random_operator(rng, k, 12);
        const auto left = compose(compose(a, b), c);
        const auto right = compose(a, compose(b, c));
        ASSERT_EQ(left, right);
        ASSERT_TRUE(agree_on_monomials(left, right, 40));
    }
}

TEST(Compose, OrderFiltration)
{
    gen::Rng rng(4);
    const Field k = Field::prime(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_operator(rng, k, 12);
        const auto b = random_operator(rng, k, 12);
        const auto ab = compose(a, b);
        if (a.is_zero() || b.is_zero()) {
            ASSERT_TRUE(ab.is_zero());
            continue;
        }
        if (!ab.is_zero()) {
            ASSERT_LE(*order(ab), *order(a) + *order(b));
        }
    }
}

TEST(Compose, GeneratorsArePNilpotent)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        std::uint64_t pm = 1;
        for (int m = 0; m <= 2; ++m, pm *= p) {
            const auto g = DividedOperator::basis(k, pm);
            DividedOperator power = g;
            for (std::uint32_t i = 1; i < p; ++i) {
                ASSERT_FALSE(power.is_zero()) << "p=" << p << " m=" << m << " power " << i;
                power = compose(power, g);
            }
            EXPECT_TRUE(power.is_zero()) << "p=" << p << " m=" << m;
        }
    }
}

TEST(Compose, ConstantCoefficientOperatorsCommute)
{
    for (std::uint32_t p : {2u, 3u}) {
        const Field k = Field::prime(p);
        for (std::uint64_t a = 0; a <= 15; ++a)
            for (std::uint64_t b = 0; b <= 15; ++b)
                ASSERT_EQ(compose(DividedOperator::basis(k, a), DividedOperator::basis(k, b)),
                          compose(DividedOperator::basis(k, b), DividedOperator::basis(k, a)));
    }
}

TEST(Apply, OperatorsWithoutOrderZeroKillConstants)
{
    gen::Rng rng(5);
    const Field k = Field(3, 2, {1, 0, 1});
    for (int trial = 0; trial < 100; ++trial) {
        DividedOperator op(k);
        for (int t = 0; t < 3; ++t)
            op.add_term(static_cast<std::uint64_t>(gen::uniform(rng, 1, 20)), gen::polynomial(rng, k, 4));
        ASSERT_TRUE(apply(op, xp(k, 0)).is_zero());
    }
}

TEST(Order, Examples)
{
    const Field k = Field::prime(3);
    DividedOperator op = DividedOperator::basis(k, 5);
    op.add_term(2, xp(k, 1));
    EXPECT_EQ(order(op), std::optional<std::uint64_t>(5));
    EXPECT_EQ(order(DividedOperator::multiplication(xp(k, 4) + xp(k, 0))), std::optional<std::uint64_t>(0));
    EXPECT_FALSE(order(DividedOperator(k)).has_value());
    EXPECT_FALSE(order(op - op).has_value());
}

TEST(Decompose, Examples)
{
    const Field k2 = Field::prime(2);
    const auto g3 = decompose_generator_product(3, 2);
    ASSERT_EQ(g3.factors.size(), 2u);
    EXPECT_EQ(g3.factors[0], (std::pair<std::uint32_t, std::uint32_t>{0, 1}));
    EXPECT_EQ(g3.factors[1], (std::pair<std::uint32_t, std::uint32_t>{1, 1}));
    EXPECT_EQ(g3.unit, 1u);
    const auto d1d2 = compose(DividedOperator::basis(k2, 1), DividedOperator::basis(k2, 2));
    EXPECT_EQ(d1d2, DividedOperator::basis(k2, 3));
    EXPECT_TRUE(agree_on_monomials(recompose(k2, g3), DividedOperator::basis(k2, 3), 10));

    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::uint64_t pm = 1;
        for (std::uint32_t m = 0; m <= 3; ++m, pm *= p) {
            const auto g = decompose_generator_product(pm, p);
            ASSERT_EQ(g.factors.size(), 1u);
            EXPECT_EQ(g.factors[0], (std::pair<std::uint32_t, std::uint32_t>{m, 1}));
            EXPECT_EQ(g.unit, 1u);
        }
    }
    const auto g0 = decompose_generator_product(0, 3);
    EXPECT_TRUE(g0.factors.empty());
    EXPECT_EQ(g0.unit, 1u);
}

TEST(Decompose, RecompositionReproducesBasisOperator)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        for (std::uint64_t j = 0; j < 150; ++j) {
            const auto op = recompose(k, decompose_generator_product(j, p));
            ASSERT_EQ(op, DividedOperator::basis(k, j)) << "j=" << j << " p=" << p;
        }
    }
}

TEST(Json, OperatorRoundTrip)
{
    gen::Rng rng(11);
    const std::vector<Field> fields = {Field::prime(2), Field::prime(5), Field(2, 2, {1, 1, 1})};
    for (int trial = 0; trial < 60; ++trial) {
        const Field& k = fields[trial % fields.size()];
        const auto op = random_operator(rng, k, 10);
        ASSERT_EQ(operator_from_json(k, operator_to_json(op)), op);
    }
}

TEST(Json, OperatorRejectsBadKeys)
{
    const Field k = Field::prime(3);
    EXPECT_THROW(operator_from_json(k, json{{"x", json::object()}}), InvalidInput);
    EXPECT_THROW(operator_from_json(k, json::array()), InvalidInput);
}

} // namespace
