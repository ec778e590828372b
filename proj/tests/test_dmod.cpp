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

#include "fdiv/diffops/operator.hpp"
#include "fdiv/dmod/extraction.hpp"
#include "fdiv/error.hpp"
#include "fdiv/verify/generators.hpp"
#include "fdiv/verify/oracles.hpp"

namespace {

using namespace frobdiv;

LaurentPoly xp(const Field& k, std::int64_t e) { return LaurentPoly::x_power(k, e); }

LaurentMatrix matrix2(const Field& k, LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d)
{
    LaurentMatrix m(k, 2, 2);
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
}

TEST(Validate, TrivialStructurePasses)
{
    for (std::uint32_t p : {2u, 3u}) {
        const auto report = validate_dmodule(trivial_dmodule(Field::prime(p), 2, 3), 4);
        EXPECT_TRUE(report.passed) << report.failure;
        EXPECT_GT(report.checks, 0u);
    }
}

TEST(Validate, PerturbedFirstGeneratorFails)
{
    const Field k = Field::prime(2);
    DModulePresentation m = trivial_dmodule(k, 1, 2);
    m.actions[0](0, 0) = LaurentPoly::constant(k, k.one());
    const auto report = validate_dmodule(m, 2);
    ASSERT_FALSE(report.passed);
    EXPECT_EQ(report.failed_check, "leibniz");
    EXPECT_NE(report.failure.find("D_3(x^1 * x^0 e_0)"), std::string::npos) << report.failure;

    // With a single level the Leibniz rule for D_1 holds by construction; D_1^2 = 0 is what breaks.
    DModulePresentation one = trivial_dmodule(k, 1, 1);
    one.actions[0](0, 0) = LaurentPoly::constant(k, k.one());
    const auto r1 = validate_dmodule(one, 2);
    ASSERT_FALSE(r1.passed);
    EXPECT_EQ(r1.failed_check, "nilpotence");
}

TEST(Validate, NoncommutingGeneratorsFail)
{
    const Field k = Field::prime(2);
    // D_1 acts as the first-order part of a nilpotent endomorphism; D_2 by a noncommuting one.
    DModulePresentation m = trivial_dmodule(k, 2, 2);
    m.actions[0] = matrix2(k, LaurentPoly(k), LaurentPoly::constant(k, k.one()), LaurentPoly(k), LaurentPoly(k));
    m.actions[1] = matrix2(k, LaurentPoly(k), LaurentPoly(k), LaurentPoly::constant(k, k.one()), LaurentPoly(k));
    EXPECT_FALSE(validate_dmodule(m, 2).passed);
}

TEST(FromTower, IdentityTowerIsTrivial)
{
    const Field k = Field::prime(3);
    const std::vector<LaurentMatrix> tower(3, LaurentMatrix::identity(k, 2));
    const auto m = dmod_from_tower(tower, k);
    EXPECT_EQ(m.levels, 3u);
    for (const auto& a : m.actions) EXPECT_TRUE(a.is_zero());
}

TEST(FromTower, RejectsNonUnitDeterminant)
{
    const Field k = Field::prime(2);
    const auto a = matrix2(k, xp(k, 0), LaurentPoly(k), LaurentPoly(k), xp(k, 0) + xp(k, 1));
    EXPECT_THROW(dmod_from_tower({a}, k), NotATransitionMatrix);
}

TEST(FromTower, UnipotentLevelOneRecoversTwistedGenerators)
{
    const Field k = Field::prime(2);
    const auto a = matrix2(k, xp(k, 0), xp(k, 1), LaurentPoly(k), xp(k, 0));
    const auto m = dmod_from_tower({a}, k);
    ASSERT_TRUE(validate_dmodule(m, 4).passed);
    const auto e1 = extract_level(m, 1, 2);
    ASSERT_TRUE(e1.certified());
    // E_1 = A_0 k[x^2]^2: A_0^{-1} times the generators has entries in k[x^2] and unit determinant.
    const auto u = frobenius_descend(polynomial_matrix_inverse(a) * e1.generators, 1);
    EXPECT_TRUE(determinant(u).is_constant());
    const auto oracle = oracle::dmod_roundtrip({a}, k, 4);
    EXPECT_TRUE(oracle.ok) << oracle.failure;
}

TEST(FromTower, RandomUnimodularTowersValidate)
{
    gen::Rng rng(101);
    const Field k = Field::prime(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = dmod_from_tower(gen::affine_tower(rng, k, 2, 2), k);
        const auto report = validate_dmodule(m, 4);
        ASSERT_TRUE(report.passed) << report.failure;
    }
}

TEST(Extract, TrivialRankOne)
{
    const Field k = Field::prime(2);
    const auto m = trivial_dmodule(k, 1, 3);
    const auto e1 = extract_level(m, 1, 1);
    ASSERT_TRUE(e1.certified());
    EXPECT_EQ(e1.generators(0, 0), xp(k, 0));
    const auto e2 = extract_level(m, 2, 8);
    ASSERT_TRUE(e2.certified());
    EXPECT_EQ(e2.generators(0, 0), xp(k, 0));
    EXPECT_THROW(extract_level(m, 4, 8), InvalidInput);
    EXPECT_THROW(extract_level(m, 1, 0), InvalidInput);
}

TEST(Extract, SliceKernelOfTrivialModuleIsSpannedByPowers)
{
    const Field k = Field::prime(3);
    const ActionTable table(trivial_dmodule(k, 1, 2));
    // Degree <= 20 sections killed by D_1, D_3, D_9... up to level 2: polynomials in x^9.
    const Matrix kernel = slice_kernel(table, 2, 20);
    EXPECT_EQ(kernel.cols(), 3u);
    for (std::size_t j = 0; j < kernel.cols(); ++j)
        for (std::size_t i = 0; i < kernel.rows(); ++i)
            if (!k.is_zero(kernel(i, j))) {
                EXPECT_EQ(i % 9, 0u);
            }
}

TEST(Extract, ImpossibleModuleDiverges)
{
    // D_1 = identity on O over F_3 is nilpotence-violating; nothing but 0 is killed, so rank stays 0.
    const Field k = Field::prime(3);
    DModulePresentation m = trivial_dmodule(k, 1, 1);
    m.actions[0](0, 0) = LaurentPoly::constant(k, k.one());
    EXPECT_THROW(extract_level(m, 1, 2, 32), ExtractionDiverged);
}

TEST(Extract, KernelTowerIsNested)
{
    gen::Rng rng(103);
    const Field k = Field::prime(2);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = dmod_from_tower(gen::affine_tower(rng, k, 2, 3), k);
        const ActionTable table(m);
        for (std::uint32_t n = 0; n < 3; ++n)
            ASSERT_TRUE(span_contains(slice_kernel(table, n, 24), slice_kernel(table, n + 1, 24)));
    }
}

TEST(Extract, TwistedLinearity)
{
    gen::Rng rng(107);
    const Field k(3, 2, {1, 0, 1});
    for (int trial = 0; trial < 4; ++trial) {
        const auto tower = gen::affine_tower(rng, k, 2, 2);
        const auto m = dmod_from_tower(tower, k);
        const ActionTable table(m);
        for (std::uint32_t n = 1; n <= 2; ++n) {
            const auto level = extract_level(m, n, 3);
            ASSERT_TRUE(level.certified());
            for (std::size_t g = 0; g < 2; ++g) {
                const auto a = gen::polynomial(rng, k, 2);
                Section s = level.generators.column(g);
                for (auto& f : s) f = frobenius_pullback(a, n) * f;
                std::uint64_t bound = 1;
                for (std::uint32_t i = 0; i < n; ++i) bound *= 3;
                for (std::uint64_t j = 1; j < bound; ++j) ASSERT_TRUE(is_zero_section(table.apply(j, s)));
            }
        }
    }
}

TEST(Iso, TrivialModuleGivesIdentity)
{
    const Field k = Field::prime(2);
    const auto m = trivial_dmodule(k, 2, 2);
    const auto e0 = extract_level(m, 0, 1);
    const auto e1 = extract_level(m, 1, 2);
    EXPECT_EQ(verify_fdiv_iso(m, e1, e0), LaurentMatrix::identity(k, 2));
}

TEST(Iso, DiagonalTowerGivesDiagonalIso)
{
    const Field k(2, 2, {1, 1, 1});
    const FieldElement u = k.generator_u();
    const auto a = matrix2(k, LaurentPoly::constant(k, u), LaurentPoly(k), LaurentPoly(k),
                           LaurentPoly::constant(k, k.mul(u, u)));
    const auto m = dmod_from_tower({a, a}, k);
    const auto e0 = extract_level(m, 0, 1);
    const auto e1 = extract_level(m, 1, 2);
    const auto c = verify_fdiv_iso(m, e1, e0);
    EXPECT_TRUE(c(0, 1).is_zero());
    EXPECT_TRUE(c(1, 0).is_zero());
    EXPECT_TRUE(oracle::dmod_roundtrip({a, a}, k, 3).ok);
}

TEST(Iso, NonConsecutiveLevelsRejected)
{
    const Field k = Field::prime(2);
    const auto m = trivial_dmodule(k, 1, 2);
    EXPECT_THROW(verify_fdiv_iso(m, extract_level(m, 2, 4), extract_level(m, 0, 1)), InvalidInput);
}

TEST(Roundtrip, RandomTowers)
{
    gen::Rng rng(109);
    for (int trial = 0; trial < 12; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        const auto rank = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
        const auto length = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto tower = gen::affine_tower(rng, k, rank, length);
        const auto outcome = oracle::dmod_roundtrip(tower, k, 3);
        ASSERT_TRUE(outcome.ok) << outcome.failure;
    }
}

TEST(Witness, Examples)
{
    EXPECT_EQ(h1d_affine_witness(2, 8), 4);
    EXPECT_EQ(h1d_affine_witness(3, 3), 2);
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::int64_t d = 1; d < p; ++d) EXPECT_EQ(h1d_affine_witness(p, d), d);
    EXPECT_THROW(h1d_affine_witness(2, 0), InvalidInput);
}

TEST(Witness, StrictlyIncreasingAlongPowers)
{
    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::int64_t prev = -1;
        std::int64_t d = p;
        for (int j = 1; j <= 3; ++j, d *= p) {
            const auto w = h1d_affine_witness(p, d);
            EXPECT_GT(w, prev);
            EXPECT_EQ(w, d - d / p);
            prev = w;
        }
    }
}

TEST(Json, PresentationRoundTrip)
{
    gen::Rng rng(113);
    const Field k = Field::prime(3);
    const auto m = dmod_from_tower(gen::affine_tower(rng, k, 2, 2), k);
    const auto back = presentation_from_json(json::parse(presentation_to_json(m).dump()));
    EXPECT_EQ(back.rank, m.rank);
    EXPECT_EQ(back.levels, m.levels);
    for (std::size_t i = 0; i < m.actions.size(); ++i) EXPECT_EQ(back.actions[i], m.actions[i]);
}

} // namespace
