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

#include "fdiv/error.hpp"
#include "fdiv/spectral/spectral.hpp"
#include "fdiv/verify/generators.hpp"

namespace {

using namespace frobdiv;

SpectralPage two_entry_page()
{
    SpectralPage e(2, 1);
    e.set(0, 1, 1);
    e.set(2, 0, 1);
    return e;
}

// Truncated version of the edge correction, summing only 2 <= i <= N.
std::size_t correction_to_n(const SpectralPage& e, std::int64_t n)
{
    std::size_t sum = 0;
    for (std::int64_t i = 2; i <= static_cast<std::int64_t>(e.max_t()); ++i) sum += e.at(n - i, i - 1);
    return sum;
}

std::int64_t euler(const std::vector<std::size_t>& h)
{
    std::int64_t x = 0;
    for (std::size_t n = 0; n < h.size(); ++n) x += (n % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h[n]);
    return x;
}

std::int64_t euler(const SpectralPage& e)
{
    std::int64_t x = 0;
    for (std::size_t s = 0; s <= e.max_s(); ++s) {
        for (std::size_t t = 0; t <= e.max_t(); ++t) x += ((s + t) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(e.at(s, t));
    }
    return x;
}

void expect_lemma_bounds(const Simulation& sim)
{
    const SpectralPage& e2 = sim.pages.front();
    for (std::size_t n = 0; n < sim.abutment.size(); ++n) {
        auto d = static_cast<std::int64_t>(n);
        EXPECT_LE(sim.abutment[n], bound_upper(e2, d));
        EdgeBound b = bound_edge(e2, d, sim.abutment[n]);
        EXPECT_TRUE(b.holds) << simulation_to_json(sim).dump();
        EXPECT_EQ(b.slack, static_cast<std::int64_t>(b.abutment + b.correction) - static_cast<std::int64_t>(b.edge));
    }
}

// Recomputes every successor page from the recorded ranks and checks admissibility.
void expect_consistent(const Simulation& sim)
{
    const SpectralPage& e2 = sim.pages.front();
    ASSERT_EQ(sim.pages.size(), e2.max_t() + 1);
    ASSERT_EQ(sim.ranks.size(), e2.max_t());
    for (std::size_t i = 0; i < sim.ranks.size(); ++i) {
        const std::size_t r = i + 2;
        const SpectralPage& cur = sim.pages[i];
        std::vector<std::vector<std::int64_t>> rest(cur.max_s() + 1, std::vector<std::int64_t>(cur.max_t() + 1));
        for (std::size_t s = 0; s <= cur.max_s(); ++s) {
            for (std::size_t t = 0; t <= cur.max_t(); ++t) rest[s][t] = static_cast<std::int64_t>(cur.at(s, t));
        }
        for (const auto& d : sim.ranks[i]) {
            ASSERT_LE(d.s + r, cur.max_s());
            ASSERT_GE(d.t + 1, r);
            rest[d.s][d.t] -= static_cast<std::int64_t>(d.rank);
            rest[d.s + r][d.t + 1 - r] -= static_cast<std::int64_t>(d.rank);
        }
        for (std::size_t s = 0; s <= cur.max_s(); ++s) {
            for (std::size_t t = 0; t <= cur.max_t(); ++t) {
                EXPECT_GE(rest[s][t], 0);
                EXPECT_EQ(rest[s][t], static_cast<std::int64_t>(sim.pages[i + 1].at(s, t)));
                EXPECT_LE(sim.pages[i + 1].at(s, t), cur.at(s, t));
            }
        }
    }
    for (std::size_t n = 0; n < sim.abutment.size(); ++n) {
        std::size_t sum = 0;
        for (std::size_t s = 0; s <= n; ++s) sum += sim.pages.back().at(static_cast<std::int64_t>(s), static_cast<std::int64_t>(n - s));
        EXPECT_EQ(sim.abutment[n], sum);
    }
}

TEST(Bounds, UpperExamples)
{
    SpectralPage row(4, 0);
    for (std::size_t s = 0; s <= 4; ++s) row.set(s, 0, s + 1);
    for (std::int64_t n = 0; n <= 4; ++n) EXPECT_EQ(bound_upper(row, n), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(bound_upper(two_entry_page(), 1), 1u);
    EXPECT_EQ(bound_upper(SpectralPage(3, 3), 2), 0u);
}

TEST(Bounds, UpperSumsTheWholeAntidiagonal)
{
    gen::Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
        for (std::int64_t n = 0; n <= 10; ++n) EXPECT_EQ(bound_upper(e, n), e.diagonal(n));
    }
}

TEST(Bounds, EdgeExamples)
{
    SpectralPage row(3, 0);
    row.set(2, 0, 3);
    EdgeBound b = bound_edge(row, 2, 3);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.slack, 0);
    EXPECT_FALSE(bound_edge(row, 2, 2).holds);

    EdgeBound two = bound_edge(two_entry_page(), 2, 0);
    EXPECT_TRUE(two.holds);
    EXPECT_EQ(two.edge, 1u);
    EXPECT_EQ(two.correction, 1u);
    EXPECT_EQ(two.slack, 0);

    EdgeBound zero = bound_edge(SpectralPage(2, 2), 1, 5);
    EXPECT_TRUE(zero.holds);
    EXPECT_EQ(zero.slack, 5);
}

TEST(Bounds, TopRowTermIsNeeded)
{
    SpectralPage e = two_entry_page();
    Simulation sim = simulate(e, 0, max_ranks());
    ASSERT_EQ(sim.abutment[2], 0u);
    EXPECT_TRUE(bound_edge(e, 2, sim.abutment[2]).holds);
    // With the sum stopping at i = N the page above violates the inequality.
    EXPECT_GT(e.at(2, 0), sim.abutment[2] + correction_to_n(e, 2));
}

TEST(Simulate, ZeroRanksDegenerateAtE2)
{
    gen::Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
        Simulation sim = simulate(e, 99, zero_ranks());
        for (std::size_t n = 0; n < sim.abutment.size(); ++n) {
            EXPECT_EQ(sim.abutment[n], e.diagonal(static_cast<std::int64_t>(n)));
        }
        EXPECT_EQ(sim.pages.back(), e);
    }
}

TEST(Simulate, SingleCancellation)
{
    Simulation sim = simulate(two_entry_page(), 5, max_ranks());
    EXPECT_EQ(sim.abutment, (std::vector<std::size_t>{0, 0, 0, 0}));
    ASSERT_EQ(sim.ranks.size(), 1u);
    ASSERT_EQ(sim.ranks[0].size(), 1u);
    EXPECT_EQ(sim.ranks[0][0].rank, 1u);
}

TEST(Simulate, SingleRowHasNoDifferentials)
{
    SpectralPage row(5, 0);
    for (std::size_t s = 0; s <= 5; ++s) row.set(s, 0, (s * 7) % 5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Simulation sim = simulate(row, seed);
        for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(sim.abutment[n], row.at(static_cast<std::int64_t>(n), 0));
        EXPECT_TRUE(sim.ranks.empty());
    }
}

TEST(Simulate, DeterministicPerSeed)
{
    gen::Rng rng(3);
    SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
    EXPECT_EQ(simulation_to_json(simulate(e, 42)), simulation_to_json(simulate(e, 42)));
}

TEST(Simulate, RejectsInadmissiblePolicy)
{
    RankPolicy greedy = [](const Differential& d, Rng&) { return d.max_rank + 1; };
    EXPECT_THROW(simulate(two_entry_page(), 0, greedy), InvalidInput);
}

TEST(Properties, ThousandSimulations)
{
    gen::Rng rng(4);
    std::size_t nonzero_differentials = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
        Simulation sim = simulate(e, rng());
        expect_consistent(sim);
        expect_lemma_bounds(sim);
        EXPECT_EQ(euler(sim.abutment), euler(e));
        for (const auto& page : sim.ranks) {
            for (const auto& d : page) nonzero_differentials += d.rank > 0;
        }
    }
    EXPECT_GT(nonzero_differentials, 1000u);
}

// Every admissible rank sequence on small pages, driven through the policy hook as an odometer.
TEST(Properties, ExhaustiveOnSmallPages)
{
    gen::Rng rng(5);
    std::size_t runs = 0;
    for (int trial = 0; trial < 40; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 3, 2, 2);
        std::vector<std::size_t> prefix;
        for (;;) {
            std::vector<std::size_t> taken;
            std::vector<std::size_t> limits;
            RankPolicy scripted = [&](const Differential& d, Rng&) {
                std::size_t k = taken.size() < prefix.size() ? prefix[taken.size()] : 0;
                taken.push_back(k);
                limits.push_back(d.max_rank);
                return k;
            };
            Simulation sim = simulate(e, 0, scripted);
            ++runs;
            expect_consistent(sim);
            expect_lemma_bounds(sim);
            EXPECT_EQ(euler(sim.abutment), euler(e));
            // Advance to the next rank sequence in lexicographic order.
            prefix = taken;
            while (!prefix.empty() && prefix.back() == limits[prefix.size() - 1]) prefix.pop_back();
            if (prefix.empty()) break;
            ++prefix.back();
        }
    }
    EXPECT_GT(runs, 40u);
}

TEST(Json, RoundTripAndErrors)
{
    gen::Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
        EXPECT_EQ(page_from_json(page_to_json(e)), e);
    }
    SpectralPage e = page_from_json(json::parse(R"({"M":2,"N":1,"dims":{"0,1":1,"2,0":1}})"));
    EXPECT_EQ(e, two_entry_page());
    EXPECT_THROW(page_from_json(json::parse(R"({"M":1,"N":1,"dims":{"2,0":1}})")), InvalidInput);
    EXPECT_THROW(page_from_json(json::parse(R"({"M":1,"N":1,"dims":{"0;0":1}})")), InvalidInput);
    EXPECT_THROW(page_from_json(json::parse(R"({"M":1,"N":1,"dims":{"0,-1":1}})")), InvalidInput);
    EXPECT_THROW(page_from_json(json::parse(R"({"M":1,"N":1,"dims":{"0,0":-1}})")), InvalidInput);
    EXPECT_THROW(page_from_json(json::parse(R"({"N":1})")), InvalidInput);
}

} // namespace
