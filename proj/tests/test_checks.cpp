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

#include <set>

#include "fdiv/error.hpp"
#include "fdiv/verify/checks.hpp"

namespace {

using namespace frobdiv;
using verify::CheckConfig;

TEST(Checks, TwelveCriteriaWithDistinctNames)
{
    const auto& defs = verify::checks();
    ASSERT_EQ(defs.size(), 12u);
    std::set<std::string> names;
    for (std::size_t i = 0; i < defs.size(); ++i) {
        EXPECT_EQ(defs[i].criterion, static_cast<int>(i) + 1);
        EXPECT_FALSE(defs[i].statement.empty());
        names.insert(defs[i].name);
    }
    EXPECT_EQ(names.size(), 12u);
}

TEST(Checks, CorruptedRelationTableFails)
{
    CheckConfig cfg;
    cfg.corrupt_relations = true;
    const auto results = verify::run_checks(cfg, {"operator-relations"});
    ASSERT_EQ(results.size(), 1u);
    EXPECT_FALSE(results[0].passed);
    EXPECT_NE(results[0].failure.find("D_3 D_5"), std::string::npos);
}

TEST(Checks, OnlyFiltersAndSortsByName)
{
    const auto results = verify::run_checks(CheckConfig{}, {"rigidity", "lucas"});
    ASSERT_EQ(results.size(), 2u);
    EXPECT_EQ(results[0].name, "lucas");
    EXPECT_EQ(results[1].name, "rigidity");
    EXPECT_TRUE(results[0].passed);
    EXPECT_TRUE(results[1].passed);
}

TEST(Checks, UnknownNameRejected)
{
    EXPECT_THROW(verify::run_checks(CheckConfig{}, {"no-such-check"}), InvalidInput);
}

TEST(Checks, SeedChangesInputsButNotVerdicts)
{
    CheckConfig a;
    CheckConfig b;
    b.seed = 7;
    const auto ra = verify::run_checks(a, {"splitting-oracle", "inverse-limit-bound"});
    const auto rb = verify::run_checks(b, {"splitting-oracle", "inverse-limit-bound"});
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_TRUE(ra[i].passed) << ra[i].failure;
        EXPECT_TRUE(rb[i].passed) << rb[i].failure;
        EXPECT_NE(ra[i].digest, rb[i].digest);
    }
}

TEST(Checks, ReportIsReproducible)
{
    const CheckConfig cfg;
    const auto first = verify::report_to_json(cfg, verify::run_checks(cfg, {"h0-monotone", "spectral-bounds"}));
    const auto second = verify::report_to_json(cfg, verify::run_checks(cfg, {"h0-monotone", "spectral-bounds"}));
    EXPECT_EQ(first.dump(), second.dump());
    EXPECT_EQ(first["seed"], 42);
}

} // namespace
