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

#include "fdiv/verify/oracles.hpp"

#include "fdiv/error.hpp"

namespace frobdiv::oracle {

namespace {

std::int64_t start_degree(std::uint32_t p, std::uint32_t n)
{
    std::int64_t d = 1;
    for (std::uint32_t i = 0; i < n; ++i) d *= p;
    return d;
}

} // namespace

Outcome dmod_roundtrip(const std::vector<LaurentMatrix>& tower, const Field& k, std::int64_t test_degree)
{
    Outcome out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.failure = std::move(what);
        return out;
    };
    const DModulePresentation m = dmod_from_tower(tower, k);
    const ValidationReport report = validate_dmodule(m, test_degree);
    if (!report.passed) return fail("validate_dmodule: " + report.failure);

    const auto big_n = static_cast<std::uint32_t>(tower.size());
    std::vector<ExtractedLevel> levels;
    std::vector<LaurentMatrix> units;
    for (std::uint32_t n = 0; n <= big_n; ++n) {
        levels.push_back(extract_level(m, n, start_degree(k.characteristic(), n)));
        if (!levels.back().certified()) return fail("level " + std::to_string(n) + " lacks a freeness certificate");
        const LaurentMatrix base = polynomial_matrix_inverse(cumulative_tower_product(tower, n)) * levels.back().generators;
        LaurentMatrix u(k, m.rank, m.rank);
        try {
            u = frobenius_descend(base, n);
        } catch (const InvalidInput&) {
            return fail("level " + std::to_string(n) + " generators do not span the columns of P_n over k[x^{p^n}]");
        }
        const LaurentPoly det = determinant(u);
        if (det.is_zero() || !det.is_constant() || !u.is_polynomial())
            return fail("level " + std::to_string(n) + " generators differ from P_n by a non-unit");
        units.push_back(std::move(u));
    }
    for (std::uint32_t n = 0; n < big_n; ++n) {
        const LaurentMatrix c = verify_fdiv_iso(m, levels[n + 1], levels[n]);
        const LaurentMatrix expected =
            polynomial_matrix_inverse(units[n]) * tower[n] * frobenius_pullback(units[n + 1], 1);
        if (!(c == expected)) return fail("iso at level " + std::to_string(n) + " differs from the input tower matrix");
    }
    return out;
}

} // namespace frobdiv::oracle
