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

#include "fdiv/p1/tower.hpp"

#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

std::int64_t ipow(std::int64_t p, std::size_t n)
{
    std::int64_t out = 1;
    for (std::size_t i = 0; i < n; ++i) out *= p;
    return out;
}

void require_nonempty(const std::vector<BundleP1>& bundles)
{
    if (bundles.empty()) throw InvalidTower("a tower needs at least one bundle");
    for (const auto& b : bundles) {
        if (b.rank() != bundles.front().rank()) throw InvalidTower("bundles of a tower must have equal rank");
        if (!(b.field() == bundles.front().field())) throw InvalidTower("bundles of a tower must share a field");
    }
}

} // namespace

FdivTowerP1 pullback_tower(const BundleP1& top, std::uint32_t length)
{
    std::vector<BundleP1> bundles(length + 1, top);
    for (std::uint32_t n = length; n-- > 0;) bundles[n] = frobenius_pullback(bundles[n + 1]);
    return truncated_tower(std::move(bundles));
}

FdivTowerP1 truncated_tower(std::vector<BundleP1> bundles)
{
    require_nonempty(bundles);
    for (std::size_t n = 0; n + 1 < bundles.size(); ++n)
        if (!(bundles[n] == frobenius_pullback(bundles[n + 1])))
            throw InvalidTower("E_" + std::to_string(n) + " is not the Frobenius pullback of E_" + std::to_string(n + 1));
    return FdivTowerP1{FdivTowerP1::Kind::truncated, std::move(bundles), {}};
}

FdivTowerP1 periodic_tower(std::vector<BundleP1> bundles, std::vector<Matrix> isos)
{
    require_nonempty(bundles);
    const std::int64_t p = bundles.front().field().characteristic();
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        const std::int64_t d = degree(bundles[i]);
        if (d != 0)
            throw InvalidTower("B_" + std::to_string(i) + " has degree " + std::to_string(d) +
                               ", but F-divided bundles are divisible by every power of p (" + std::to_string(d) +
                               " != " + std::to_string(p) + " * " + std::to_string(d) + ")");
    }
    if (isos.size() != bundles.size()) throw InvalidTower("a periodic tower needs one iso per bundle");
    const std::size_t m = bundles.size();
    const std::size_t r = bundles.front().rank();
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix& c = isos[i];
        if (c.rows() != r || c.cols() != r || !inverse(c)) throw InvalidTower("iso C_" + std::to_string(i) + " is not invertible");
        const LaurentMatrix lc = LaurentMatrix::from_constant(c);
        if (!(lc * frobenius_pullback(bundles[(i + 1) % m].transition, 1) == bundles[i].transition * lc))
            throw InvalidTower("C_" + std::to_string(i) + " is not an isomorphism F*B_" + std::to_string((i + 1) % m) +
                               " -> B_" + std::to_string(i));
    }
    return FdivTowerP1{FdivTowerP1::Kind::periodic, std::move(bundles), std::move(isos)};
}

TowerReport check_h0_decreasing(const FdivTowerP1& tower)
{
    TowerReport report;
    for (const auto& b : tower.bundles) report.values.push_back(cech_h(b, 0, 0));
    for (std::size_t n = 0; n + 1 < report.values.size(); ++n) {
        const bool ok = tower.kind == FdivTowerP1::Kind::periodic ? report.values[n] == report.values[n + 1]
                                                                  : report.values[n] >= report.values[n + 1];
        if (!ok) {
            report.passed = false;
            report.failure = "h0(E_" + std::to_string(n) + ") = " + std::to_string(report.values[n]) + " vs h0(E_" +
                             std::to_string(n + 1) + ") = " + std::to_string(report.values[n + 1]);
            break;
        }
    }
    return report;
}

TowerReport check_numerical_triviality(const FdivTowerP1& tower)
{
    TowerReport report;
    const std::int64_t p = tower.field().characteristic();
    for (const auto& b : tower.bundles) report.values.push_back(degree(b));
    if (tower.kind == FdivTowerP1::Kind::periodic) {
        for (std::size_t i = 0; i < report.values.size(); ++i)
            if (report.values[i] != 0)
                throw InvalidTower("periodic tower level " + std::to_string(i) + " has degree " +
                                   std::to_string(report.values[i]));
        return report;
    }
    for (std::size_t n = 0; n + 1 < report.values.size(); ++n)
        if (report.values[n] != p * report.values[n + 1]) {
            report.passed = false;
            report.failure = "deg E_" + std::to_string(n) + " = " + std::to_string(report.values[n]) + " != p * deg E_" +
                             std::to_string(n + 1) + " = " + std::to_string(p * report.values[n + 1]);
            return report;
        }
    const std::int64_t q = ipow(p, tower.bundles.size() - 1);
    report.details["divisor"] = q;
    if (report.values.front() % q != 0) {
        report.passed = false;
        report.failure = "p^N = " + std::to_string(q) + " does not divide deg E_0 = " + std::to_string(report.values.front());
    }
    return report;
}

TowerReport fdiv_rigidity(const FdivTowerP1& tower)
{
    TowerReport report;
    if (tower.kind == FdivTowerP1::Kind::truncated) {
        const std::int64_t q = ipow(tower.field().characteristic(), tower.bundles.size() - 1);
        const SplittingType split = birkhoff_split(tower.bundles.front());
        report.values = split;
        report.details["divisor"] = q;
        for (const std::int64_t a : split)
            if (a % q != 0)
                throw InvalidTower("splitting exponent " + std::to_string(a) + " of E_0 is not divisible by " +
                                   std::to_string(q));
        return report;
    }
    json factors = json::array();
    for (std::size_t i = 0; i < tower.bundles.size(); ++i) {
        const BirkhoffFactorization f = birkhoff_factor(tower.bundles[i]);
        for (const std::int64_t a : f.splitting)
            if (a != 0)
                throw InvalidTower("periodic level " + std::to_string(i) + " is not trivial: splitting exponent " +
                                   std::to_string(a));
        report.values.insert(report.values.end(), f.splitting.begin(), f.splitting.end());
        factors.push_back({{"u", laurent_matrix_to_json(f.u)}, {"v", laurent_matrix_to_json(f.v)}});
    }
    report.details["trivializations"] = factors;
    return report;
}

json tower_to_json(const FdivTowerP1& tower)
{
    json bundles = json::array();
    for (const auto& b : tower.bundles) bundles.push_back(laurent_matrix_to_json(b.transition));
    json out = {{"kind", tower.kind == FdivTowerP1::Kind::periodic ? "periodic" : "truncated"},
                {"field", field_to_json(tower.field())},
                {"bundles", bundles}};
    if (tower.kind == FdivTowerP1::Kind::periodic) {
        json isos = json::array();
        for (const auto& c : tower.isos) isos.push_back(matrix_to_json(c));
        out["isos"] = isos;
    }
    return out;
}

FdivTowerP1 tower_from_json(const json& j, const Field& k)
{
    if (!j.is_object() || !j.contains("kind") || !j.contains("bundles"))
        throw InvalidInput("tower must be an object with \"kind\" and \"bundles\"");
    const Field field = j.contains("field") ? field_from_json(j.at("field")) : k;
    std::vector<BundleP1> bundles;
    for (const auto& b : j.at("bundles")) bundles.push_back(bundle_from_json(b, field));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "truncated") return truncated_tower(std::move(bundles));
    if (kind != "periodic") throw InvalidInput("tower kind must be \"truncated\" or \"periodic\"");
    if (!j.contains("isos")) throw InvalidInput("periodic tower needs \"isos\"");
    std::vector<Matrix> isos;
    const std::size_t r = bundles.empty() ? 0 : bundles.front().rank();
    for (const auto& c : j.at("isos")) isos.push_back(matrix_from_json(field, c, r, r));
    return periodic_tower(std::move(bundles), std::move(isos));
}

} // namespace frobdiv
