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

#include "fdiv/dcoh/cohomology.hpp"

#include <algorithm>
#include <utility>

#include "fdiv/dmod/extraction.hpp"
#include "fdiv/error.hpp"

namespace frobdiv {

std::string provenance_name(CohomologyTowerSet::Provenance p)
{
    switch (p) {
    case CohomologyTowerSet::Provenance::p1_tower: return "p1-tower";
    case CohomologyTowerSet::Provenance::affine_truncation: return "affine-truncation";
    case CohomologyTowerSet::Provenance::user_supplied: return "user-supplied";
    }
    return "user-supplied";
}

namespace {

struct LevelCoordinates {
    LaurentMatrix u_inverse;
    LaurentMatrix u;
    SplittingType a;
};

LevelCoordinates coordinates(const BundleP1& e)
{
    BirkhoffFactorization f = birkhoff_factor(e);
    return {polynomial_matrix_inverse(f.u), f.u, f.splitting};
}

// (c, j) pairs indexing the basis sections U x^j e_c of H^degree.
std::vector<std::pair<std::size_t, std::int64_t>> basis_index(const SplittingType& a, int degree)
{
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (degree == 0) {
            for (std::int64_t j = 0; j <= a[c]; ++j) out.emplace_back(c, j);
        } else {
            for (std::int64_t j = a[c] + 1; j < 0; ++j) out.emplace_back(c, j);
        }
    }
    return out;
}

SemilinearMap cohomology_map(const LevelCoordinates& upper, const LevelCoordinates& lower, const Matrix& iso, int degree)
{
    const Field& k = iso.field();
    auto source = basis_index(upper.a, degree);
    auto target = basis_index(lower.a, degree);
    LaurentMatrix c = LaurentMatrix::from_constant(iso);
    Matrix m(k, target.size(), source.size());
    for (std::size_t b = 0; b < source.size(); ++b) {
        auto [col, j] = source[b];
        std::vector<LaurentPoly> section = upper.u.column(col);
        for (auto& f : section) f = frobenius_pullback(f.shifted(j), 1);
        std::vector<LaurentPoly> g = lower.u_inverse.apply(c.apply(section));
        for (std::size_t q = 0; q < target.size(); ++q) m(q, b) = g[target[q].first].coeff(target[q].second);
        if (degree == 0) {
            for (std::size_t row = 0; row < g.size(); ++row) {
                if (g[row].is_zero()) continue;
                if (*g[row].min_exponent() < 0 || *g[row].max_exponent() > lower.a[row]) {
                    throw InvalidTower("pulled-back global section is not global on the level below");
                }
            }
        }
    }
    return {m, 1};
}

} // namespace

CohomologyTowerSet build_towers_p1(const FdivTowerP1& tower)
{
    fdiv_rigidity(tower);
    const Field& k = tower.field();
    std::vector<LevelCoordinates> levels;
    for (const auto& b : tower.bundles) levels.push_back(coordinates(b));
    const bool periodic = tower.kind == FdivTowerP1::Kind::periodic;
    const std::size_t count = levels.size();
    const std::size_t nmaps = periodic ? count : count - 1;

    CohomologyTowerSet out;
    out.provenance = CohomologyTowerSet::Provenance::p1_tower;
    for (int degree = 0; degree <= 1; ++degree) {
        std::vector<std::size_t> dims;
        for (const auto& l : levels) dims.push_back(basis_index(l.a, degree).size());
        std::vector<SemilinearMap> maps;
        for (std::size_t n = 0; n < nmaps; ++n) {
            Matrix iso = periodic ? tower.isos[n] : Matrix::identity(k, tower.rank());
            maps.push_back(cohomology_map(levels[(n + 1) % count], levels[n], iso, degree));
        }
        out.towers.push_back(periodic ? TwistedTower::periodic(k, dims, maps, 0) : TwistedTower::truncated(k, dims, maps));
    }
    return out;
}

std::vector<DegreeDims> dcoh_dims(const CohomologyTowerSet& towers, std::size_t cap)
{
    std::vector<DegreeDims> out;
    for (std::size_t i = 0; i <= cap; ++i) {
        DegreeDims d;
        d.degree = i;
        if (i < towers.towers.size()) {
            LimitDim l = lim_dim(towers.towers[i]);
            d.lim = l.dim;
            d.exact = l.exact;
        }
        if (i > 0 && i - 1 < towers.towers.size()) {
            const TwistedTower& below = towers.towers[i - 1];
            d.r1lim = r1lim_dim(below).dim;
            d.exact = d.exact && below.kind() == TwistedTower::Kind::periodic;
        }
        d.dim = d.r1lim + d.lim;
        out.push_back(d);
    }
    return out;
}

json degree_dims_to_json(const DegreeDims& d)
{
    return {{"degree", d.degree}, {"lim", d.lim}, {"r1lim", d.r1lim}, {"dim", d.dim}, {"exact", d.exact}};
}

json finiteness_report(const FdivTowerP1& tower, std::size_t cap)
{
    CohomologyTowerSet set = build_towers_p1(tower);
    json degrees = json::array();
    for (const auto& d : dcoh_dims(set, cap)) degrees.push_back(degree_dims_to_json(d));
    json certificates = json::array();
    for (std::size_t i = 0; i < set.towers.size(); ++i) {
        json c = ml_report_to_json(check_ml(set.towers[i]));
        c["degree"] = i;
        certificates.push_back(c);
    }
    return {{"input", "projective-line"},
            {"kind", tower.kind == FdivTowerP1::Kind::periodic ? "periodic" : "truncated"},
            {"rank", tower.rank()},
            {"finite", true},
            {"degrees", degrees},
            {"certificates", certificates}};
}

AffineReport affine_report(const DModulePresentation& m, const std::vector<std::int64_t>& truncations)
{
    if (truncations.empty()) throw InvalidInput("no truncation degrees given");
    ActionTable table(m);
    AffineReport r;
    r.resolved_through = static_cast<std::int64_t>(table.bound()) - 1;
    for (std::int64_t d : truncations) {
        if (d < 0) throw InvalidInput("truncation degrees must be non-negative");
        AffineTruncation t;
        t.degree = d;
        t.h0 = slice_kernel(table, m.levels, d).cols();
        if (m.levels >= 1) t.witness = slice_kernel(table, 0, d).cols() - slice_kernel(table, 1, d).cols();
        r.ladder.push_back(t);
    }
    r.h0_stable = true;
    r.growth_observed = r.ladder.size() >= 2;
    for (std::size_t i = 1; i < r.ladder.size(); ++i) {
        if (r.ladder[i].h0 != r.ladder[0].h0) r.h0_stable = false;
        if (r.ladder[i].witness <= r.ladder[i - 1].witness) r.growth_observed = false;
    }
    return r;
}

json finiteness_report(const DModulePresentation& m, const std::vector<std::int64_t>& truncations)
{
    AffineReport r = affine_report(m, truncations);
    json h0 = json::array();
    json witnesses = json::array();
    std::int64_t top = 0;
    for (const auto& t : r.ladder) {
        h0.push_back({{"degree", t.degree}, {"dim", t.h0}});
        witnesses.push_back({{"degree", t.degree}, {"witness", t.witness}});
        top = std::max(top, t.degree);
    }
    json out = {{"input", "affine-line"},
                {"rank", m.rank},
                {"levels", m.levels},
                {"resolved_through_degree", r.resolved_through},
                {"h0", {{"truncations", h0}, {"stable", r.h0_stable}}},
                {"degree1",
                 {{"witnesses", witnesses},
                  {"label", std::string("lower-bound witnesses, ") +
                                (r.growth_observed ? "unbounded growth observed" : "no growth observed") +
                                " through degree " + std::to_string(top)}}}};
    if (r.h0_stable) out["h0"]["dim"] = r.ladder.front().h0;
    return out;
}

json tower_set_to_json(const CohomologyTowerSet& s)
{
    json towers = json::array();
    for (const auto& t : s.towers) towers.push_back(twisted_tower_to_json(t));
    return {{"provenance", provenance_name(s.provenance)}, {"towers", towers}};
}

CohomologyTowerSet tower_set_from_json(const json& j, const Field& k)
{
    const json* list = &j;
    CohomologyTowerSet s;
    if (j.is_object()) {
        if (!j.contains("towers")) throw InvalidInput("tower set needs a \"towers\" array");
        list = &j["towers"];
        std::string p = j.value("provenance", std::string("user-supplied"));
        if (p == "p1-tower") {
            s.provenance = CohomologyTowerSet::Provenance::p1_tower;
        } else if (p == "affine-truncation") {
            s.provenance = CohomologyTowerSet::Provenance::affine_truncation;
        } else if (p != "user-supplied") {
            throw InvalidInput("unknown provenance \"" + p + "\"");
        }
    }
    if (!list->is_array()) throw InvalidInput("tower set must be an array of towers, one per degree");
    for (const auto& t : *list) s.towers.push_back(twisted_tower_from_json(t, k));
    return s;
}

} // namespace frobdiv
