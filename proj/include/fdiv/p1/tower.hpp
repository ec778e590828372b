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

#ifndef FDIV_P1_TOWER_HPP
#define FDIV_P1_TOWER_HPP

#include <string>
#include <vector>

#include "fdiv/p1/bundle.hpp"

namespace frobdiv {

/// An F-divided bundle on the projective line in one of two finite descriptions.
/// Truncated: E_0, ..., E_N with E_n = F*E_{n+1} literally.
/// Periodic: B_0, ..., B_{m-1} repeating forever, with constant isomorphisms
/// C_i : F*B_{i+1 mod m} -> B_i, meaning C_i T_{i+1}^{(p)} = T_i C_i.
struct FdivTowerP1 {
    enum class Kind { truncated, periodic };
    Kind kind = Kind::truncated;
    std::vector<BundleP1> bundles;
    std::vector<Matrix> isos;

    std::size_t rank() const { return bundles.front().rank(); }
    const Field& field() const { return bundles.front().field(); }
};

/// E_0, ..., E_N from the top bundle E_N by repeated Frobenius pullback.
FdivTowerP1 pullback_tower(const BundleP1& top, std::uint32_t length);

/// Throws InvalidTower unless E_n == F*E_{n+1} for every n.
FdivTowerP1 truncated_tower(std::vector<BundleP1> bundles);

/// Throws InvalidTower for a bundle of nonzero degree (checked first), a singular or misshapen
/// iso, or an iso that fails C_i T_{i+1}^{(p)} = T_i C_i.
FdivTowerP1 periodic_tower(std::vector<BundleP1> bundles, std::vector<Matrix> isos);

/// Outcome of a tower check; `values` carries the per-level numbers the check looked at.
struct TowerReport {
    bool passed = true;
    std::string failure;
    std::vector<std::int64_t> values;
    json details = json::object();
};

/// h^0(E_0) >= h^0(E_1) >= ...; for periodic towers over one period, where all values must agree.
TowerReport check_h0_decreasing(const FdivTowerP1& tower);

/// Truncated: deg E_n = p deg E_{n+1} at every step, so p^N | deg E_0. Periodic: every degree
/// is 0, otherwise InvalidTower.
TowerReport check_numerical_triviality(const FdivTowerP1& tower);

/// Truncated: p^N divides every splitting exponent of E_0. Periodic: every B_i splits as
/// (0, ..., 0); the Birkhoff factors T_i = U_i V_i are returned in details. InvalidTower on violation.
TowerReport fdiv_rigidity(const FdivTowerP1& tower);

/// {"kind": "truncated"|"periodic", "bundles": [...], "isos": [...]}.
json tower_to_json(const FdivTowerP1& tower);
FdivTowerP1 tower_from_json(const json& j, const Field& k);

} // namespace frobdiv

#endif // FDIV_P1_TOWER_HPP
