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

#ifndef FDIV_DCOH_COHOMOLOGY_HPP
#define FDIV_DCOH_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "fdiv/dmod/presentation.hpp"
#include "fdiv/p1/tower.hpp"
#include "fdiv/towers/twisted.hpp"

namespace frobdiv {

/// One twisted tower per cohomology degree 0, 1, ..., standing for {H^i(X, E_n) twisted by F^n}.
struct CohomologyTowerSet {
    enum class Provenance { p1_tower, affine_truncation, user_supplied };
    Provenance provenance = Provenance::user_supplied;
    std::vector<TwistedTower> towers;
};

std::string provenance_name(CohomologyTowerSet::Provenance p);

/// Coordinates of H^i(E_n) come from the Birkhoff factor T_n = U_n diag(x^a) V_n: H^0 has basis
/// U_n x^j e_c (0 <= j <= a_c), H^1 has basis the classes of U_n x^j e_c (a_c < j < 0). The map
/// from level n+1 is Frobenius pullback followed by the iso C_n (the identity for truncated
/// towers), so it is semilinear with twist 1; for trivial levels it is v -> U_n^{-1} C_n U_{n+1}^{(p)} Frob(v).
/// Runs fdiv_rigidity first; InvalidTower propagates.
CohomologyTowerSet build_towers_p1(const FdivTowerP1& tower);

struct DegreeDims {
    std::size_t degree = 0;
    std::size_t lim = 0;
    std::size_t r1lim = 0;
    std::size_t dim = 0;
    bool exact = true;
};

/// dim H^i_D = dim R^1lim H^{i-1} + dim lim H^i for i = 0..cap; towers missing above the set are zero.
/// R^1lim is certified 0 by check_ml.
std::vector<DegreeDims> dcoh_dims(const CohomologyTowerSet& towers, std::size_t cap = 2);

/// Projective-line finiteness: the dimensions together with the Mittag-Leffler certificate of each tower.
json finiteness_report(const FdivTowerP1& tower, std::size_t cap = 2);

struct AffineTruncation {
    std::int64_t degree = 0;
    /// dim of sections of degree <= d killed by every D_j, 1 <= j < p^L.
    std::size_t h0 = 0;
    /// dim E_0 slice - dim E_1 slice in degree <= d: the cokernel of the level-1 transition.
    std::size_t witness = 0;
};

struct AffineReport {
    std::vector<AffineTruncation> ladder;
    /// Kernels agree at every truncation.
    bool h0_stable = false;
    /// Largest degree the presentation resolves: a section of degree >= p^L can be killed by
    /// every available D_j without being horizontal.
    std::int64_t resolved_through = 0;
    /// Witnesses strictly increase along the ladder.
    bool growth_observed = false;
};

/// Affine-line side: horizontal sections by stabilized truncated kernels, degree one by witness growth.
AffineReport affine_report(const DModulePresentation& m, const std::vector<std::int64_t>& truncations);
json finiteness_report(const DModulePresentation& m, const std::vector<std::int64_t>& truncations);

/// {"provenance": ..., "towers": [tower json, ...]}.
json tower_set_to_json(const CohomologyTowerSet& s);
CohomologyTowerSet tower_set_from_json(const json& j, const Field& k);
json degree_dims_to_json(const DegreeDims& d);

} // namespace frobdiv

#endif // FDIV_DCOH_COHOMOLOGY_HPP
