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

#ifndef FDIV_P1_BUNDLE_HPP
#define FDIV_P1_BUNDLE_HPP

#include <cstdint>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/algebra/laurent_matrix.hpp"

namespace frobdiv {

/// Vector bundle on the projective line glued from the charts Spec k[x] and Spec k[1/x] by an
/// invertible Laurent matrix T. Global sections are the f in k[x]^r with T^{-1} f in k[1/x]^r,
/// so the transition x^a is O(a). Bundles T and U T V with U in GL_r(k[x]) and V in
/// GL_r(k[1/x]) are isomorphic.
struct BundleP1 {
    LaurentMatrix transition;

    /// Throws NotATransitionMatrix unless T is square with determinant c x^m, c != 0.
    explicit BundleP1(LaurentMatrix t);

    const Field& field() const noexcept { return transition.field(); }
    std::size_t rank() const noexcept { return transition.rows(); }

    friend bool operator==(const BundleP1& a, const BundleP1& b) noexcept { return a.transition == b.transition; }
};

/// O(a_1) + ... + O(a_r).
BundleP1 split_bundle(const Field& k, const std::vector<std::int64_t>& exponents);

/// The exponent m of det T = c x^m.
std::int64_t degree(const BundleP1& e);

/// E(t): transition multiplied by x^t.
BundleP1 twist(const BundleP1& e, std::int64_t t);

/// F^{n*}E: transition entries pulled back by x -> x^{p^n} with coefficients raised to p^n.
BundleP1 frobenius_pullback(const BundleP1& e, std::uint32_t n = 1);

/// Splitting type a_1 >= ... >= a_r.
using SplittingType = std::vector<std::int64_t>;

inline constexpr std::int64_t kWindowCap = 1024;

/// Dimension of H^i(E(t)), i in {0, 1}, by linear algebra on the two-chart Cech complex over
/// exponent windows. The window starts at 1 + (entry exponent spread) and doubles until two
/// consecutive doublings leave the dimension unchanged; CohomologyDiverged past window_cap.
std::int64_t cech_h(const BundleP1& e, int i, std::int64_t t, std::int64_t window_cap = kWindowCap);

/// T = U diag(x^{a_1}, ..., x^{a_r}) V with U in GL_r(k[x]) and V in GL_r(k[1/x]).
struct BirkhoffFactorization {
    LaurentMatrix u;
    LaurentMatrix v;
    /// Diagonal exponents in factor order: already sorted descending.
    SplittingType splitting;
    std::size_t steps = 0;
};

inline constexpr std::size_t kBirkhoffStepCap = 100000;

/// Row reduction of T over k[x]: while the leading coefficient vectors of the rows are dependent,
/// the involved row of highest degree (lowest index on ties) absorbs a k[x]-combination of the
/// others and drops in degree. FactorizationFailed past step_cap.
BirkhoffFactorization birkhoff_factor(const BundleP1& e, std::size_t step_cap = kBirkhoffStepCap);
SplittingType birkhoff_split(const BundleP1& e);

/// The splitting read off from h^0(E(t)) - h^0(E(t-1)) = #{i : a_i >= -t}, over a window of t
/// widened until the counts reach 0 and r at its ends; OracleDiverged past window_cap.
SplittingType splitting_from_h0(const BundleP1& e, std::int64_t window_cap = kWindowCap);

/// h^0(E(t)) - h^1(E(t)), both by cech_h.
std::int64_t euler_char(const BundleP1& e, std::int64_t t);

/// Bundle JSON: {"transition": matrix} with an optional "field" (otherwise `k` is used).
json bundle_to_json(const BundleP1& e);
BundleP1 bundle_from_json(const json& j, const Field& k);

} // namespace frobdiv

#endif // FDIV_P1_BUNDLE_HPP
