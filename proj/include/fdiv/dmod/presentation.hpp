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

#ifndef FDIV_DMOD_PRESENTATION_HPP
#define FDIV_DMOD_PRESENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/algebra/laurent_matrix.hpp"

namespace frobdiv {

/// An element of the free module k[x]^r, one polynomial per basis vector.
using Section = std::vector<LaurentPoly>;

/// Free module k[x]^r with an action of the generators D_{p^m}, m < levels.
/// Column c of actions[m] is D_{p^m}(e_c); every other D_j with j < p^levels is determined
/// by the Leibniz rule and the composition relations.
struct DModulePresentation {
    Field field;
    std::size_t rank = 0;
    std::uint32_t levels = 0;
    std::vector<LaurentMatrix> actions;
};

/// O^r with D_j acting coefficientwise (all generator matrices zero).
DModulePresentation trivial_dmodule(const Field& k, std::size_t rank, std::uint32_t levels);

/// Throws InvalidInput when shapes or entries are malformed.
void check_presentation(const DModulePresentation& m);

/// Evaluates divided operators on sections of a presentation.
class ActionTable {
public:
    explicit ActionTable(const DModulePresentation& m);

    const DModulePresentation& presentation() const noexcept { return m_; }
    /// p^levels: every D_j with j below this bound is available.
    std::uint64_t bound() const noexcept { return table_.size(); }

    /// Columns D_j(e_c), built from the generators by D_t = C(t, p^m)^{-1} D_{p^m} D_{t - p^m}
    /// with p^m the leading base-p place of t.
    const LaurentMatrix& basis_action(std::uint64_t j) const;

    /// D_{p^m}(s) by the Leibniz rule.
    Section apply_generator(std::uint32_t m, const Section& s) const;
    /// D_j(s) by the Leibniz rule against basis_action.
    Section apply(std::uint64_t j, const Section& s) const;
    /// D_j(s) as unit^{-1} times the product of generators given by decompose_generator_product.
    Section apply_composed(std::uint64_t j, const Section& s) const;

private:
    DModulePresentation m_;
    std::vector<LaurentMatrix> table_;
};

Section zero_section(const Field& k, std::size_t rank);
Section monomial_section(const Field& k, std::size_t rank, std::size_t c, std::int64_t exponent);
bool is_zero_section(const Section& s);
std::string section_to_string(const Section& s);

struct ValidationReport {
    bool passed = true;
    /// "leibniz", "commutation" or "nilpotence" for the first failure.
    std::string failed_check;
    /// The first violated identity, human readable.
    std::string failure;
    std::size_t checks = 0;
};

inline constexpr std::int64_t kDefaultTestDegree = 4;

/// Checks on x^b e_c, b <= test_degree: (i) Leibniz, D_j(x^a s) = sum_{i+l=j} D_i(x^a) D_l(s) for
/// 1 <= j < p^levels and a <= test_degree with every D_j taken as a product of generators;
/// (ii) the generators commute; (iii) each generator is p-nilpotent.
ValidationReport validate_dmodule(const DModulePresentation& m, std::int64_t test_degree = kDefaultTestDegree);

/// P_n = A_0 A_1^{(p)} ... A_{n-1}^{(p^{n-1})}, where A^{(p^k)} is frobenius_pullback(A, k).
LaurentMatrix cumulative_tower_product(const std::vector<LaurentMatrix>& tower, std::uint32_t n);

/// The presentation with levels = tower.size() whose level-n flat sections are spanned over
/// k[x^{p^n}] by the columns of P_n: the trivial structure transported along G = P_N, so that
/// D_{p^m}(e_c) = G D_{p^m}(G^{-1} e_c). Each A_n must be square polynomial with nonzero
/// constant determinant, otherwise NotATransitionMatrix.
DModulePresentation dmod_from_tower(const std::vector<LaurentMatrix>& tower, const Field& k);

json presentation_to_json(const DModulePresentation& m);
DModulePresentation presentation_from_json(const json& j);
json validation_to_json(const ValidationReport& r);

} // namespace frobdiv

#endif // FDIV_DMOD_PRESENTATION_HPP
