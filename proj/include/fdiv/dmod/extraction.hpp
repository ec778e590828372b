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

#ifndef FDIV_DMOD_EXTRACTION_HPP
#define FDIV_DMOD_EXTRACTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fdiv/dmod/presentation.hpp"

namespace frobdiv {

/// Level n of the F-divided tower of a presentation: E_n = {s : D_j(s) = 0, 1 <= j < p^n},
/// a module over k[y], y = x^{p^n}. Scalars act through the twist a . s = a^{p^n} s.
struct ExtractedLevel {
    std::uint32_t n = 0;
    /// Columns are the r free generators, written in the coordinates of k[x]^r.
    LaurentMatrix generators;
    /// Smith invariants over k[y] of the generators in y-coordinates (k[x]^r = k[y]^{r p^n});
    /// all equal to 1 and r in number certifies that they freely span a saturated submodule.
    std::vector<LaurentPoly> smith_invariants;
    /// det(generators) is a nonzero constant: O ⊗ E_n -> E_0 is onto.
    bool spans_module = false;
    /// Degree slice in which the generators were found, and the rank history of the doubling loop.
    std::int64_t degree = 0;
    std::vector<std::pair<std::int64_t, std::size_t>> rank_history;

    bool certified() const;
};

inline constexpr std::int64_t kDefaultDegreeCap = 512;

/// Basis (as columns, coordinate index c * (degree + 1) + i for x^i e_c) of the sections of
/// degree <= degree killed by the generators D_{p^m}, m < n.
Matrix slice_kernel(const ActionTable& table, std::uint32_t n, std::int64_t degree);

/// Sections of k[x]^r in coordinates over k[y], y = x^{p^n}: entry (c p^n + rho) is s_{c,rho}
/// where s_c = sum_rho x^rho s_{c,rho}(x^{p^n}).
std::vector<LaurentPoly> to_twisted_coordinates(const Section& s, std::uint32_t n);
Section from_twisted_coordinates(const std::vector<LaurentPoly>& v, std::size_t rank, std::uint32_t n);

/// Requires n <= levels and degree_bound >= 1. Doubles the slice degree until the span of the
/// slice kernel has rank r over k[y] at two consecutive degrees with a freeness certificate;
/// ExtractionDiverged past degree_cap.
ExtractedLevel extract_level(const DModulePresentation& m, std::uint32_t n, std::int64_t degree_bound,
                             std::int64_t degree_cap = kDefaultDegreeCap);

/// With B_n, B_{n+1} the generators of levels n and n+1, returns c with B_{n+1} = B_n c^{(p^n)},
/// i.e. the isomorphism F*E_{n+1} -> E_n in the chosen bases. IsoFailed if B_n^{-1} B_{n+1} does
/// not have entries in k[x^{p^n}] or is not invertible there.
LaurentMatrix verify_fdiv_iso(const DModulePresentation& m, const ExtractedLevel& upper, const ExtractedLevel& lower);

/// dim k[x]_{<=d} / {f(x^p) : deg f <= d / p}, by rank of the substitution matrix.
std::int64_t h1d_affine_witness(std::uint32_t p, std::int64_t d);

json extracted_level_to_json(const ExtractedLevel& level);

} // namespace frobdiv

#endif // FDIV_DMOD_EXTRACTION_HPP
