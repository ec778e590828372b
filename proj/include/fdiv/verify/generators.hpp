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

#ifndef FDIV_VERIFY_GENERATORS_HPP
#define FDIV_VERIFY_GENERATORS_HPP

#include <cstdint>

#include "fdiv/algebra/laurent_matrix.hpp"
#include "fdiv/p1/tower.hpp"
#include "fdiv/random.hpp"
#include "fdiv/spectral/spectral.hpp"
#include "fdiv/towers/twisted.hpp"

namespace frobdiv::gen {

using frobdiv::Rng;

/// Same as frobdiv::uniform_int.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

FieldElement element(Rng& rng, const Field& k);
FieldElement nonzero_element(Rng& rng, const Field& k);

/// Random Laurent polynomial with exponents in [lo, hi] (dense random coefficients).
LaurentPoly laurent(Rng& rng, const Field& k, std::int64_t lo, std::int64_t hi);
LaurentPoly polynomial(Rng& rng, const Field& k, std::int64_t max_degree);

Matrix matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols);
Matrix invertible_matrix(Rng& rng, const Field& k, std::size_t n);

/// Invertible Laurent matrix (determinant c x^m) with every entry exponent in [lo, hi],
/// built from a random monomial diagonal by random elementary row and column operations.
LaurentMatrix transition_matrix(Rng& rng, const Field& k, std::size_t rank, std::int64_t lo, std::int64_t hi);

/// Matrix in GL_r(k[x]) (determinant a nonzero constant) with entry degrees at most max_degree.
LaurentMatrix unimodular_matrix(Rng& rng, const Field& k, std::size_t rank, std::int64_t max_degree);

/// Affine F-divided tower A_0, ..., A_{length-1} of GL_r(k[x]) matrices, entry degrees at most 2
/// in characteristic 2 and 1 otherwise.
std::vector<LaurentMatrix> affine_tower(Rng& rng, const Field& k, std::size_t rank, std::size_t length);

/// x -> 1/x on every entry; maps GL_r(k[x]) onto GL_r(k[1/x]).
LaurentMatrix invert_variable(const LaurentMatrix& m);

/// Periodic tower of the given period: random constant isos C_i and constant transitions
/// T_i = C_i Frob(T_{i+1}) C_i^{-1}, closed up by T_0 = K^j for K = C_0 Frob(C_1) ... Frob^{m-1}(C_{m-1})
/// when Frobenius^m is the identity on k, and T_0 = 1 otherwise.
FdivTowerP1 periodic_tower(Rng& rng, const Field& k, std::size_t rank, std::size_t period);

/// rows x cols matrix of rank min(r, rows, cols): product of random rows x r and r x cols factors,
/// retried until the rank is exact.
Matrix matrix_of_rank(Rng& rng, const Field& k, std::size_t rows, std::size_t cols, std::size_t r);

/// Random truncated or periodic twisted tower with level dimensions in [0, max_dim], at most
/// max_length listed levels, random map ranks and twists in [-2, 2].
TwistedTower twisted_tower(Rng& rng, const Field& k, std::size_t max_dim, std::size_t max_length);

/// First-quadrant page with M in [0, max_m], N in [0, max_n] and entries in [0, max_entry].
SpectralPage spectral_page(Rng& rng, std::size_t max_m, std::size_t max_n, std::size_t max_entry);

} // namespace frobdiv::gen

#endif // FDIV_VERIFY_GENERATORS_HPP
