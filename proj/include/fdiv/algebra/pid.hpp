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

#ifndef FDIV_ALGEBRA_PID_HPP
#define FDIV_ALGEBRA_PID_HPP

#include <vector>

#include "fdiv/algebra/laurent_matrix.hpp"

namespace frobdiv {

/// Basis of the k[x]-submodule of k[x]^rows spanned by the given columns, by unimodular
/// column operations (column echelon form). Entries must be polynomials.
std::vector<std::vector<LaurentPoly>> module_basis(std::size_t rows, std::vector<std::vector<LaurentPoly>> columns);

/// Nonzero invariant factors of a polynomial matrix over k[x] (Smith normal form), each monic,
/// in divisibility order. Their count is the rank.
std::vector<LaurentPoly> smith_invariants(LaurentMatrix m);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_PID_HPP
