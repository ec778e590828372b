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

#ifndef FDIV_VERIFY_ORACLES_HPP
#define FDIV_VERIFY_ORACLES_HPP

#include <string>
#include <vector>

#include "fdiv/dmod/extraction.hpp"

namespace frobdiv::oracle {

/// Outcome of an independent cross-check; `failure` names the first identity that broke.
struct Outcome {
    bool ok = true;
    std::string failure;
};

/// Full affine roundtrip for a tower A_0..A_{N-1}: the module from dmod_from_tower validates,
/// every level 0..N extracts with a certificate, and each iso from verify_fdiv_iso equals
/// U_n^{-1} A_n U_{n+1}^{(p)}, where U_n is the base change from the columns of P_n to the
/// extracted generators. This is the "up to units" comparison.
Outcome dmod_roundtrip(const std::vector<LaurentMatrix>& tower, const Field& k, std::int64_t test_degree);

} // namespace frobdiv::oracle

#endif // FDIV_VERIFY_ORACLES_HPP
