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

#ifndef FDIV_ALGEBRA_JSON_CODEC_HPP
#define FDIV_ALGEBRA_JSON_CODEC_HPP

#include "json.hpp"

#include "fdiv/algebra/laurent_matrix.hpp"
#include "fdiv/algebra/matrix.hpp"

namespace frobdiv {

using json = nlohmann::json;

// Encodings shared by every module and the command-line tool:
//   field            {"p":2,"e":2,"modulus":[1,1,1]}
//   field element    coordinate list [c0, c1, ...]; a bare integer is accepted on input
//   Laurent poly     {"exp": element} with string integer keys
//   matrices         row-major nested lists

json field_to_json(const Field& k);
Field field_from_json(const json& j);

json element_to_json(const Field& k, FieldElement x);
FieldElement element_from_json(const Field& k, const json& j);

json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Field& k, const json& j);

json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Field& k, const json& j);

json matrix_to_json(const Matrix& m);
/// `rows` is needed to decode matrices with zero columns ([[], []] is fine, [] means 0 x cols).
Matrix matrix_from_json(const Field& k, const json& j, std::size_t rows, std::size_t cols);
Matrix matrix_from_json(const Field& k, const json& j);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_JSON_CODEC_HPP
