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

#include "fdiv/algebra/json_codec.hpp"

#include <string>

#include "fdiv/error.hpp"

namespace frobdiv {

json field_to_json(const Field& k)
{
    json j{{"p", k.characteristic()}, {"e", k.degree()}};
    if (k.degree() > 1) j["modulus"] = k.modulus();
    return j;
}

Field field_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("p")) throw InvalidInput("field must be an object with key \"p\"");
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.value("e", std::uint32_t{1});
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (e > 1 && modulus.empty()) modulus = default_modulus(p, e);
    return Field(p, e, modulus);
}

json element_to_json(const Field& k, FieldElement x) { return k.coords(x); }

FieldElement element_from_json(const Field& k, const json& j)
{
    if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw InvalidInput("field element must be a coordinate list or an integer");
    std::vector<std::uint32_t> coords;
    for (const auto& c : j) {
        const auto v = c.get<std::int64_t>();
        coords.push_back(k.from_int(v).code);
    }
    return k.from_coords(coords);
}

json poly_to_json(const LaurentPoly& f)
{
    json j = json::object();
    for (const auto& [e, c] : f.terms()) j[std::to_string(e)] = element_to_json(f.field(), c);
    return j;
}

LaurentPoly poly_from_json(const Field& k, const json& j)
{
    if (j.is_number_integer()) return LaurentPoly::constant(k, k.from_int(j.get<std::int64_t>()));
    if (!j.is_object()) throw InvalidInput("Laurent polynomial must be an {\"exp\": coeff} object");
    std::vector<std::pair<std::int64_t, FieldElement>> terms;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        std::int64_t e = 0;
        try {
            e = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty()) throw InvalidInput("exponent key \"" + key + "\" is not an integer");
        terms.emplace_back(e, element_from_json(k, value));
    }
    return LaurentPoly::from_terms(k, terms);
}

json laurent_matrix_to_json(const LaurentMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

LaurentMatrix laurent_matrix_from_json(const Field& k, const json& j)
{
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty list of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    LaurentMatrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = poly_from_json(k, j[i][c]);
    }
    return m;
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.field(), m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& k, const json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array()) throw InvalidInput("matrix must be a list of rows");
    Matrix m(k, rows, cols);
    if (rows == 0 || cols == 0) {
        for (const auto& row : j)
            if (!row.is_array() || row.size() != cols) throw InvalidInput("matrix shape mismatch");
        if (j.size() != rows && !(j.empty())) throw InvalidInput("matrix shape mismatch");
        return m;
    }
    if (j.size() != rows) throw InvalidInput("matrix has the wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("matrix has the wrong number of columns");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = element_from_json(k, j[i][c]);
    }
    return m;
}

Matrix matrix_from_json(const Field& k, const json& j)
{
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty list of rows");
    return matrix_from_json(k, j, j.size(), j.at(0).size());
}

} // namespace frobdiv
