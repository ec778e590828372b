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

#ifndef FDIV_DIFFOPS_OPERATOR_HPP
#define FDIV_DIFFOPS_OPERATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/algebra/laurent.hpp"

namespace frobdiv {

/// Differential operator sum_k f_k(x) D_k on the affine line, where D_k(x^l) = C(l, k) x^{l-k}.
/// Coefficients sit to the left of the basis operators and are polynomials; zero coefficients
/// are never stored.
class DividedOperator {
public:
    explicit DividedOperator(Field k) : k_(std::move(k)) {}

    /// The basis operator D_k.
    static DividedOperator basis(const Field& k, std::uint64_t index);
    /// Multiplication by f, i.e. f D_0.
    static DividedOperator multiplication(const LaurentPoly& f);
    /// Throws InvalidInput if a coefficient has a negative exponent.
    static DividedOperator from_terms(const Field& k, const std::map<std::uint64_t, LaurentPoly>& terms);

    const Field& field() const noexcept { return k_; }
    const std::map<std::uint64_t, LaurentPoly>& terms() const noexcept { return terms_; }
    LaurentPoly coefficient(std::uint64_t index) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds f D_index.
    void add_term(std::uint64_t index, const LaurentPoly& f);

    friend DividedOperator operator+(DividedOperator a, const DividedOperator& b);
    friend DividedOperator operator-(DividedOperator a, const DividedOperator& b);
    friend bool operator==(const DividedOperator& a, const DividedOperator& b) noexcept;
    DividedOperator scaled(FieldElement c) const;

private:
    Field k_;
    std::map<std::uint64_t, LaurentPoly> terms_;
};

/// Largest index with a nonzero coefficient; nullopt for the zero operator.
std::optional<std::uint64_t> order(const DividedOperator& op);

/// D_index(f). Throws InvalidInput if f has negative exponents.
LaurentPoly apply_basis(std::uint64_t index, const LaurentPoly& f);
LaurentPoly apply(const DividedOperator& op, const LaurentPoly& f);

/// Normal form of a o b, without self-check.
DividedOperator compose_unchecked(const DividedOperator& a, const DividedOperator& b);

/// Normal form of a o b, cross-checked by applying both sides to x^m for m <= test_degree
/// (default 2 (ord a + ord b)). A mismatch throws std::logic_error.
DividedOperator compose(const DividedOperator& a, const DividedOperator& b,
                        std::optional<std::int64_t> test_degree = std::nullopt);

/// D_j = unit^{-1} prod_m D_{p^m}^{c_m} where j = sum_m c_m p^m.
struct GeneratorProduct {
    std::uint64_t j = 0;
    std::uint32_t p = 0;
    /// (m, c_m) for every nonzero base-p digit, m ascending.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    /// multinomial_unit(j, p).
    std::uint32_t unit = 1;
};

GeneratorProduct decompose_generator_product(std::uint64_t j, std::uint32_t p);

/// Rebuilds D_j from its generator product by composition (the field must have characteristic p).
DividedOperator recompose(const Field& k, const GeneratorProduct& g);

/// {"k": poly, ...} with decimal string keys; coefficients in the polynomial encoding.
json operator_to_json(const DividedOperator& op);
DividedOperator operator_from_json(const Field& k, const json& j);
json generator_product_to_json(const GeneratorProduct& g);

} // namespace frobdiv

#endif // FDIV_DIFFOPS_OPERATOR_HPP
