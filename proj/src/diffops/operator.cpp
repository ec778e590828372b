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

#include "fdiv/diffops/operator.hpp"

#include <stdexcept>
#include <string>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/error.hpp"

namespace frobdiv {

DividedOperator DividedOperator::basis(const Field& k, std::uint64_t index)
{
    DividedOperator op(k);
    op.terms_.emplace(index, LaurentPoly::constant(k, k.one()));
    return op;
}

DividedOperator DividedOperator::multiplication(const LaurentPoly& f)
{
    DividedOperator op(f.field());
    op.add_term(0, f);
    return op;
}

DividedOperator DividedOperator::from_terms(const Field& k, const std::map<std::uint64_t, LaurentPoly>& terms)
{
    DividedOperator op(k);
    for (const auto& [index, f] : terms) op.add_term(index, f);
    return op;
}

LaurentPoly DividedOperator::coefficient(std::uint64_t index) const
{
    const auto it = terms_.find(index);
    return it == terms_.end() ? LaurentPoly(k_) : it->second;
}

void DividedOperator::add_term(std::uint64_t index, const LaurentPoly& f)
{
    if (!f.is_polynomial()) throw InvalidInput("operator coefficients must be polynomials");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(index, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DividedOperator operator+(DividedOperator a, const DividedOperator& b)
{
    for (const auto& [index, f] : b.terms_) a.add_term(index, f);
    return a;
}

DividedOperator operator-(DividedOperator a, const DividedOperator& b)
{
    for (const auto& [index, f] : b.terms_) a.add_term(index, -f);
    return a;
}

bool operator==(const DividedOperator& a, const DividedOperator& b) noexcept
{
    return a.k_ == b.k_ && a.terms_ == b.terms_;
}

DividedOperator DividedOperator::scaled(FieldElement c) const
{
    DividedOperator out(k_);
    for (const auto& [index, f] : terms_) out.add_term(index, f.scaled(c));
    return out;
}

std::optional<std::uint64_t> order(const DividedOperator& op)
{
    if (op.is_zero()) return std::nullopt;
    return op.terms().rbegin()->first;
}

LaurentPoly apply_basis(std::uint64_t index, const LaurentPoly& f)
{
    if (!f.is_polynomial()) throw InvalidInput("divided operators act on polynomials only");
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<std::pair<std::int64_t, FieldElement>> out;
    for (const auto& [e, c] : f.terms()) {
        const auto l = static_cast<std::uint64_t>(e);
        if (l < index) continue;
        const std::uint32_t b = binom_mod_p(l, index, p);
        if (b != 0) out.emplace_back(static_cast<std::int64_t>(l - index), k.mul(c, k.from_int(b)));
    }
    return LaurentPoly::from_terms(k, out);
}

LaurentPoly apply(const DividedOperator& op, const LaurentPoly& f)
{
    LaurentPoly out(f.field());
    for (const auto& [index, g] : op.terms()) out += g * apply_basis(index, f);
    return out;
}

DividedOperator compose_unchecked(const DividedOperator& a, const DividedOperator& b)
{
    // f D_k o g D_l = sum_{i+j=k} f D_i(g) C(j+l, j) D_{j+l}
    const Field& k = a.field();
    const std::uint32_t p = k.characteristic();
    DividedOperator out(k);
    for (const auto& [ka, f] : a.terms())
        for (const auto& [lb, g] : b.terms())
            for (std::uint64_t i = 0; i <= ka; ++i) {
                const LaurentPoly di = apply_basis(i, g);
                if (di.is_zero()) continue;
                const std::uint64_t j = ka - i;
                const std::uint32_t c = binom_mod_p(j + lb, j, p);
                if (c == 0) continue;
                out.add_term(j + lb, (f * di).scaled(k.from_int(c)));
            }
    return out;
}

DividedOperator compose(const DividedOperator& a, const DividedOperator& b, std::optional<std::int64_t> test_degree)
{
    DividedOperator out = compose_unchecked(a, b);
    const std::int64_t degree =
        test_degree.value_or(2 * static_cast<std::int64_t>(order(a).value_or(0) + order(b).value_or(0)));
    const Field& k = a.field();
    for (std::int64_t m = 0; m <= degree; ++m) {
        const LaurentPoly xm = LaurentPoly::x_power(k, m);
        if (apply(out, xm) != apply(a, apply(b, xm)))
            throw std::logic_error("compose: normal form disagrees with iterated application on x^" + std::to_string(m));
    }
    return out;
}

GeneratorProduct decompose_generator_product(std::uint64_t j, std::uint32_t p)
{
    if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
    GeneratorProduct g;
    g.j = j;
    g.p = p;
    const auto digits = base_p_digits(j, p);
    for (std::size_t m = 0; m < digits.size(); ++m)
        if (digits[m] != 0) g.factors.emplace_back(static_cast<std::uint32_t>(m), digits[m]);
    g.unit = multinomial_unit(j, p);
    return g;
}

DividedOperator recompose(const Field& k, const GeneratorProduct& g)
{
    if (k.characteristic() != g.p) throw InvalidInput("field characteristic does not match the decomposition");
    DividedOperator out = DividedOperator::basis(k, 0);
    std::uint64_t pm = 1;
    std::uint32_t level = 0;
    for (const auto& [m, count] : g.factors) {
        for (; level < m; ++level) pm *= g.p;
        for (std::uint32_t c = 0; c < count; ++c) out = compose_unchecked(out, DividedOperator::basis(k, pm));
    }
    return out.scaled(k.inv(k.from_int(g.unit)));
}

json operator_to_json(const DividedOperator& op)
{
    json j = json::object();
    for (const auto& [index, f] : op.terms()) j[std::to_string(index)] = poly_to_json(f);
    return j;
}

DividedOperator operator_from_json(const Field& k, const json& j)
{
    if (!j.is_object()) throw InvalidInput("operator must be an object {\"k\": poly}");
    DividedOperator op(k);
    for (const auto& [key, value] : j.items()) {
        if (key.empty() || key.size() > 18 || key.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidInput("operator key \"" + key + "\" is not a non-negative integer");
        }
        op.add_term(std::stoull(key), poly_from_json(k, value));
    }
    return op;
}

json generator_product_to_json(const GeneratorProduct& g)
{
    json factors = json::array();
    for (const auto& [m, c] : g.factors) factors.push_back({{"m", m}, {"power", c}});
    return {{"j", g.j}, {"p", g.p}, {"factors", factors}, {"unit", g.unit}};
}

} // namespace frobdiv
