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

#include "fdiv/algebra/laurent.hpp"

#include <algorithm>

#include "fdiv/error.hpp"

namespace frobdiv {

LaurentPoly LaurentPoly::monomial(const Field& k, FieldElement c, std::int64_t exponent)
{
    LaurentPoly out(k);
    if (!k.is_zero(c)) {
        out.low_ = exponent;
        out.coeffs_.push_back(c);
    }
    return out;
}

LaurentPoly LaurentPoly::from_terms(const Field& k, const std::vector<std::pair<std::int64_t, FieldElement>>& terms)
{
    LaurentPoly out(k);
    for (const auto& [e, c] : terms) out += monomial(k, c, e);
    return out;
}

std::optional<std::int64_t> LaurentPoly::min_exponent() const noexcept
{
    if (is_zero()) return std::nullopt;
    return low_;
}

std::optional<std::int64_t> LaurentPoly::max_exponent() const noexcept
{
    if (is_zero()) return std::nullopt;
    return high();
}

FieldElement LaurentPoly::coeff(std::int64_t exponent) const noexcept
{
    if (is_zero() || exponent < low_ || exponent > high()) return k_.zero();
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<std::int64_t, FieldElement>> LaurentPoly::terms() const
{
    std::vector<std::pair<std::int64_t, FieldElement>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!k_.is_zero(coeffs_[i])) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
    return out;
}

std::size_t LaurentPoly::term_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code != 0; }));
}

void LaurentPoly::normalize()
{
    std::size_t first = 0;
    while (first < coeffs_.size() && k_.is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (k_.is_zero(coeffs_[last - 1])) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<FieldElement>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                            coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ += static_cast<std::int64_t>(first);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& o, bool subtract)
{
    if (o.is_zero()) return;
    if (is_zero()) {
        *this = subtract ? -o : o;
        return;
    }
    const std::int64_t lo = std::min(low_, o.low_);
    const std::int64_t hi = std::max(high(), o.high());
    if (lo < low_ || hi > high()) {
        std::vector<FieldElement> grown(static_cast<std::size_t>(hi - lo + 1), k_.zero());
        std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
        coeffs_ = std::move(grown);
        low_ = lo;
    }
    const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& c = coeffs_[off + i];
        c = subtract ? k_.sub(c, o.coeffs_[i]) : k_.add(c, o.coeffs_[i]);
    }
    normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    add_scaled(o, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    add_scaled(o, true);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = k_.neg(c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    const Field& k = a.k_;
    LaurentPoly out(k);
    if (a.is_zero() || b.is_zero()) return out;
    out.low_ = a.low_ + b.low_;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (k.is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] = k.add(out.coeffs_[i + j], k.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.normalize();
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept
{
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::scaled(FieldElement c) const
{
    LaurentPoly out = *this;
    for (auto& x : out.coeffs_) x = k_.mul(x, c);
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t m) const
{
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += m;
    return out;
}

LaurentPoly LaurentPoly::window(std::int64_t lo, std::int64_t hi) const
{
    LaurentPoly out(k_);
    if (is_zero() || hi < lo) return out;
    const std::int64_t a = std::max(lo, low_);
    const std::int64_t b = std::min(hi, high());
    if (a > b) return out;
    out.low_ = a;
    out.coeffs_.assign(coeffs_.begin() + (a - low_), coeffs_.begin() + (b - low_ + 1));
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::frobenius_coefficients(std::int64_t n) const
{
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) c = k_.frobenius(c, n);
    return out;
}

LaurentPoly substitute_power(const LaurentPoly& f, std::uint64_t factor, bool frobenius_coeffs)
{
    if (factor == 0) throw InvalidInput("substitute_power: factor must be positive");
    const Field& k = f.field();
    LaurentPoly out(k);
    std::vector<std::pair<std::int64_t, FieldElement>> terms;
    for (auto [e, c] : f.terms())
        terms.emplace_back(e * static_cast<std::int64_t>(factor), frobenius_coeffs ? k.frobenius(c, 1) : c);
    return LaurentPoly::from_terms(k, terms);
}

LaurentPoly frobenius_pullback(const LaurentPoly& f, std::uint32_t n)
{
    const Field& k = f.field();
    std::int64_t factor = 1;
    for (std::uint32_t i = 0; i < n; ++i) factor *= k.characteristic();
    std::vector<std::pair<std::int64_t, FieldElement>> terms;
    for (auto [e, c] : f.terms()) terms.emplace_back(e * factor, k.frobenius(c, n));
    return LaurentPoly::from_terms(k, terms);
}

LaurentPoly frobenius_descend(const LaurentPoly& f, std::uint32_t n)
{
    const Field& k = f.field();
    std::int64_t factor = 1;
    for (std::uint32_t i = 0; i < n; ++i) factor *= k.characteristic();
    std::vector<std::pair<std::int64_t, FieldElement>> terms;
    for (auto [e, c] : f.terms()) {
        if (e % factor != 0) throw InvalidInput("frobenius_descend: exponent not divisible by p^n");
        terms.emplace_back(e / factor, k.frobenius(c, -static_cast<std::int64_t>(n)));
    }
    return LaurentPoly::from_terms(k, terms);
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw InvalidInput("poly_divmod: division by zero");
    if (!a.is_polynomial() || !b.is_polynomial()) throw InvalidInput("poly_divmod: negative exponents");
    const Field& k = a.field();
    LaurentPoly q(k);
    LaurentPoly r = a;
    const std::int64_t db = *b.max_exponent();
    const FieldElement lead_inv = k.inv(b.coeff(db));
    while (!r.is_zero() && *r.max_exponent() >= db) {
        const std::int64_t dr = *r.max_exponent();
        const auto term = LaurentPoly::monomial(k, k.mul(r.coeff(dr), lead_inv), dr - db);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

} // namespace frobdiv
