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

#ifndef FDIV_ALGEBRA_LAURENT_HPP
#define FDIV_ALGEBRA_LAURENT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fdiv/algebra/field.hpp"

namespace frobdiv {

/// Laurent polynomial in one variable x over a finite field, kept in normal form:
/// dense coefficients between the lowest and highest nonzero exponents, no zero at either end.
/// The zero polynomial has empty support, and its exponent bounds are std::nullopt.
class LaurentPoly {
public:
    explicit LaurentPoly(Field k) : k_(std::move(k)) {}

    static LaurentPoly monomial(const Field& k, FieldElement c, std::int64_t exponent);
    static LaurentPoly constant(const Field& k, FieldElement c) { return monomial(k, c, 0); }
    static LaurentPoly x_power(const Field& k, std::int64_t exponent) { return monomial(k, k.one(), exponent); }
    static LaurentPoly from_terms(const Field& k, const std::vector<std::pair<std::int64_t, FieldElement>>& terms);

    const Field& field() const noexcept { return k_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::int64_t> min_exponent() const noexcept;
    std::optional<std::int64_t> max_exponent() const noexcept;
    FieldElement coeff(std::int64_t exponent) const noexcept;
    /// Nonzero terms in ascending exponent order.
    std::vector<std::pair<std::int64_t, FieldElement>> terms() const;
    std::size_t term_count() const noexcept;

    /// True for zero and for polynomials without negative exponents.
    bool is_polynomial() const noexcept { return is_zero() || low_ >= 0; }
    /// True for zero and for polynomials without positive exponents.
    bool is_copolynomial() const noexcept { return is_zero() || high() <= 0; }
    bool is_constant() const noexcept { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
    /// Units of the Laurent ring are exactly the nonzero monomials c x^m.
    bool is_monomial() const noexcept { return term_count() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept;

    LaurentPoly scaled(FieldElement c) const;
    /// Multiplication by x^m.
    LaurentPoly shifted(std::int64_t m) const;
    /// Terms with exponent in [lo, hi].
    LaurentPoly window(std::int64_t lo, std::int64_t hi) const;
    /// Coefficientwise Frobenius^n, exponents unchanged.
    LaurentPoly frobenius_coefficients(std::int64_t n) const;

private:
    std::int64_t high() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    void add_scaled(const LaurentPoly& o, bool subtract);
    void normalize();

    Field k_;
    std::int64_t low_ = 0;
    std::vector<FieldElement> coeffs_;
};

/// x -> x^factor, with each coefficient replaced by its Frobenius image when frobenius_coeffs is set.
LaurentPoly substitute_power(const LaurentPoly& f, std::uint64_t factor, bool frobenius_coeffs);

/// x -> x^{p^n} with coefficients raised to the p^n-th power: the n-fold Frobenius pullback.
LaurentPoly frobenius_pullback(const LaurentPoly& f, std::uint32_t n);

/// Inverse of frobenius_pullback: requires every exponent divisible by p^n. Throws InvalidInput otherwise.
LaurentPoly frobenius_descend(const LaurentPoly& f, std::uint32_t n);

/// Euclidean division of polynomials (no negative exponents); divisor nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Degree of a polynomial; nullopt for zero.
inline std::optional<std::int64_t> poly_degree(const LaurentPoly& f) { return f.max_exponent(); }

} // namespace frobdiv

#endif // FDIV_ALGEBRA_LAURENT_HPP
