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

#ifndef FDIV_ALGEBRA_FIELD_HPP
#define FDIV_ALGEBRA_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace frobdiv {

/// An element of a finite field, stored as the integer sum c_0 + c_1 p + ... + c_{e-1} p^{e-1}
/// of its little-endian coordinates in the modulus basis. Meaningless without its Field.
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Finite field F_{p^e} = F_p[u]/(modulus). Cheap to copy; all copies share immutable tables.
///
/// Multiplication for e > 1 goes through discrete log/exp tables built at construction,
/// which bounds the field size by 2^20.
class Field {
public:
    static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

    /// The prime field F_p.
    static Field prime(std::uint32_t p);

    /// F_{p^e} with the given modulus (little-endian coefficients, length e + 1).
    /// The modulus is normalized to be monic and verified irreducible by factor search.
    /// For e == 1 the modulus may be empty.
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus = {});

    std::uint32_t characteristic() const noexcept { return impl_->p; }
    std::uint32_t degree() const noexcept { return impl_->e; }
    std::uint32_t size() const noexcept { return impl_->q; }
    /// Monic modulus, little-endian; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Image of an integer in the prime subfield.
    FieldElement from_int(std::int64_t v) const noexcept;
    FieldElement from_coords(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(FieldElement x) const;
    /// The element with the given code; codes enumerate the field as 0..size()-1.
    FieldElement element(std::uint32_t code) const;
    /// The class of u in F_p[u]/(modulus); zero for prime fields.
    FieldElement generator_u() const noexcept { return {impl_->e > 1 ? impl_->p : 0u}; }

    bool is_zero(FieldElement x) const noexcept { return x.code == 0; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept
    {
        const auto& f = *impl_;
        if (f.e == 1) {
            std::uint32_t s = a.code + b.code;
            return {s >= f.p ? s - f.p : s};
        }
        if (f.p == 2) return {a.code ^ b.code};
        return {digit_op(a.code, b.code, false)};
    }

    FieldElement sub(FieldElement a, FieldElement b) const noexcept
    {
        const auto& f = *impl_;
        if (f.e == 1) return {a.code >= b.code ? a.code - b.code : a.code + f.p - b.code};
        if (f.p == 2) return {a.code ^ b.code};
        return {digit_op(a.code, b.code, true)};
    }

    FieldElement neg(FieldElement a) const noexcept { return sub(zero(), a); }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept
    {
        const auto& f = *impl_;
        if (a.code == 0 || b.code == 0) return {0};
        if (f.e == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % f.p)};
        std::uint32_t s = f.log[a.code] + f.log[b.code];
        if (s >= f.q - 1) s -= f.q - 1;
        return {f.exp[s]};
    }

    /// Throws InvalidInput on zero.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t n) const noexcept;

    /// x^{p^n}; negative n applies the inverse automorphism.
    FieldElement frobenius(FieldElement x, std::int64_t n) const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl {
        std::uint32_t p = 0;
        std::uint32_t e = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> log; // log[0] unused
        std::vector<std::uint32_t> exp; // size q - 1
    };

    std::uint32_t digit_op(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept;

    std::shared_ptr<const Impl> impl_;
};

/// Brute-force irreducibility test over F_p (feasible for p^deg <= 2^20).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// First monic irreducible polynomial of degree e over F_p, counting the lower coefficients
/// c_0 + c_1 p + ... upward from 0. Little-endian, length e + 1.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_FIELD_HPP
