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

#include "fdiv/algebra/field.hpp"

#include <algorithm>
#include <string>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

using Poly = std::vector<std::uint32_t>; // little-endian coefficients in F_p

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t r = 1;
    std::uint64_t b = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

Poly code_to_poly(std::uint32_t code, std::uint32_t p)
{
    Poly out;
    for (; code > 0; code /= p) out.push_back(code % p);
    return out;
}

std::uint32_t poly_to_code(const Poly& a, std::uint32_t p)
{
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e)
{
    if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidField("extension degree must be at least 1");
    std::vector<std::uint32_t> f(e + 1, 0);
    f[e] = 1;
    for (;;) {
        if (is_irreducible(p, f)) return f;
        std::size_t i = 0;
        while (i < e && ++f[i] == p) f[i++] = 0;
        if (i == e) throw InvalidField("no irreducible polynomial found");
    }
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly)
{
    Poly f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    // Every monic candidate divisor of degree d, 1 <= d <= deg / 2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::prime(std::uint32_t p) { return Field(p, 1); }

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidField("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxSize) throw InvalidField("field size exceeds 2^20");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = static_cast<std::uint32_t>(q);

    if (e == 1) {
        if (!modulus.empty() && modulus.size() != 2)
            throw InvalidField("prime field modulus must be linear or absent");
        impl_ = std::move(impl);
        return;
    }

    if (modulus.size() != e + 1)
        throw InvalidField("modulus must have exactly e + 1 = " + std::to_string(e + 1) + " coefficients");
    for (auto& c : modulus) {
        if (c >= p) throw InvalidField("modulus coefficient out of range");
    }
    if (modulus.back() == 0) throw InvalidField("modulus leading coefficient is zero");
    const std::uint64_t lead_inv = inv_mod(modulus.back(), p);
    for (auto& c : modulus) c = static_cast<std::uint32_t>(c * lead_inv % p);
    if (!is_irreducible(p, modulus)) throw InvalidField("modulus is reducible over F_" + std::to_string(p));
    impl->modulus = modulus;

    // Find a primitive element by order testing, then tabulate powers.
    const std::uint64_t order = q - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](const Poly& base, std::uint64_t n) {
        Poly result{1};
        Poly b = base;
        for (; n > 0; n >>= 1) {
            if (n & 1) result = poly_mulmod(result, b, modulus, p);
            b = poly_mulmod(b, b, modulus, p);
        }
        return result;
    };
    Poly generator;
    for (std::uint32_t code = 2; code < q; ++code) {
        const Poly g = code_to_poly(code, p);
        const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
            return slow_pow(g, order / f) != Poly{1};
        });
        if (primitive) {
            generator = g;
            break;
        }
    }
    if (generator.empty()) throw InvalidField("no primitive element found");

    impl->exp.resize(order);
    impl->log.assign(q, 0);
    Poly cur{1};
    for (std::uint64_t i = 0; i < order; ++i) {
        const std::uint32_t code = poly_to_code(cur, p);
        impl->exp[i] = code;
        impl->log[code] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, generator, modulus, p);
    }
    impl_ = std::move(impl);
}

std::uint32_t Field::digit_op(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept
{
    const std::uint32_t p = impl_->p;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < impl_->e; ++i) {
        const std::uint32_t da = a % p;
        const std::uint32_t db = b % p;
        a /= p;
        b /= p;
        const std::uint32_t d = subtract ? (da + p - db) % p : (da + db) % p;
        out += d * scale;
        scale *= p;
    }
    return out;
}

FieldElement Field::from_int(std::int64_t v) const noexcept
{
    const std::int64_t p = impl_->p;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coords(std::span<const std::uint32_t> coords) const
{
    if (coords.size() > impl_->e) throw InvalidInput("too many coordinates for field element");
    std::uint32_t code = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= impl_->p) throw InvalidInput("field coordinate out of range");
        code = code * impl_->p + coords[i];
    }
    return {code};
}

std::vector<std::uint32_t> Field::coords(FieldElement x) const
{
    std::vector<std::uint32_t> out(impl_->e, 0);
    std::uint32_t c = x.code;
    for (std::uint32_t i = 0; i < impl_->e; ++i) {
        out[i] = c % impl_->p;
        c /= impl_->p;
    }
    return out;
}

FieldElement Field::element(std::uint32_t code) const
{
    if (code >= impl_->q) throw InvalidInput("field element code out of range");
    return {code};
}

FieldElement Field::inv(FieldElement a) const
{
    if (a.code == 0) throw InvalidInput("inverse of zero");
    const auto& f = *impl_;
    if (f.e == 1) return {inv_mod(a.code, f.p)};
    const std::uint32_t l = f.log[a.code];
    return {f.exp[l == 0 ? 0 : f.q - 1 - l]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const noexcept
{
    if (n == 0) return one();
    if (a.code == 0) return zero();
    const auto& f = *impl_;
    if (f.e == 1) {
        std::uint64_t r = 1;
        std::uint64_t b = a.code;
        for (; n > 0; n >>= 1) {
            if (n & 1) r = r * b % f.p;
            b = b * b % f.p;
        }
        return {static_cast<std::uint32_t>(r)};
    }
    const std::uint64_t order = f.q - 1;
    return {f.exp[(std::uint64_t{f.log[a.code]} * (n % order)) % order]};
}

FieldElement Field::frobenius(FieldElement x, std::int64_t n) const noexcept
{
    const auto& f = *impl_;
    if (f.e == 1 || x.code == 0) return x;
    std::int64_t steps = n % static_cast<std::int64_t>(f.e);
    if (steps < 0) steps += f.e;
    std::uint64_t power = 1;
    for (std::int64_t i = 0; i < steps; ++i) power *= f.p;
    return pow(x, power);
}

bool operator==(const Field& a, const Field& b) noexcept
{
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->modulus == b.impl_->modulus;
}

} // namespace frobdiv
