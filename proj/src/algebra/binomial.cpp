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

#include "fdiv/algebra/binomial.hpp"

#include "fdiv/error.hpp"

namespace frobdiv {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p)
{
    if (p < 2) throw InvalidInput("base must be at least 2");
    std::vector<std::uint32_t> digits;
    for (; n > 0; n /= p) digits.push_back(static_cast<std::uint32_t>(n % p));
    return digits;
}

namespace {

// Small binomial mod p for 0 <= k, l < p, via the multiplicative formula.
std::uint32_t small_binom(std::uint64_t l, std::uint64_t k, std::uint64_t p)
{
    if (k > l) return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((l - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a unit because k < p; invert by Fermat.
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

} // namespace

std::uint32_t binom_mod_p(std::uint64_t l, std::uint64_t k, std::uint32_t p)
{
    if (!is_prime(p)) throw InvalidInput("binom_mod_p: modulus is not prime");
    if (k > l) return 0;
    std::uint64_t result = 1;
    while (l > 0 || k > 0) {
        const std::uint64_t li = l % p;
        const std::uint64_t ki = k % p;
        if (ki > li) return 0;
        result = result * small_binom(li, ki, p) % p;
        l /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t multinomial_unit(std::uint64_t j, std::uint32_t p)
{
    if (!is_prime(p)) throw InvalidInput("multinomial_unit: modulus is not prime");
    // Build j by adding one p^m block at a time, lowest digit first; the multinomial is the
    // product of the binomials C(partial + p^m, p^m).
    std::uint64_t result = 1;
    std::uint64_t partial = 0;
    std::uint64_t power = 1;
    for (const std::uint32_t digit : base_p_digits(j, p)) {
        for (std::uint32_t c = 0; c < digit; ++c) {
            partial += power;
            result = result * binom_mod_p(partial, power, p) % p;
        }
        power *= p;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace frobdiv
