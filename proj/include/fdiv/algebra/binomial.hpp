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

#ifndef FDIV_ALGEBRA_BINOMIAL_HPP
#define FDIV_ALGEBRA_BINOMIAL_HPP

#include <cstdint>
#include <vector>

namespace frobdiv {

bool is_prime(std::uint64_t n) noexcept;

/// Base-p digits of n, least significant first; empty for n == 0.
std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p);

/// C(l, k) mod p by Lucas' theorem; 0 when k > l.
std::uint32_t binom_mod_p(std::uint64_t l, std::uint64_t k, std::uint32_t p);

/// j! / prod_m (p^m!)^{c_m} mod p, where j = sum_m c_m p^m in base p. Never zero.
std::uint32_t multinomial_unit(std::uint64_t j, std::uint32_t p);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_BINOMIAL_HPP
