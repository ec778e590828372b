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

#ifndef FDIV_RANDOM_HPP
#define FDIV_RANDOM_HPP

#include <cstdint>
#include <random>

namespace frobdiv {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection sampling on raw 64-bit draws. Unlike
/// std::uniform_int_distribution the sequence is the same with every standard library.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

} // namespace frobdiv

#endif // FDIV_RANDOM_HPP
