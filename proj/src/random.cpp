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

#include "fdiv/random.hpp"

#include "fdiv/error.hpp"

namespace frobdiv {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    if (hi < lo) throw InvalidInput("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return lo + static_cast<std::int64_t>(v % span);
}

} // namespace frobdiv
