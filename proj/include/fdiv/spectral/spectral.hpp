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

#ifndef FDIV_SPECTRAL_SPECTRAL_HPP
#define FDIV_SPECTRAL_SPECTRAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/random.hpp"

namespace frobdiv {

/// Dimensions E^{s,t} of one page of a first-quadrant spectral sequence, zero outside
/// 0 <= s <= M, 0 <= t <= N.
class SpectralPage {
public:
    SpectralPage(std::size_t m, std::size_t n) : m_(m), n_(n), dims_((m + 1) * (n + 1), 0) {}

    std::size_t max_s() const noexcept { return m_; }
    std::size_t max_t() const noexcept { return n_; }
    /// Zero for any (s, t) outside the box, negative indices included.
    std::size_t at(std::int64_t s, std::int64_t t) const noexcept;
    void set(std::size_t s, std::size_t t, std::size_t d);
    /// sum over s + t = n.
    std::size_t diagonal(std::int64_t n) const noexcept;
    friend bool operator==(const SpectralPage&, const SpectralPage&) = default;

private:
    std::size_t m_;
    std::size_t n_;
    std::vector<std::size_t> dims_;
};

/// E_2^{n,0} + sum_{0 <= i <= n-1} E_2^{i,n-i}.
std::size_t bound_upper(const SpectralPage& e2, std::int64_t n);

struct EdgeBound {
    std::size_t edge = 0;       // E_2^{n,0}
    std::size_t abutment = 0;   // dim H^n
    std::size_t correction = 0; // sum_{2 <= i <= N+1} E_2^{n-i,i-1}
    bool holds = true;
    std::int64_t slack = 0;     // abutment + correction - edge
};

/// E_2^{n,0} <= dim H^n + sum_{2 <= i <= N+1} E_2^{n-i,i-1}. The i = N+1 term is the source of
/// d_{N+1} from the top row; without it the bound fails already for E_2^{0,1} = E_2^{2,0} = 1, N = 1.
EdgeBound bound_edge(const SpectralPage& e2, std::int64_t n, std::size_t hn);

/// d_r : E_r^{s,t} -> E_r^{s+r,t-r+1}, with the largest rank still admissible when it is drawn.
struct Differential {
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t max_rank = 0;
};

/// Picks a rank in [0, d.max_rank].
using RankPolicy = std::function<std::size_t(const Differential& d, Rng& rng)>;

RankPolicy uniform_ranks();
RankPolicy zero_ranks();
RankPolicy max_ranks();

struct DifferentialRank {
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t rank = 0;
};

struct Simulation {
    std::uint64_t seed = 0;
    /// E_2, E_3, ..., E_{N+2} = E_infinity.
    std::vector<SpectralPage> pages;
    /// ranks[r - 2]: the differentials of page r with nonzero admissible range.
    std::vector<std::vector<DifferentialRank>> ranks;
    /// dim H^n for n = 0..M+N.
    std::vector<std::size_t> abutment;
};

/// Runs pages r = 2..N+1. Differentials are visited by increasing s, then t; each rank is bounded
/// by what the incoming and outgoing differentials already drawn leave at its source and target.
/// The abutment is read off the antidiagonals of E_{N+2}.
Simulation simulate(const SpectralPage& e2, std::uint64_t seed, const RankPolicy& policy = uniform_ranks());

/// {"M": M, "N": N, "dims": {"s,t": d}}; zero entries are omitted on output.
json page_to_json(const SpectralPage& e);
SpectralPage page_from_json(const json& j);
json simulation_to_json(const Simulation& sim);

} // namespace frobdiv

#endif // FDIV_SPECTRAL_SPECTRAL_HPP
