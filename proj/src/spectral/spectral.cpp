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

#include "fdiv/spectral/spectral.hpp"

#include <algorithm>
#include <string>

#include "fdiv/error.hpp"

namespace frobdiv {

std::size_t SpectralPage::at(std::int64_t s, std::int64_t t) const noexcept
{
    if (s < 0 || t < 0 || s > static_cast<std::int64_t>(m_) || t > static_cast<std::int64_t>(n_)) return 0;
    return dims_[static_cast<std::size_t>(s) * (n_ + 1) + static_cast<std::size_t>(t)];
}

void SpectralPage::set(std::size_t s, std::size_t t, std::size_t d)
{
    if (s > m_ || t > n_) {
        throw InvalidInput("entry (" + std::to_string(s) + "," + std::to_string(t) + ") outside the " +
                           std::to_string(m_) + " x " + std::to_string(n_) + " quadrant");
    }
    dims_[s * (n_ + 1) + t] = d;
}

std::size_t SpectralPage::diagonal(std::int64_t n) const noexcept
{
    std::size_t sum = 0;
    for (std::int64_t s = 0; s <= n; ++s) sum += at(s, n - s);
    return sum;
}

std::size_t bound_upper(const SpectralPage& e2, std::int64_t n)
{
    std::size_t sum = e2.at(n, 0);
    for (std::int64_t i = 0; i < n; ++i) sum += e2.at(i, n - i);
    return sum;
}

EdgeBound bound_edge(const SpectralPage& e2, std::int64_t n, std::size_t hn)
{
    EdgeBound b;
    b.edge = e2.at(n, 0);
    b.abutment = hn;
    for (std::int64_t i = 2; i <= static_cast<std::int64_t>(e2.max_t()) + 1; ++i) b.correction += e2.at(n - i, i - 1);
    b.slack = static_cast<std::int64_t>(b.abutment + b.correction) - static_cast<std::int64_t>(b.edge);
    b.holds = b.slack >= 0;
    return b;
}

RankPolicy uniform_ranks()
{
    return [](const Differential& d, Rng& rng) {
        return static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(d.max_rank)));
    };
}

RankPolicy zero_ranks()
{
    return [](const Differential&, Rng&) { return std::size_t{0}; };
}

RankPolicy max_ranks()
{
    return [](const Differential& d, Rng&) { return d.max_rank; };
}

Simulation simulate(const SpectralPage& e2, std::uint64_t seed, const RankPolicy& policy)
{
    Simulation sim;
    sim.seed = seed;
    sim.pages.push_back(e2);
    Rng rng(seed);
    const std::size_t m = e2.max_s();
    const std::size_t n = e2.max_t();
    for (std::size_t r = 2; r <= n + 1; ++r) {
        const SpectralPage& cur = sim.pages.back();
        SpectralPage used(m, n);
        std::vector<DifferentialRank> ranks;
        for (std::size_t s = 0; s + r <= m; ++s) {
            for (std::size_t t = r - 1; t <= n; ++t) {
                std::size_t ts = s + r;
                std::size_t tt = t + 1 - r;
                std::size_t room_source = cur.at(s, t) - used.at(s, t);
                std::size_t room_target = cur.at(ts, tt) - used.at(ts, tt);
                Differential d{r, s, t, std::min(room_source, room_target)};
                if (d.max_rank == 0) continue;
                std::size_t k = policy(d, rng);
                if (k > d.max_rank) throw InvalidInput("rank policy returned an inadmissible rank");
                used.set(s, t, used.at(s, t) + k);
                used.set(ts, tt, used.at(ts, tt) + k);
                ranks.push_back({s, t, k});
            }
        }
        SpectralPage next(m, n);
        for (std::size_t s = 0; s <= m; ++s) {
            for (std::size_t t = 0; t <= n; ++t) next.set(s, t, cur.at(s, t) - used.at(s, t));
        }
        sim.ranks.push_back(std::move(ranks));
        sim.pages.push_back(std::move(next));
    }
    const SpectralPage& last = sim.pages.back();
    for (std::size_t d = 0; d <= m + n; ++d) sim.abutment.push_back(last.diagonal(static_cast<std::int64_t>(d)));
    return sim;
}

json page_to_json(const SpectralPage& e)
{
    json dims = json::object();
    for (std::size_t s = 0; s <= e.max_s(); ++s) {
        for (std::size_t t = 0; t <= e.max_t(); ++t) {
            if (e.at(s, t) != 0) dims[std::to_string(s) + "," + std::to_string(t)] = e.at(s, t);
        }
    }
    return {{"M", e.max_s()}, {"N", e.max_t()}, {"dims", dims}};
}

namespace {

std::size_t parse_index(const std::string& text, const std::string& key)
{
    if (text.empty() || text.size() > 6 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidInput("page key \"" + key + "\" is not of the form \"s,t\" with s, t >= 0");
    }
    return static_cast<std::size_t>(std::stoul(text));
}

std::size_t bound_from_json(const json& j, const char* name)
{
    if (!j.contains(name) || !j[name].is_number_unsigned()) {
        throw InvalidInput(std::string("page needs a non-negative integer \"") + name + "\"");
    }
    return j[name].get<std::size_t>();
}

} // namespace

SpectralPage page_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidInput("page must be a JSON object");
    SpectralPage e(bound_from_json(j, "M"), bound_from_json(j, "N"));
    if (!j.contains("dims")) return e;
    if (!j["dims"].is_object()) throw InvalidInput("\"dims\" must be an object keyed by \"s,t\"");
    for (const auto& [key, value] : j["dims"].items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw InvalidInput("page key \"" + key + "\" is not of the form \"s,t\"");
        std::size_t s = parse_index(key.substr(0, comma), key);
        std::size_t t = parse_index(key.substr(comma + 1), key);
        if (!value.is_number_unsigned()) throw InvalidInput("page entry \"" + key + "\" must be a non-negative integer");
        e.set(s, t, value.get<std::size_t>());
    }
    return e;
}

json simulation_to_json(const Simulation& sim)
{
    json pages = json::array();
    for (std::size_t i = 0; i < sim.pages.size(); ++i) {
        json page = page_to_json(sim.pages[i]);
        page["r"] = i + 2;
        if (i < sim.ranks.size()) {
            json ranks = json::array();
            for (const auto& d : sim.ranks[i]) ranks.push_back({{"s", d.s}, {"t", d.t}, {"rank", d.rank}});
            page["differentials"] = ranks;
        }
        pages.push_back(page);
    }
    return {{"seed", sim.seed}, {"pages", pages}, {"abutment", sim.abutment}};
}

} // namespace frobdiv
