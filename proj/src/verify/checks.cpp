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

#include "fdiv/verify/checks.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/dcoh/cohomology.hpp"
#include "fdiv/diffops/operator.hpp"
#include "fdiv/dmod/extraction.hpp"
#include "fdiv/error.hpp"
#include "fdiv/spectral/spectral.hpp"
#include "fdiv/towers/twisted.hpp"
#include "fdiv/verify/generators.hpp"
#include "fdiv/verify/oracles.hpp"

namespace frobdiv::verify {

namespace {

using boost::multiprecision::cpp_int;

class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++cases_;
        if (!ok && failure_.empty()) failure_ = what();
    }

    void input(const json& j)
    {
        for (unsigned char c : j.dump()) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
    }

    CheckResult finish() const
    {
        CheckResult r;
        r.passed = failure_.empty();
        r.cases = cases_;
        r.failure = failure_;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
        r.digest = buf;
        return r;
    }

private:
    std::size_t cases_ = 0;
    std::string failure_;
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

Rng rng_for(const CheckConfig& c, int criterion)
{
    return Rng(c.seed * 1000003ULL + static_cast<std::uint64_t>(criterion));
}

std::string str(std::int64_t v) { return std::to_string(v); }

Field f4() { return Field(2, 2, default_modulus(2, 2)); }
Field f9() { return Field(3, 2, default_modulus(3, 2)); }

CheckResult operator_relations(const CheckConfig& cfg)
{
    Tally t;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        std::vector<std::vector<std::uint32_t>> rel(26, std::vector<std::uint32_t>(26));
        for (std::uint64_t a = 0; a <= 25; ++a) {
            for (std::uint64_t b = 0; b <= 25; ++b) rel[a][b] = binom_mod_p(a + b, a, p);
        }
        if (cfg.corrupt_relations) rel[3][5] = (rel[3][5] + 1) % p;
        std::vector<LaurentPoly> monomials;
        for (std::int64_t m = 0; m <= 60; ++m) monomials.push_back(LaurentPoly::x_power(k, m));
        for (std::uint64_t a = 0; a <= 25; ++a) {
            for (std::uint64_t b = 0; b <= 25; ++b) {
                const FieldElement c = k.from_int(rel[a][b]);
                DividedOperator expected(k);
                if (!k.is_zero(c)) expected = DividedOperator::basis(k, a + b).scaled(c);
                const DividedOperator got = compose_unchecked(DividedOperator::basis(k, a), DividedOperator::basis(k, b));
                t.expect(got == expected, [&] {
                    return "p=" + str(p) + ": D_" + str(static_cast<std::int64_t>(a)) + " D_" +
                           str(static_cast<std::int64_t>(b)) + " != C(" + str(static_cast<std::int64_t>(a + b)) + "," +
                           str(static_cast<std::int64_t>(a)) + ") D_" + str(static_cast<std::int64_t>(a + b));
                });
                for (std::int64_t m = 0; m <= 60; ++m) {
                    const auto& xm = monomials[static_cast<std::size_t>(m)];
                    LaurentPoly lhs = apply_basis(a, apply_basis(b, xm));
                    LaurentPoly rhs = apply_basis(a + b, xm).scaled(c);
                    t.expect(lhs == rhs, [&] {
                        return "p=" + str(p) + ": D_" + str(static_cast<std::int64_t>(a)) + " D_" +
                               str(static_cast<std::int64_t>(b)) + " on x^" + str(m);
                    });
                }
            }
        }
    }
    return t.finish();
}

CheckResult lucas(const CheckConfig&)
{
    Tally t;
    const std::size_t n = 200;
    std::vector<std::vector<cpp_int>> c(n + 1, std::vector<cpp_int>(n + 1, 0));
    for (std::size_t l = 0; l <= n; ++l) {
        c[l][0] = 1;
        for (std::size_t k = 1; k <= l; ++k) c[l][k] = c[l - 1][k - 1] + c[l - 1][k];
    }
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::size_t l = 0; l <= n; ++l) {
            for (std::size_t k = 0; k <= n; ++k) {
                const auto expected = static_cast<std::uint32_t>(c[l][k] % p);
                t.expect(binom_mod_p(l, k, p) == expected, [&] {
                    return "C(" + std::to_string(l) + "," + std::to_string(k) + ") mod " + std::to_string(p);
                });
            }
        }
    }
    return t.finish();
}

CheckResult dmod_roundtrip(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto tower = gen::affine_tower(rng, k, r, n);
        json in = json::array();
        for (const auto& a : tower) in.push_back(laurent_matrix_to_json(a));
        t.input(in);
        const auto outcome = oracle::dmod_roundtrip(tower, k, 3);
        t.expect(outcome.ok, [&] { return "tower " + in.dump() + ": " + outcome.failure; });
    }
    return t.finish();
}

BundleP1 random_bundle(Rng& rng, const Field& k, std::size_t max_rank)
{
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<std::int64_t>(max_rank)));
    return BundleP1(gen::transition_matrix(rng, k, r, -3, 3));
}

CheckResult h0_monotone(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        BundleP1 top = random_bundle(rng, k, 3);
        t.input(bundle_to_json(top));
        TowerReport rep = check_h0_decreasing(pullback_tower(top, 3));
        t.expect(rep.passed, [&] { return "bundle " + bundle_to_json(top).dump() + ": " + rep.failure; });
    }
    return t.finish();
}

bool divides(std::int64_t d, std::int64_t v) { return v % d == 0; }

CheckResult rigidity(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        const auto n = static_cast<std::uint32_t>(gen::uniform(rng, 1, 3));
        BundleP1 top = random_bundle(rng, k, 3);
        t.input(bundle_to_json(top));
        FdivTowerP1 tower = pullback_tower(top, n);
        std::int64_t pn = 1;
        for (std::uint32_t i = 0; i < n; ++i) pn *= k.characteristic();
        const std::string where = "tower over " + bundle_to_json(top).dump() + " of length " + str(n);
        t.expect(divides(pn, degree(tower.bundles.front())), [&] { return where + ": p^N does not divide deg E_0"; });
        for (auto a : birkhoff_split(tower.bundles.front())) {
            t.expect(divides(pn, a), [&] { return where + ": p^N does not divide a splitting exponent of E_0"; });
        }
        t.expect(check_numerical_triviality(tower).passed, [&] { return where + ": numerical triviality"; });
        t.expect(fdiv_rigidity(tower).passed, [&] { return where + ": rigidity report"; });
    }
    std::vector<Field> fields{Field::prime(2), Field::prime(3), f4(), f9()};
    for (int trial = 0; trial < 40; ++trial) {
        const Field& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        FdivTowerP1 tower = gen::periodic_tower(rng, k, static_cast<std::size_t>(gen::uniform(rng, 1, 3)),
                                                static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
        t.input(tower_to_json(tower));
        for (const auto& b : tower.bundles) {
            t.expect(degree(b) == 0, [&] { return "periodic level of nonzero degree: " + bundle_to_json(b).dump(); });
            auto a = birkhoff_split(b);
            t.expect(std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; }),
                     [&] { return "periodic level not trivial: " + bundle_to_json(b).dump(); });
        }
        t.expect(fdiv_rigidity(tower).passed, [&] { return "periodic rigidity report"; });
    }
    for (int trial = 0; trial < 20; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        BundleP1 b = random_bundle(rng, k, 3);
        while (degree(b) == 0) b = random_bundle(rng, k, 3);
        t.input(bundle_to_json(b));
        bool rejected = false;
        try {
            periodic_tower({b}, {Matrix::identity(k, b.rank())});
        } catch (const InvalidTower&) {
            rejected = true;
        }
        t.expect(rejected, [&] { return "periodic tower accepted on " + bundle_to_json(b).dump(); });
    }
    return t.finish();
}

// Degree-zero bundle U diag(x^a) V with sum a = 0, U in GL(k[x]), V in GL(k[1/x]).
BundleP1 degree_zero_bundle(Rng& rng, const Field& k)
{
    const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::vector<std::int64_t> a(r, 0);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        a[i] = gen::uniform(rng, -2, 2);
        a[r - 1] -= a[i];
    }
    LaurentMatrix u = gen::unimodular_matrix(rng, k, r, 1);
    LaurentMatrix v = gen::invert_variable(gen::unimodular_matrix(rng, k, r, 1));
    return BundleP1(u * LaurentMatrix::diagonal_monomials(k, a) * v);
}

CheckResult hilbert_polynomial(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 6);
    std::vector<FdivTowerP1> towers;
    std::vector<Field> fields{Field::prime(2), Field::prime(3), f4(), f9()};
    for (int trial = 0; trial < 20; ++trial) {
        const Field& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        towers.push_back(gen::periodic_tower(rng, k, static_cast<std::size_t>(gen::uniform(rng, 1, 3)),
                                             static_cast<std::size_t>(gen::uniform(rng, 1, 3))));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const Field k = Field::prime(trial % 2 == 0 ? 2 : 3);
        towers.push_back(pullback_tower(degree_zero_bundle(rng, k), static_cast<std::uint32_t>(gen::uniform(rng, 1, 2))));
    }
    for (const auto& tower : towers) {
        t.input(tower_to_json(tower));
        for (std::size_t n = 0; n < tower.bundles.size(); ++n) {
            const BundleP1& e = tower.bundles[n];
            const auto r = static_cast<std::int64_t>(e.rank());
            for (std::int64_t tw = -5; tw <= 5; ++tw) {
                std::int64_t chi = euler_char(e, tw);
                t.expect(chi == r * (tw + 1), [&] {
                    return "chi(E_" + std::to_string(n) + "(" + str(tw) + ")) = " + str(chi) + " for " +
                           bundle_to_json(e).dump();
                });
            }
        }
    }
    return t.finish();
}

CheckResult splitting_oracle(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 7);
    std::vector<Field> fields{Field::prime(2), Field::prime(3), f4(), Field::prime(5)};
    for (int trial = 0; trial < 100; ++trial) {
        const Field& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        BundleP1 e = random_bundle(rng, k, 3);
        t.input(bundle_to_json(e));
        BirkhoffFactorization f = birkhoff_factor(e);
        LaurentMatrix residual = f.u * LaurentMatrix::diagonal_monomials(k, f.splitting) * f.v - e.transition;
        t.expect(residual.is_zero(), [&] { return "U diag V != T for " + bundle_to_json(e).dump(); });
        t.expect(birkhoff_split(e) == splitting_from_h0(e), [&] { return "splittings disagree for " + bundle_to_json(e).dump(); });
    }
    return t.finish();
}

CheckResult spectral_bounds(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        SpectralPage e = gen::spectral_page(rng, 5, 5, 4);
        const std::uint64_t seed = rng();
        t.input(page_to_json(e));
        Simulation sim = simulate(e, seed);
        std::int64_t chi_page = 0;
        for (std::size_t s = 0; s <= e.max_s(); ++s) {
            for (std::size_t q = 0; q <= e.max_t(); ++q) chi_page += ((s + q) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(e.at(s, q));
        }
        std::int64_t chi_h = 0;
        for (std::size_t n = 0; n < sim.abutment.size(); ++n) {
            const auto d = static_cast<std::int64_t>(n);
            chi_h += (n % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(sim.abutment[n]);
            t.expect(sim.abutment[n] <= bound_upper(e, d),
                     [&] { return "upper bound fails at n=" + str(d) + " for " + page_to_json(e).dump(); });
            t.expect(bound_edge(e, d, sim.abutment[n]).holds,
                     [&] { return "edge bound fails at n=" + str(d) + " for " + page_to_json(e).dump(); });
        }
        t.expect(chi_h == chi_page, [&] { return "Euler characteristic changed for " + page_to_json(e).dump(); });
    }
    return t.finish();
}

CheckResult inverse_limit_bound(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 9);
    std::vector<Field> fields{Field::prime(2), Field::prime(3), f4()};
    for (int trial = 0; trial < 200; ++trial) {
        const Field& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        TwistedTower tower = gen::twisted_tower(rng, k, 6, 12);
        const json in = twisted_tower_to_json(tower);
        t.input(in);
        BoundReport b = bound_check(tower);
        t.expect(b.passed, [&] { return "dim lim > sup dim V_i for " + in.dump(); });
        MLReport ml = check_ml(tower);
        t.expect(ml.holds && ml.levels.size() == tower.level_count(), [&] { return "no certificate for " + in.dump(); });
        for (const auto& s : ml.levels) {
            bool ok = s.steps < s.image_dims.size();
            for (std::size_t j = s.steps; ok && j < s.image_dims.size(); ++j) ok = s.image_dims[j] == s.basis.cols();
            t.expect(ok, [&] { return "image chain at level " + std::to_string(s.level) + " unstable for " + in.dump(); });
        }
    }
    return t.finish();
}

CheckResult dmod_finiteness(const CheckConfig& cfg)
{
    Tally t;
    Rng rng = rng_for(cfg, 10);
    std::vector<FdivTowerP1> towers;
    std::vector<Field> fields{Field::prime(2), Field::prime(3), f4(), f9()};
    for (const Field& k : fields) {
        for (std::size_t r = 1; r <= 3; ++r) {
            towers.push_back(periodic_tower({split_bundle(k, std::vector<std::int64_t>(r, 0))}, {Matrix::identity(k, r)}));
        }
    }
    for (int trial = 0; trial < 40; ++trial) {
        const Field& k = fields[static_cast<std::size_t>(trial) % fields.size()];
        towers.push_back(gen::periodic_tower(rng, k, static_cast<std::size_t>(gen::uniform(rng, 1, 3)),
                                             static_cast<std::size_t>(gen::uniform(rng, 1, 3))));
    }
    for (const auto& tower : towers) {
        const json in = tower_to_json(tower);
        t.input(in);
        json rep = finiteness_report(tower);
        t.expect(rep["finite"].get<bool>(), [&] { return "not finite: " + in.dump(); });
        for (const auto& d : rep["degrees"]) {
            const auto i = d["degree"].get<std::size_t>();
            const auto dim = d["dim"].get<std::size_t>();
            t.expect(d["r1lim"].get<std::size_t>() == 0, [&] { return "R^1lim nonzero: " + in.dump(); });
            t.expect(d["dim"] == d["lim"].get<std::size_t>() + d["r1lim"].get<std::size_t>(),
                     [&] { return "exact sequence dimensions do not add up: " + in.dump(); });
            t.expect(d["exact"].get<bool>(), [&] { return "periodic answer flagged inexact: " + in.dump(); });
            if (i == 0) {
                t.expect(dim <= tower.rank(), [&] { return "H^0_D exceeds the rank: " + in.dump(); });
            } else {
                t.expect(dim == 0, [&] { return "H^" + std::to_string(i) + "_D nonzero: " + in.dump(); });
            }
        }
        for (const auto& c : rep["certificates"]) {
            t.expect(c["mittag_leffler"].get<bool>() && !c["levels"].empty(),
                     [&] { return "missing Mittag-Leffler certificate: " + in.dump(); });
        }
    }
    return t.finish();
}

CheckResult affine_pathology(const CheckConfig&)
{
    Tally t;
    for (std::uint32_t p : {2u, 3u}) {
        std::vector<std::int64_t> ladder;
        std::int64_t d = 1;
        for (int j = 1; j <= 4; ++j) ladder.push_back(d *= p);
        std::int64_t previous = -1;
        for (std::int64_t deg : ladder) {
            std::int64_t w = h1d_affine_witness(p, deg);
            t.expect(w == deg - deg / p, [&] { return "witness(p=" + str(p) + ", d=" + str(deg) + ") = " + str(w); });
            t.expect(w > previous, [&] { return "witness not increasing at p=" + str(p) + ", d=" + str(deg); });
            previous = w;
        }
        AffineReport r = affine_report(trivial_dmodule(Field::prime(p), 1, 5), ladder);
        for (const auto& step : r.ladder) {
            t.expect(static_cast<std::int64_t>(step.witness) == h1d_affine_witness(p, step.degree),
                     [&] { return "slice witness disagrees at p=" + str(p) + ", d=" + str(step.degree); });
        }
        t.expect(r.growth_observed && r.h0_stable && r.ladder.front().h0 == 1,
                 [&] { return "affine report for the trivial module at p=" + str(p); });
    }
    return t.finish();
}

CheckResult determinism(const CheckConfig& cfg)
{
    Tally t;
    for (const auto& def : checks()) {
        if (def.name == "determinism") continue;
        json first = check_result_to_json(run_check(def, cfg));
        json second = check_result_to_json(run_check(def, cfg));
        t.input(first);
        t.expect(first == second, [&] { return def.name + " differs between two runs with seed " + std::to_string(cfg.seed); });
    }
    return t.finish();
}

} // namespace

const std::vector<CheckDef>& checks()
{
    static const std::vector<CheckDef> all = {
        {1, "operator-relations", "D_k D_l = C(k+l, k) D_{k+l}", operator_relations},
        {2, "lucas", "C(l, k) mod p is the product of the binomials of base-p digits", lucas},
        {3, "dmod-fdiv-roundtrip", "O-coherent D-modules on the affine line and F-divided towers determine each other",
         dmod_roundtrip},
        {4, "h0-monotone", "h^0(E_n) is nonincreasing along an F-divided tower on the projective line", h0_monotone},
        {5, "rigidity", "p^N divides deg E_0 and its splitting exponents; periodic towers are trivial", rigidity},
        {6, "hilbert-polynomial", "chi(E_n(t)) = rk (t + 1) on every level of an F-divided bundle", hilbert_polynomial},
        {7, "splitting-oracle", "Birkhoff factorization agrees with the splitting read off h^0 of twists", splitting_oracle},
        {8, "spectral-bounds", "first-quadrant E_2 bounds on dim H^n and on the edge map", spectral_bounds},
        {9, "inverse-limit-bound", "dim lim V_i <= sup dim V_i, with stabilizing image chains", inverse_limit_bound},
        {10, "dmod-finiteness", "H^i_D of an F-divided bundle on the projective line is finite dimensional", dmod_finiteness},
        {11, "affine-pathology", "degree-one witnesses on the affine line grow without bound", affine_pathology},
        {12, "determinism", "seeded runs are reproducible", determinism},
    };
    return all;
}

CheckResult run_check(const CheckDef& def, const CheckConfig& config)
{
    CheckResult r;
    try {
        r = def.run(config);
    } catch (const std::exception& e) {
        r.passed = false;
        r.failure = std::string("exception: ") + e.what();
    }
    r.name = def.name;
    r.statement = def.statement;
    return r;
}

std::vector<CheckResult> run_checks(const CheckConfig& config, const std::vector<std::string>& only)
{
    for (const auto& name : only) {
        bool known = std::any_of(checks().begin(), checks().end(), [&](const CheckDef& d) { return d.name == name; });
        if (!known) throw InvalidInput("unknown check \"" + name + "\"");
    }
    std::vector<CheckResult> out;
    for (const auto& def : checks()) {
        if (!only.empty() && std::find(only.begin(), only.end(), def.name) == only.end()) continue;
        out.push_back(run_check(def, config));
    }
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

json check_result_to_json(const CheckResult& r)
{
    json j = {{"name", r.name},
              {"statement", r.statement},
              {"passed", r.passed},
              {"cases", r.cases},
              {"inputs_digest", r.digest}};
    if (!r.passed) j["failure"] = r.failure;
    return j;
}

json report_to_json(const CheckConfig& config, const std::vector<CheckResult>& results)
{
    json list = json::array();
    bool passed = true;
    for (const auto& r : results) {
        list.push_back(check_result_to_json(r));
        passed = passed && r.passed;
    }
    return {{"seed", config.seed}, {"passed", passed}, {"checks", list}};
}

} // namespace frobdiv::verify
