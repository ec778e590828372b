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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/dcoh/cohomology.hpp"
#include "fdiv/diffops/operator.hpp"
#include "fdiv/dmod/extraction.hpp"
#include "fdiv/error.hpp"
#include "fdiv/spectral/spectral.hpp"
#include "fdiv/towers/twisted.hpp"
#include "fdiv/verify/checks.hpp"
#include "fdiv/verify/generators.hpp"

namespace {

using namespace frobdiv;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Bad invocation or unreadable input; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string field = R"({"p":2})";
    std::uint64_t seed = 42;
    bool json_mode = false;
    bool table_mode = false;
    std::int64_t cap = 2;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw UsageError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": JSON parse error: " +
                         e.what());
    }
}

Field global_field(const Globals& g)
{
    json j;
    try {
        j = json::parse(g.field);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--field: JSON parse error: ") + e.what());
    }
    return field_from_json(j);
}

/// The "field" key of an input object wins over --field.
Field field_for(const json& input, const Globals& g)
{
    if (input.is_object() && input.contains("field")) return field_from_json(input["field"]);
    return global_field(g);
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    const bool leaf_array = j.is_array() && std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (j.is_object() && !j.empty()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array() && !leaf_array) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void emit(const Globals& g, json result)
{
    json out = {{"schema", "fdiv/1"}, {"seed", g.seed}};
    for (auto& [key, value] : result.items()) out[key] = value;
    if (g.table_mode) {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(out, "", rows);
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.first.size());
        for (const auto& [key, value] : rows) std::cout << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    } else {
        std::cout << out.dump(2) << '\n';
    }
}

/// Either {"field": ..., "<key>": payload} or the bare payload.
json payload(const json& j, const char* key)
{
    if (j.is_object() && j.contains(key)) return j[key];
    if (j.is_object() && j.contains("field")) {
        json rest = j;
        rest.erase("field");
        return rest;
    }
    return j;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError(flag + ": \"" + item + "\" is not an integer");
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

std::vector<LaurentMatrix> matrix_list_from_json(const json& j, const Field& k)
{
    const json& list = j.is_object() && j.contains("tower") ? j["tower"] : j;
    if (!list.is_array()) throw InvalidInput("tower must be a JSON list of matrices");
    std::vector<LaurentMatrix> out;
    for (const auto& m : list) out.push_back(laurent_matrix_from_json(k, m));
    return out;
}

int run_relations(const Globals& g, std::uint32_t p, std::uint64_t max_order, std::int64_t max_degree)
{
    const Field k = Field::prime(p);
    std::size_t checked = 0;
    json failure;
    for (std::uint64_t a = 0; a <= max_order && failure.is_null(); ++a) {
        for (std::uint64_t b = 0; b <= max_order && failure.is_null(); ++b) {
            const FieldElement c = k.from_int(binom_mod_p(a + b, a, p));
            for (std::int64_t m = 0; m <= max_degree; ++m) {
                ++checked;
                const LaurentPoly xm = LaurentPoly::x_power(k, m);
                if (!(apply_basis(a, apply_basis(b, xm)) == apply_basis(a + b, xm).scaled(c))) {
                    failure = {{"k", a}, {"l", b}, {"monomial", m}};
                    break;
                }
            }
        }
    }
    json out = {{"p", p}, {"max_order", max_order}, {"max_degree", max_degree}, {"checked", checked},
                {"passed", failure.is_null()}};
    if (!failure.is_null()) out["failure"] = failure;
    emit(g, out);
    return failure.is_null() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    Globals g;
    CLI::App app{"fdiv: divided-power differential operators, F-divided bundles and their cohomology over finite fields"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.add_option("--field", g.field, "Field as JSON, e.g. '{\"p\":2,\"e\":2}' (modulus optional)")->capture_default_str();
    app.add_option("--seed", g.seed, "64-bit seed, recorded in every output")->capture_default_str();
    auto* json_flag = app.add_flag("--json", g.json_mode, "JSON output (default)");
    app.add_flag("--table", g.table_mode, "Human-readable key/value table")->excludes(json_flag);
    app.add_option("--cap", g.cap, "Cohomology degree cap")->check(CLI::PositiveNumber)->capture_default_str();

    std::function<int()> action;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // diffop
    CLI::App* diffop = sub(&app, "diffop", "Divided-power differential operators on the affine line");
    diffop->require_subcommand(1);
    std::string op_a;
    std::string op_b;
    std::string poly_file;
    std::uint32_t p = 2;
    std::uint64_t max_order = 25;
    std::int64_t max_degree = 60;
    std::uint64_t j_index = 0;
    {
        CLI::App* c = sub(diffop, "compose", "Compose two operators given as {\"k\": poly} JSON");
        c->add_option("--a", op_a, "Left operator file")->required();
        c->add_option("--b", op_b, "Right operator file")->required();
        c->callback([&] {
            action = [&] {
                json ja = read_json_file(op_a);
                const Field k = field_for(ja, g);
                const DividedOperator a = operator_from_json(k, payload(ja, "operator"));
                const DividedOperator b = operator_from_json(k, payload(read_json_file(op_b), "operator"));
                emit(g, {{"operator", operator_to_json(compose(a, b))}});
                return kExitOk;
            };
        });
        CLI::App* ap = sub(diffop, "apply", "Apply an operator to a polynomial");
        ap->add_option("--op", op_a, "Operator file")->required();
        ap->add_option("--poly", poly_file, "Polynomial file ({\"exp\": coeff})")->required();
        ap->callback([&] {
            action = [&] {
                json jo = read_json_file(op_a);
                const Field k = field_for(jo, g);
                const LaurentPoly f = poly_from_json(k, payload(read_json_file(poly_file), "poly"));
                emit(g, {{"result", poly_to_json(apply(operator_from_json(k, payload(jo, "operator")), f))}});
                return kExitOk;
            };
        });
        CLI::App* rel = sub(diffop, "check-relations", "Check D_k D_l = C(k+l,k) D_{k+l} on monomials");
        rel->add_option("--p", p, "Characteristic")->capture_default_str();
        rel->add_option("--max-order", max_order, "Largest k and l")->capture_default_str();
        rel->add_option("--max-degree", max_degree, "Largest monomial degree")->capture_default_str();
        rel->callback([&] { action = [&] { return run_relations(g, p, max_order, max_degree); }; });
        CLI::App* dec = sub(diffop, "decompose", "Write D_j as a unit times a product of generators D_{p^m}");
        dec->add_option("--p", p, "Characteristic")->capture_default_str();
        dec->add_option("--j", j_index, "Operator index")->required();
        dec->callback([&] {
            action = [&] {
                if (!is_prime(p)) throw UsageError("--p must be prime");
                emit(g, {{"product", generator_product_to_json(decompose_generator_product(j_index, p))}});
                return kExitOk;
            };
        });
    }

    // dmod
    CLI::App* dmod = sub(&app, "dmod", "O-coherent D-modules on the affine line");
    dmod->require_subcommand(1);
    std::string module_file;
    std::string tower_file;
    std::uint32_t level = 0;
    std::int64_t degree_bound = 4;
    std::int64_t test_degree = kDefaultTestDegree;
    {
        CLI::App* v = sub(dmod, "validate", "Check Leibniz, commutation and p-nilpotence");
        v->add_option("--module", module_file, "Presentation file")->required();
        v->add_option("--degree", test_degree, "Test section degree")->capture_default_str();
        v->callback([&] {
            action = [&] {
                ValidationReport r = validate_dmodule(presentation_from_json(read_json_file(module_file)), test_degree);
                emit(g, validation_to_json(r));
                return r.passed ? kExitOk : kExitCheckFailed;
            };
        });
        CLI::App* e = sub(dmod, "extract", "Extract the level-n bundle of horizontal sections");
        e->add_option("--module", module_file, "Presentation file")->required();
        e->add_option("--level", level, "Level n")->required();
        e->add_option("--degree", degree_bound, "Starting degree bound")->capture_default_str();
        e->callback([&] {
            action = [&] {
                auto m = presentation_from_json(read_json_file(module_file));
                emit(g, {{"level", extracted_level_to_json(extract_level(m, level, degree_bound))}});
                return kExitOk;
            };
        });
        CLI::App* f = sub(dmod, "from-tower", "Presentation of the D-module of an F-divided tower (list of matrices)");
        f->add_option("--tower", tower_file, "Tower file")->required();
        f->callback([&] {
            action = [&] {
                json jt = read_json_file(tower_file);
                const Field k = field_for(jt, g);
                emit(g, {{"module", presentation_to_json(dmod_from_tower(matrix_list_from_json(jt, k), k))}});
                return kExitOk;
            };
        });
        CLI::App* w = sub(dmod, "witness", "dim k[x]_{<=d} / k[x^p]_{<=d} by monomial linear algebra");
        w->add_option("--p", p, "Characteristic")->capture_default_str();
        w->add_option("--degree", degree_bound, "Truncation degree d")->required();
        w->callback([&] {
            action = [&] {
                if (!is_prime(p)) throw UsageError("--p must be prime");
                emit(g, {{"p", p}, {"degree", degree_bound}, {"witness", h1d_affine_witness(p, degree_bound)}});
                return kExitOk;
            };
        });
    }

    // p1
    CLI::App* p1 = sub(&app, "p1", "Vector bundles and F-divided towers on the projective line");
    p1->require_subcommand(1);
    std::string bundle_file;
    int coh_degree = 0;
    std::int64_t twist = 0;
    std::uint32_t pullbacks = 1;
    {
        CLI::App* s = sub(p1, "split", "Grothendieck splitting by Birkhoff factorization");
        s->add_option("--bundle", bundle_file, "Bundle file")->required();
        s->callback([&] {
            action = [&] {
                json jb = read_json_file(bundle_file);
                BundleP1 e = bundle_from_json(jb, field_for(jb, g));
                BirkhoffFactorization f = birkhoff_factor(e);
                emit(g, {{"splitting", f.splitting},
                         {"u", laurent_matrix_to_json(f.u)},
                         {"v", laurent_matrix_to_json(f.v)},
                         {"steps", f.steps}});
                return kExitOk;
            };
        });
        CLI::App* c = sub(p1, "cohomology", "dim H^i(E(t)) by Cech linear algebra");
        c->add_option("--bundle", bundle_file, "Bundle file")->required();
        c->add_option("--i", coh_degree, "Degree 0 or 1")->check(CLI::Range(0, 1))->capture_default_str();
        c->add_option("--twist", twist, "Twist t")->capture_default_str();
        c->callback([&] {
            action = [&] {
                json jb = read_json_file(bundle_file);
                BundleP1 e = bundle_from_json(jb, field_for(jb, g));
                emit(g, {{"i", coh_degree}, {"twist", twist}, {"dim", cech_h(e, coh_degree, twist)}});
                return kExitOk;
            };
        });
        CLI::App* pb = sub(p1, "pullback", "Frobenius pullback F^n* E");
        pb->add_option("--bundle", bundle_file, "Bundle file")->required();
        pb->add_option("--n", pullbacks, "Number of pullbacks")->capture_default_str();
        pb->callback([&] {
            action = [&] {
                json jb = read_json_file(bundle_file);
                emit(g, {{"bundle", bundle_to_json(frobenius_pullback(bundle_from_json(jb, field_for(jb, g)), pullbacks))}});
                return kExitOk;
            };
        });
        CLI::App* ct = sub(p1, "check-tower", "h^0 monotonicity, numerical triviality and rigidity of a tower");
        ct->add_option("--tower", tower_file, "Tower file")->required();
        ct->callback([&] {
            action = [&] {
                json jt = read_json_file(tower_file);
                FdivTowerP1 t = tower_from_json(jt, field_for(jt, g));
                json out = json::object();
                bool passed = true;
                auto record = [&](const char* name, const std::function<TowerReport()>& run) {
                    try {
                        TowerReport r = run();
                        out[name] = {{"passed", r.passed}, {"values", r.values}, {"details", r.details}};
                        if (!r.passed) out[name]["failure"] = r.failure;
                        passed = passed && r.passed;
                    } catch (const InvalidTower& e) {
                        out[name] = {{"passed", false}, {"failure", e.what()}};
                        passed = false;
                    }
                };
                record("h0_decreasing", [&] { return check_h0_decreasing(t); });
                record("numerical_triviality", [&] { return check_numerical_triviality(t); });
                record("rigidity", [&] { return fdiv_rigidity(t); });
                out["passed"] = passed;
                emit(g, out);
                return passed ? kExitOk : kExitCheckFailed;
            };
        });
        CLI::App* eu = sub(p1, "euler", "chi(E(t)) = h^0 - h^1 by Cech linear algebra");
        eu->add_option("--bundle", bundle_file, "Bundle file")->required();
        eu->add_option("--twist", twist, "Twist t")->capture_default_str();
        eu->callback([&] {
            action = [&] {
                json jb = read_json_file(bundle_file);
                BundleP1 e = bundle_from_json(jb, field_for(jb, g));
                emit(g, {{"twist", twist}, {"chi", euler_char(e, twist)}, {"rank", e.rank()}, {"degree", degree(e)}});
                return kExitOk;
            };
        });
    }

    // tower
    CLI::App* tower = sub(&app, "tower", "Frobenius-twisted inverse systems of finite-dimensional spaces");
    tower->require_subcommand(1);
    std::size_t tower_level = 0;
    {
        auto load = [&] {
            json jt = read_json_file(tower_file);
            return twisted_tower_from_json(jt, field_for(jt, g));
        };
        CLI::App* st = sub(tower, "stable", "Stable subspace of one level");
        st->add_option("--tower", tower_file, "Tower file")->required();
        st->add_option("--level", tower_level, "Level i")->capture_default_str();
        st->callback([&, load] {
            action = [&, load] {
                StableSubspace s = stable_subspace(load(), tower_level);
                emit(g, {{"level", s.level},
                         {"dim", s.basis.cols()},
                         {"basis", matrix_to_json(s.basis)},
                         {"stabilizes_at", s.steps},
                         {"exact", s.exact},
                         {"convention", "v -> M Frob^t(v)"}});
                return kExitOk;
            };
        });
        CLI::App* ml = sub(tower, "ml", "Mittag-Leffler certificate");
        ml->add_option("--tower", tower_file, "Tower file")->required();
        ml->callback([&, load] {
            action = [&, load] {
                MLReport r = check_ml(load());
                emit(g, ml_report_to_json(r));
                return r.holds ? kExitOk : kExitCheckFailed;
            };
        });
        CLI::App* li = sub(tower, "lim", "Dimension of the inverse limit");
        li->add_option("--tower", tower_file, "Tower file")->required();
        li->callback([&, load] {
            action = [&, load] {
                LimitDim l = lim_dim(load());
                emit(g, {{"dim", l.dim}, {"exact", l.exact}});
                return kExitOk;
            };
        });
        CLI::App* r1 = sub(tower, "r1lim", "Dimension of the first derived limit, with its certificate");
        r1->add_option("--tower", tower_file, "Tower file")->required();
        r1->callback([&, load] {
            action = [&, load] {
                R1Lim r = r1lim_dim(load());
                emit(g, {{"dim", r.dim}, {"certificate", ml_report_to_json(r.certificate)}});
                return kExitOk;
            };
        });
        CLI::App* bo = sub(tower, "bound", "dim lim <= sup dim V_i");
        bo->add_option("--tower", tower_file, "Tower file")->required();
        bo->callback([&, load] {
            action = [&, load] {
                BoundReport b = bound_check(load());
                emit(g, {{"passed", b.passed}, {"lim", b.lim.dim}, {"exact", b.lim.exact}, {"sup_dim", b.sup_dim}});
                return b.passed ? kExitOk : kExitCheckFailed;
            };
        });
    }

    // spectral
    CLI::App* spectral = sub(&app, "spectral", "First-quadrant spectral sequence bounds and simulation");
    spectral->require_subcommand(1);
    std::string page_file;
    std::string abutment_file;
    std::int64_t total_degree = 0;
    {
        CLI::App* b = sub(spectral, "bounds", "Upper and edge bounds for dim H^n");
        b->add_option("--page", page_file, "E_2 page file")->required();
        b->add_option("--n", total_degree, "Total degree n")->required();
        b->add_option("--abutment", abutment_file, "JSON list of dim H^0, dim H^1, ...");
        b->callback([&] {
            action = [&] {
                SpectralPage e = page_from_json(read_json_file(page_file));
                json out = {{"n", total_degree}, {"upper", bound_upper(e, total_degree)}};
                int code = kExitOk;
                if (!abutment_file.empty()) {
                    json h = read_json_file(abutment_file);
                    if (!h.is_array()) throw InvalidInput("abutment must be a JSON list of dimensions");
                    std::size_t hn = 0;
                    if (total_degree >= 0 && static_cast<std::size_t>(total_degree) < h.size()) {
                        hn = h[static_cast<std::size_t>(total_degree)].get<std::size_t>();
                    }
                    EdgeBound eb = bound_edge(e, total_degree, hn);
                    out["abutment"] = hn;
                    out["upper_holds"] = hn <= bound_upper(e, total_degree);
                    out["edge"] = {{"edge", eb.edge}, {"correction", eb.correction}, {"holds", eb.holds}, {"slack", eb.slack}};
                    if (!eb.holds || !out["upper_holds"].get<bool>()) code = kExitCheckFailed;
                }
                emit(g, out);
                return code;
            };
        });
        CLI::App* s = sub(spectral, "simulate", "Seeded simulation of pages E_2 .. E_{N+2}");
        s->add_option("--page", page_file, "E_2 page file (random M, N <= 5, entries <= 4 if absent)");
        s->callback([&] {
            action = [&] {
                SpectralPage e(0, 0);
                if (page_file.empty()) {
                    Rng rng(g.seed);
                    e = gen::spectral_page(rng, 5, 5, 4);
                } else {
                    e = page_from_json(read_json_file(page_file));
                }
                emit(g, {{"simulation", simulation_to_json(simulate(e, g.seed))}});
                return kExitOk;
            };
        });
    }

    // dcoh
    CLI::App* dcoh = sub(&app, "dcoh", "D-module cohomology from cohomology towers");
    dcoh->require_subcommand(1);
    std::string truncations = "4,8,16";
    std::string towers_file;
    {
        CLI::App* pp = sub(dcoh, "p1", "Finiteness report for an F-divided tower on the projective line");
        pp->add_option("--tower", tower_file, "Tower file")->required();
        pp->callback([&] {
            action = [&] {
                json jt = read_json_file(tower_file);
                emit(g, finiteness_report(tower_from_json(jt, field_for(jt, g)), static_cast<std::size_t>(g.cap)));
                return kExitOk;
            };
        });
        CLI::App* af = sub(dcoh, "affine", "Horizontal sections and degree-one witnesses on the affine line");
        af->add_option("--module", module_file, "Presentation file")->required();
        af->add_option("--truncations", truncations, "Comma-separated truncation degrees")->capture_default_str();
        af->callback([&] {
            action = [&] {
                auto m = presentation_from_json(read_json_file(module_file));
                emit(g, finiteness_report(m, parse_int_list(truncations, "--truncations")));
                return kExitOk;
            };
        });
        CLI::App* ft = sub(dcoh, "from-towers", "Assemble dimensions from user-supplied towers, one per degree");
        ft->add_option("towers", towers_file, "Tower set file")->required();
        ft->callback([&] {
            action = [&] {
                json js = read_json_file(towers_file);
                CohomologyTowerSet s = tower_set_from_json(js, field_for(js, g));
                json degrees = json::array();
                for (const auto& d : dcoh_dims(s, static_cast<std::size_t>(g.cap))) degrees.push_back(degree_dims_to_json(d));
                emit(g, {{"provenance", provenance_name(s.provenance)}, {"degrees", degrees}});
                return kExitOk;
            };
        });
    }

    // verify-paper
    std::vector<std::string> only;
    std::string fault;
    {
        CLI::App* v = sub(&app, "verify-paper", "Run every acceptance check and print a pass/fail table");
        v->add_option("--only", only, "Run only the named checks (repeatable or comma-separated)")->delimiter(',');
        v->add_option("--inject-fault", fault, "Test fixture")->group("");
        v->callback([&] {
            action = [&] {
                verify::CheckConfig cfg;
                cfg.seed = g.seed;
                if (fault == "relation-table") {
                    cfg.corrupt_relations = true;
                } else if (!fault.empty()) {
                    throw UsageError("unknown fault \"" + fault + "\"");
                }
                auto results = verify::run_checks(cfg, only);
                json report = verify::report_to_json(cfg, results);
                if (g.json_mode) {
                    emit(g, report);
                } else {
                    std::size_t width = 0;
                    for (const auto& r : results) width = std::max(width, r.name.size());
                    std::cout << "seed " << g.seed << '\n';
                    for (const auto& r : results) {
                        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
                                  << r.cases << " cases  " << r.statement << '\n';
                    }
                }
                for (const auto& r : results) {
                    if (!r.passed) {
                        std::cerr << "first failure in " << r.name << ": " << r.failure << '\n';
                        return kExitCheckFailed;
                    }
                }
                return kExitOk;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "fdiv: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "fdiv: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidField& e) {
        std::cerr << "fdiv: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "fdiv: malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "fdiv: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}
