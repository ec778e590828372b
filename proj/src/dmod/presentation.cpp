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

#include "fdiv/dmod/presentation.hpp"

#include <sstream>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/diffops/operator.hpp"
#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

std::uint64_t level_bound(std::uint32_t p, std::uint32_t levels)
{
    std::uint64_t b = 1;
    for (std::uint32_t i = 0; i < levels; ++i) {
        b *= p;
        if (b > (std::uint64_t{1} << 16)) throw InvalidInput("p^levels exceeds 65536");
    }
    return b;
}

void add_into(Section& out, const Section& s)
{
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s[i];
}

Section scale(const Section& s, const LaurentPoly& f)
{
    Section out;
    out.reserve(s.size());
    for (const auto& g : s) out.push_back(f * g);
    return out;
}

} // namespace

DModulePresentation trivial_dmodule(const Field& k, std::size_t rank, std::uint32_t levels)
{
    DModulePresentation m{k, rank, levels, {}};
    for (std::uint32_t i = 0; i < levels; ++i) m.actions.emplace_back(k, rank, rank);
    return m;
}

void check_presentation(const DModulePresentation& m)
{
    if (m.rank == 0) throw InvalidInput("presentation rank must be positive");
    if (m.levels == 0) throw InvalidInput("presentation level bound must be positive");
    if (m.actions.size() != m.levels)
        throw InvalidInput("expected " + std::to_string(m.levels) + " action matrices, got " +
                           std::to_string(m.actions.size()));
    for (const auto& a : m.actions) {
        if (a.rows() != m.rank || a.cols() != m.rank) throw InvalidInput("action matrix has the wrong shape");
        if (!a.is_polynomial()) throw InvalidInput("action matrix entries must be polynomials");
        if (!(a.field() == m.field)) throw InvalidInput("action matrix over a different field");
    }
    level_bound(m.field.characteristic(), m.levels);
}

Section zero_section(const Field& k, std::size_t rank) { return Section(rank, LaurentPoly(k)); }

Section monomial_section(const Field& k, std::size_t rank, std::size_t c, std::int64_t exponent)
{
    Section s = zero_section(k, rank);
    s[c] = LaurentPoly::x_power(k, exponent);
    return s;
}

bool is_zero_section(const Section& s)
{
    for (const auto& f : s)
        if (!f.is_zero()) return false;
    return true;
}

std::string section_to_string(const Section& s)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << poly_to_json(s[i]).dump();
    out << ']';
    return out.str();
}

ActionTable::ActionTable(const DModulePresentation& m) : m_(m)
{
    check_presentation(m_);
    const Field& k = m_.field;
    const std::uint32_t p = k.characteristic();
    const std::uint64_t bound = level_bound(p, m_.levels);
    table_.reserve(bound);
    table_.push_back(LaurentMatrix::identity(k, m_.rank));
    std::uint64_t pm = 1;
    std::uint32_t m_star = 0;
    for (std::uint64_t t = 1; t < bound; ++t) {
        if (t == pm * p) {
            pm *= p;
            ++m_star;
        }
        if (t == pm) {
            table_.push_back(m_.actions[m_star]);
            continue;
        }
        const LaurentMatrix& rest = table_[t - pm];
        const FieldElement scale_back = k.inv(k.from_int(binom_mod_p(t, pm, p)));
        std::vector<std::vector<LaurentPoly>> cols;
        for (std::size_t c = 0; c < m_.rank; ++c) {
            Section v = apply(pm, rest.column(c));
            for (auto& f : v) f = f.scaled(scale_back);
            cols.push_back(std::move(v));
        }
        table_.push_back(LaurentMatrix::from_columns(k, m_.rank, cols));
    }
}

const LaurentMatrix& ActionTable::basis_action(std::uint64_t j) const
{
    if (j >= table_.size()) throw InvalidInput("operator index beyond the level bound");
    return table_[j];
}

Section ActionTable::apply(std::uint64_t j, const Section& s) const
{
    if (j >= table_.size() && j != 0) throw InvalidInput("operator index beyond the level bound");
    const Field& k = m_.field;
    Section out = zero_section(k, m_.rank);
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b].is_zero()) continue;
        const std::int64_t top = *s[b].max_exponent();
        for (std::uint64_t i = 0; i <= j && static_cast<std::int64_t>(i) <= top; ++i) {
            const LaurentPoly di = apply_basis(i, s[b]);
            if (di.is_zero()) continue;
            const LaurentMatrix& action = table_[j - i];
            for (std::size_t r = 0; r < m_.rank; ++r)
                if (!action(r, b).is_zero()) out[r] += di * action(r, b);
        }
    }
    return out;
}

Section ActionTable::apply_generator(std::uint32_t m, const Section& s) const
{
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= m_.field.characteristic();
    return apply(pm, s);
}

Section ActionTable::apply_composed(std::uint64_t j, const Section& s) const
{
    const Field& k = m_.field;
    const GeneratorProduct g = decompose_generator_product(j, k.characteristic());
    Section cur = s;
    for (const auto& [m, count] : g.factors)
        for (std::uint32_t i = 0; i < count; ++i) cur = apply_generator(m, cur);
    const FieldElement u = k.inv(k.from_int(g.unit));
    for (auto& f : cur) f = f.scaled(u);
    return cur;
}

ValidationReport validate_dmodule(const DModulePresentation& m, std::int64_t test_degree)
{
    if (test_degree < 0) throw InvalidInput("test degree must be nonnegative");
    const ActionTable table(m);
    const Field& k = m.field;
    const std::uint32_t p = k.characteristic();
    const std::uint64_t bound = table.bound();
    ValidationReport report;
    auto fail = [&](const char* check, const std::string& what) {
        report.passed = false;
        report.failed_check = check;
        report.failure = what;
    };

    // composed[j][b][c] = D_j(x^b e_c) as a product of generators.
    const std::int64_t span = 2 * test_degree;
    std::vector<std::vector<std::vector<Section>>> composed(bound);
    for (std::uint64_t j = 0; j < bound; ++j) {
        composed[j].resize(static_cast<std::size_t>(span + 1));
        for (std::int64_t b = 0; b <= span; ++b)
            for (std::size_t c = 0; c < m.rank; ++c)
                composed[j][static_cast<std::size_t>(b)].push_back(
                    table.apply_composed(j, monomial_section(k, m.rank, c, b)));
    }

    for (std::uint64_t j = 1; j < bound; ++j)
        for (std::int64_t a = 1; a <= test_degree; ++a)
            for (std::int64_t b = 0; b <= test_degree; ++b)
                for (std::size_t c = 0; c < m.rank; ++c) {
                    ++report.checks;
                    const Section& lhs = composed[j][static_cast<std::size_t>(a + b)][c];
                    Section rhs = zero_section(k, m.rank);
                    const LaurentPoly xa = LaurentPoly::x_power(k, a);
                    for (std::uint64_t i = 0; i <= j && static_cast<std::int64_t>(i) <= a; ++i) {
                        const LaurentPoly di = apply_basis(i, xa);
                        if (!di.is_zero()) add_into(rhs, scale(composed[j - i][static_cast<std::size_t>(b)][c], di));
                    }
                    if (lhs != rhs) {
                        fail("leibniz", "D_" + std::to_string(j) + "(x^" + std::to_string(a) + " * x^" +
                                            std::to_string(b) + " e_" + std::to_string(c) + ") = " +
                                            section_to_string(lhs) + " but the Leibniz expansion gives " +
                                            section_to_string(rhs));
                        return report;
                    }
                }

    for (std::uint32_t m1 = 0; m1 < m.levels; ++m1)
        for (std::uint32_t m2 = m1 + 1; m2 < m.levels; ++m2)
            for (std::int64_t b = 0; b <= test_degree; ++b)
                for (std::size_t c = 0; c < m.rank; ++c) {
                    ++report.checks;
                    const Section s = monomial_section(k, m.rank, c, b);
                    const Section x = table.apply_generator(m1, table.apply_generator(m2, s));
                    const Section y = table.apply_generator(m2, table.apply_generator(m1, s));
                    if (x != y) {
                        fail("commutation", "D_{p^" + std::to_string(m1) + "} and D_{p^" + std::to_string(m2) +
                                                "} do not commute on x^" + std::to_string(b) + " e_" +
                                                std::to_string(c) + ": " + section_to_string(x) + " vs " +
                                                section_to_string(y));
                        return report;
                    }
                }

    for (std::uint32_t g = 0; g < m.levels; ++g)
        for (std::int64_t b = 0; b <= test_degree; ++b)
            for (std::size_t c = 0; c < m.rank; ++c) {
                ++report.checks;
                Section s = monomial_section(k, m.rank, c, b);
                for (std::uint32_t i = 0; i < p; ++i) s = table.apply_generator(g, s);
                if (!is_zero_section(s)) {
                    fail("nilpotence", "D_{p^" + std::to_string(g) + "}^" + std::to_string(p) + "(x^" +
                                           std::to_string(b) + " e_" + std::to_string(c) + ") = " +
                                           section_to_string(s) + ", expected 0");
                    return report;
                }
            }
    return report;
}

LaurentMatrix cumulative_tower_product(const std::vector<LaurentMatrix>& tower, std::uint32_t n)
{
    if (tower.empty()) throw InvalidInput("empty tower");
    if (n > tower.size()) throw InvalidInput("tower product beyond the tower length");
    LaurentMatrix out = LaurentMatrix::identity(tower.front().field(), tower.front().rows());
    for (std::uint32_t i = 0; i < n; ++i) out = out * frobenius_pullback(tower[i], i);
    return out;
}

DModulePresentation dmod_from_tower(const std::vector<LaurentMatrix>& tower, const Field& k)
{
    if (tower.empty()) throw InvalidInput("dmod_from_tower needs at least one matrix");
    const std::size_t r = tower.front().rows();
    for (std::size_t i = 0; i < tower.size(); ++i) {
        const auto& a = tower[i];
        if (a.rows() != r || a.cols() != r) throw InvalidInput("tower matrices must be square of equal size");
        if (!(a.field() == k)) throw InvalidInput("tower matrix over a different field");
        if (!a.is_polynomial())
            throw NotATransitionMatrix("A_" + std::to_string(i) + " has negative exponents");
        const LaurentPoly det = determinant(a);
        if (det.is_zero() || !det.is_constant())
            throw NotATransitionMatrix("det A_" + std::to_string(i) + " = " + poly_to_json(det).dump() +
                                       " is not a nonzero constant");
    }
    const auto levels = static_cast<std::uint32_t>(tower.size());
    const LaurentMatrix g = cumulative_tower_product(tower, levels);
    const LaurentMatrix g_inv = polynomial_matrix_inverse(g);
    DModulePresentation m{k, r, levels, {}};
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < levels; ++i, pm *= k.characteristic())
        m.actions.push_back(g * g_inv.map_entries([pm](const LaurentPoly& f) { return apply_basis(pm, f); }));
    return m;
}

json presentation_to_json(const DModulePresentation& m)
{
    json actions = json::array();
    for (const auto& a : m.actions) actions.push_back(laurent_matrix_to_json(a));
    return {{"field", field_to_json(m.field)}, {"rank", m.rank}, {"levels", m.levels}, {"actions", actions}};
}

DModulePresentation presentation_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidInput("presentation must be a JSON object");
    for (const char* key : {"field", "rank", "levels", "actions"})
        if (!j.contains(key)) throw InvalidInput(std::string("presentation is missing \"") + key + "\"");
    DModulePresentation m{field_from_json(j.at("field")), j.at("rank").get<std::size_t>(),
                          j.at("levels").get<std::uint32_t>(), {}};
    for (const auto& a : j.at("actions")) m.actions.push_back(laurent_matrix_from_json(m.field, a));
    check_presentation(m);
    return m;
}

json validation_to_json(const ValidationReport& r)
{
    json out = {{"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) {
        out["failed_check"] = r.failed_check;
        out["failure"] = r.failure;
    }
    return out;
}

} // namespace frobdiv
