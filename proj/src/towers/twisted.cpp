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

#include "fdiv/towers/twisted.hpp"

#include <algorithm>
#include <string>

#include "fdiv/error.hpp"

namespace frobdiv {

std::vector<FieldElement> apply_semilinear(const SemilinearMap& f, const std::vector<FieldElement>& v)
{
    if (v.size() != f.matrix.cols()) throw InvalidInput("semilinear map applied to a vector of wrong length");
    const Field& k = f.matrix.field();
    std::vector<FieldElement> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = k.frobenius(v[i], f.twist);
    return f.matrix.apply(w);
}

SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g)
{
    if (f.matrix.cols() != g.matrix.rows()) throw InvalidInput("semilinear maps do not compose");
    return {f.matrix * g.matrix.frobenius(f.twist), f.twist + g.twist};
}

Matrix image_of(const SemilinearMap& f, const Matrix& s)
{
    return column_space(f.matrix * s.frobenius(f.twist));
}

Matrix kernel_of(const SemilinearMap& f)
{
    return kernel_basis(f.matrix).frobenius(-f.twist);
}

TwistedTower::TwistedTower(Kind kind, Field k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps,
                           std::size_t preamble, std::size_t period)
    : kind_(kind), k_(std::move(k)), dims_(std::move(dims)), maps_(std::move(maps)), preamble_(preamble),
      period_(period)
{
    for (std::size_t n = 0; n < maps_.size(); ++n) {
        const Matrix& m = maps_[n].matrix;
        if (!(m.field() == k_)) throw InvalidTower("map " + std::to_string(n) + " is over a different field");
        std::size_t target = dims_[n];
        std::size_t source = dim(n + 1);
        if (m.rows() != target || m.cols() != source) {
            throw InvalidTower("map " + std::to_string(n) + " has shape " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + ", expected " + std::to_string(target) + "x" +
                               std::to_string(source));
        }
    }
}

TwistedTower TwistedTower::truncated(const Field& k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps)
{
    if (dims.empty()) throw InvalidTower("a truncated tower needs at least one level");
    if (maps.size() + 1 != dims.size()) throw InvalidTower("a truncated tower with N+1 levels needs N maps");
    return TwistedTower(Kind::truncated, k, std::move(dims), std::move(maps), 0, 0);
}

TwistedTower TwistedTower::periodic(const Field& k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps,
                                    std::size_t preamble)
{
    if (dims.size() <= preamble) throw InvalidTower("the repeating block of a periodic tower is empty");
    if (maps.size() != dims.size()) throw InvalidTower("a periodic tower needs one map per listed level");
    std::size_t period = dims.size() - preamble;
    return TwistedTower(Kind::periodic, k, std::move(dims), std::move(maps), preamble, period);
}

std::size_t TwistedTower::wrap(std::size_t n) const
{
    if (kind_ == Kind::truncated) {
        if (n >= dims_.size()) throw InvalidInput("level " + std::to_string(n) + " beyond the truncation");
        return n;
    }
    if (n < preamble_) return n;
    return preamble_ + (n - preamble_) % period_;
}

std::size_t TwistedTower::dim(std::size_t n) const { return dims_[wrap(n)]; }

const SemilinearMap& TwistedTower::map(std::size_t n) const
{
    if (kind_ == Kind::truncated && n + 1 >= dims_.size()) {
        throw InvalidInput("no map out of level " + std::to_string(n + 1));
    }
    return maps_[wrap(n)];
}

std::size_t TwistedTower::max_dim() const { return *std::max_element(dims_.begin(), dims_.end()); }

TwistedTower TwistedTower::untwisted() const
{
    TwistedTower t = *this;
    for (auto& f : t.maps_) f.twist = 0;
    return t;
}

TwistedTower TwistedTower::gauge_normalized() const
{
    TwistedTower t = *this;
    std::int64_t s = 0;
    std::vector<std::int64_t> shifts;
    for (std::size_t n = 0; n < t.maps_.size(); ++n) {
        shifts.push_back(s);
        s += maps_[n].twist;
    }
    for (std::size_t n = 0; n < t.maps_.size(); ++n) {
        t.maps_[n].matrix = maps_[n].matrix.frobenius(shifts[n]);
        std::int64_t above = n + 1 < shifts.size() ? shifts[n + 1] : (kind_ == Kind::periodic ? shifts[preamble_] : s);
        t.maps_[n].twist = shifts[n] + maps_[n].twist - above;
    }
    return t;
}

namespace {

// Walks f_{j,i} for j = i, i+1, ... and records the image dimension of each composite.
class ImageChain {
public:
    ImageChain(const TwistedTower& t, std::size_t i)
        : t_(t), j_(i), composite_{Matrix::identity(t.field(), t.dim(i)), 0}
    {
        dims_.push_back(t.dim(i));
    }

    std::size_t top() const noexcept { return j_; }
    void advance()
    {
        composite_ = compose(composite_, t_.map(j_));
        ++j_;
        dims_.push_back(rank(composite_.matrix));
    }
    Matrix image() const { return column_space(composite_.matrix); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

private:
    const TwistedTower& t_;
    std::size_t j_;
    SemilinearMap composite_;
    std::vector<std::size_t> dims_;
};

std::size_t first_index_of(const std::vector<std::size_t>& dims, std::size_t value)
{
    return static_cast<std::size_t>(std::find(dims.begin(), dims.end(), value) - dims.begin());
}

} // namespace

StableSubspace stable_subspace(const TwistedTower& t, std::size_t i)
{
    if (i >= t.level_count()) throw InvalidInput("level " + std::to_string(i) + " outside the represented range");
    ImageChain chain(t, i);
    bool exact = false;
    if (t.kind() == TwistedTower::Kind::truncated) {
        while (chain.top() + 1 < t.level_count()) chain.advance();
    } else {
        // Images under whole periods at a periodic level a' are the images of powers of a self-map,
        // so one repeat already means stability; the loop waits for two.
        std::size_t base = std::max(i, t.preamble());
        std::size_t m = t.period();
        while (chain.top() < base) chain.advance();
        ImageChain self(t, base);
        std::size_t agreements = 0;
        std::size_t previous = self.dims().back();
        while (agreements < 2) {
            for (std::size_t s = 0; s < m; ++s) {
                self.advance();
                chain.advance();
            }
            std::size_t current = self.dims().back();
            agreements = current == previous ? agreements + 1 : 0;
            previous = current;
        }
        exact = true;
    }
    const auto& dims = chain.dims();
    return StableSubspace{i, chain.image(), first_index_of(dims, dims.back()), dims, exact};
}

MLReport check_ml(const TwistedTower& t)
{
    MLReport r;
    for (std::size_t i = 0; i < t.level_count(); ++i) {
        StableSubspace s = stable_subspace(t, i);
        // The chain is decreasing, so it is constant from `steps` on.
        for (std::size_t j = s.steps; j < s.image_dims.size(); ++j) {
            if (s.image_dims[j] != s.basis.cols()) r.holds = false;
        }
        r.levels.push_back(std::move(s));
    }
    return r;
}

LimitDim lim_dim(const TwistedTower& t)
{
    if (t.kind() == TwistedTower::Kind::truncated) return {stable_subspace(t, 0).basis.cols(), false};
    return {stable_subspace(t, t.preamble()).basis.cols(), true};
}

R1Lim r1lim_dim(const TwistedTower& t)
{
    R1Lim r;
    r.certificate = check_ml(t);
    if (!r.certificate.holds) throw InvalidTower("image chains failed to stabilize");
    r.dim = 0;
    return r;
}

BoundReport bound_check(const TwistedTower& t)
{
    BoundReport b;
    b.lim = lim_dim(t);
    b.sup_dim = t.max_dim();
    b.passed = b.lim.dim <= b.sup_dim;
    return b;
}

std::vector<std::vector<std::vector<FieldElement>>> limit_elements(const TwistedTower& t)
{
    if (t.kind() != TwistedTower::Kind::periodic) {
        throw InvalidInput("limit elements are only determined for periodic towers");
    }
    const Field& k = t.field();
    std::size_t a = t.preamble();
    std::size_t top = a + t.period();
    std::vector<Matrix> stable;
    for (std::size_t i = 0; i < t.level_count(); ++i) stable.push_back(stable_subspace(t, i).basis);
    auto stable_at = [&](std::size_t n) -> const Matrix& { return stable[n < t.level_count() ? n : a]; };

    std::vector<std::vector<std::vector<FieldElement>>> out;
    for (std::size_t c = 0; c < stable[a].cols(); ++c) {
        std::vector<std::vector<FieldElement>> seq(top + 1);
        seq[a] = stable[a].column(c);
        for (std::size_t n = a; n < top; ++n) {
            // Solve f_n(y) = x_n with y = S c in the stable subspace above: M Frob^t(S) Frob^t(c) = x_n.
            const SemilinearMap& f = t.map(n);
            const Matrix& s = stable_at(n + 1);
            auto z = solve(f.matrix * s.frobenius(f.twist), seq[n]);
            if (!z) throw InvalidTower("no compatible lift at level " + std::to_string(n + 1));
            std::vector<FieldElement> coeffs(z->size());
            for (std::size_t q = 0; q < z->size(); ++q) coeffs[q] = k.frobenius((*z)[q], -f.twist);
            seq[n + 1] = s.apply(coeffs);
        }
        for (std::size_t n = a; n-- > 0;) seq[n] = apply_semilinear(t.map(n), seq[n + 1]);
        out.push_back(std::move(seq));
    }
    return out;
}

json twisted_tower_to_json(const TwistedTower& t)
{
    json maps = json::array();
    for (const auto& f : t.maps()) maps.push_back({{"matrix", matrix_to_json(f.matrix)}, {"twist", f.twist}});
    json j = {{"kind", t.kind() == TwistedTower::Kind::truncated ? "truncated" : "periodic"},
              {"field", field_to_json(t.field())},
              {"levels", t.dims()},
              {"maps", maps}};
    if (t.kind() == TwistedTower::Kind::periodic) j["preamble"] = t.preamble();
    return j;
}

TwistedTower twisted_tower_from_json(const json& j, const Field& k)
{
    if (!j.is_object()) throw InvalidInput("tower must be a JSON object");
    std::string kind = j.value("kind", std::string("truncated"));
    if (!j.contains("levels") || !j["levels"].is_array()) throw InvalidInput("tower needs a \"levels\" array");
    std::vector<std::size_t> dims;
    for (const auto& d : j["levels"]) {
        if (!d.is_number_unsigned()) throw InvalidInput("level dimensions must be non-negative integers");
        dims.push_back(d.get<std::size_t>());
    }
    std::vector<SemilinearMap> maps;
    if (j.contains("maps")) {
        if (!j["maps"].is_array()) throw InvalidInput("\"maps\" must be an array");
        for (std::size_t n = 0; n < j["maps"].size(); ++n) {
            const json& f = j["maps"][n];
            if (!f.is_object() || !f.contains("matrix")) throw InvalidInput("each map needs a \"matrix\"");
            std::size_t rows = n < dims.size() ? dims[n] : 0;
            std::size_t cols = 0;
            if (n + 1 < dims.size()) {
                cols = dims[n + 1];
            } else if (kind == "periodic") {
                cols = dims[j.value("preamble", std::size_t{0})];
            }
            maps.push_back({matrix_from_json(k, f["matrix"], rows, cols), f.value("twist", std::int64_t{0})});
        }
    }
    if (kind == "truncated") return TwistedTower::truncated(k, std::move(dims), std::move(maps));
    if (kind == "periodic") {
        return TwistedTower::periodic(k, std::move(dims), std::move(maps), j.value("preamble", std::size_t{0}));
    }
    throw InvalidInput("unknown tower kind \"" + kind + "\"");
}

json ml_report_to_json(const MLReport& r)
{
    json levels = json::array();
    for (const auto& s : r.levels) {
        levels.push_back({{"level", s.level},
                          {"stable_dim", s.basis.cols()},
                          {"stabilizes_at", s.steps},
                          {"image_dims", s.image_dims},
                          {"exact", s.exact}});
    }
    return {{"mittag_leffler", r.holds}, {"levels", levels}};
}

} // namespace frobdiv
