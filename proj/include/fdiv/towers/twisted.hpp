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

#ifndef FDIV_TOWERS_TWISTED_HPP
#define FDIV_TOWERS_TWISTED_HPP

#include <cstdint>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"
#include "fdiv/algebra/matrix.hpp"

namespace frobdiv {

/// v -> M Frob^t(v), with Frob^t applied to each coordinate. Over a finite field Frobenius is
/// bijective, so images and preimages of subspaces are again subspaces.
struct SemilinearMap {
    Matrix matrix;
    std::int64_t twist = 0;
};

std::vector<FieldElement> apply_semilinear(const SemilinearMap& f, const std::vector<FieldElement>& v);

/// f o g = (M_f Frob^{t_f}(M_g), t_f + t_g).
SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g);

/// Basis of f(span of the columns of s).
Matrix image_of(const SemilinearMap& f, const Matrix& s);

/// Basis of {v : f(v) = 0} = Frob^{-t}(ker M).
Matrix kernel_of(const SemilinearMap& f);

/// Inverse system V_0 <- V_1 <- V_2 <- ... with maps f_n : V_{n+1} -> V_n.
/// Truncated: levels V_0..V_N and maps f_0..f_{N-1}.
/// Periodic: levels V_0..V_{a+m-1} and maps f_0..f_{a+m-1}, after which the block of the last m
/// levels repeats forever (V_{n+m} = V_n, f_{n+m} = f_n for n >= a); f_{a+m-1} lands on V_{a+m-1}
/// from V_{a+m} = V_a.
class TwistedTower {
public:
    enum class Kind { truncated, periodic };

    static TwistedTower truncated(const Field& k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps);
    static TwistedTower periodic(const Field& k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps,
                                 std::size_t preamble);

    Kind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return k_; }
    std::size_t preamble() const noexcept { return preamble_; }
    std::size_t period() const noexcept { return period_; }
    /// Number of distinct levels: N + 1 when truncated, a + m when periodic.
    std::size_t level_count() const noexcept { return dims_.size(); }
    /// Level dimension for any n (periodic towers wrap; truncated towers require n <= N).
    std::size_t dim(std::size_t n) const;
    /// f_n : V_{n+1} -> V_n.
    const SemilinearMap& map(std::size_t n) const;
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const std::vector<SemilinearMap>& maps() const noexcept { return maps_; }
    std::size_t max_dim() const;

    /// The same tower with every twist replaced by 0. Dimensions can change: M_1 Frob(M_2) and M_1 M_2
    /// need not have equal rank.
    TwistedTower untwisted() const;
    /// Isomorphic tower obtained by applying Frob^{s_n} coordinatewise on V_n, s_n = t_0 + ... + t_{n-1}.
    /// Truncated towers become untwisted; periodic ones keep the total twist of one period on the
    /// last map of the repeating block. Stable dimensions and stabilization indices are preserved.
    TwistedTower gauge_normalized() const;

private:
    TwistedTower(Kind kind, Field k, std::vector<std::size_t> dims, std::vector<SemilinearMap> maps,
                 std::size_t preamble, std::size_t period);
    std::size_t wrap(std::size_t n) const;

    Kind kind_;
    Field k_;
    std::vector<std::size_t> dims_;
    std::vector<SemilinearMap> maps_;
    std::size_t preamble_ = 0;
    std::size_t period_ = 0;
};

/// V_i^s = intersection over j > i of Im f_{j,i}, with f_{j,i} = f_i o ... o f_{j-1}.
struct StableSubspace {
    std::size_t level = 0;
    Matrix basis;
    /// Smallest s with Im f_{i+s,i} = V_i^s (f_{i,i} is the identity).
    std::size_t steps = 0;
    /// dim Im f_{j,i} for j = i, i+1, ... as far as the computation went.
    std::vector<std::size_t> image_dims;
    /// False for truncated towers, where V_i^s is approximated by Im f_{N,i}.
    bool exact = false;
};

/// Periodic towers: the chain of images under whole periods at the first periodic level at or
/// above i is followed until two consecutive periods leave it unchanged.
StableSubspace stable_subspace(const TwistedTower& t, std::size_t i);

/// Mittag-Leffler certificate: the stable subspace and its stabilization index at every level.
struct MLReport {
    bool holds = true;
    std::vector<StableSubspace> levels;
};

MLReport check_ml(const TwistedTower& t);

struct LimitDim {
    std::size_t dim = 0;
    /// False when only a truncation was available.
    bool exact = false;
};

/// Periodic: dim V_a^s, where the restricted maps are bijective. Truncated: dim V_0^s.
LimitDim lim_dim(const TwistedTower& t);

struct R1Lim {
    std::size_t dim = 0;
    MLReport certificate;
};

/// R^1 lim of a tower of finite-dimensional spaces vanishes because the Mittag-Leffler condition
/// holds; the certificate is returned with the answer.
R1Lim r1lim_dim(const TwistedTower& t);

struct BoundReport {
    bool passed = true;
    LimitDim lim;
    std::size_t sup_dim = 0;
};

/// dim lim <= sup_i dim V_i.
BoundReport bound_check(const TwistedTower& t);

/// For a periodic tower: for each basis vector x_a of V_a^s, the compatible values
/// x_0, ..., x_{a+m} with f_n(x_{n+1}) = x_n, obtained by solving one period upward from x_a
/// inside the stable subspaces and mapping down below a. Each returned sequence has x_{a+m} in V_a^s,
/// so it continues forever.
std::vector<std::vector<std::vector<FieldElement>>> limit_elements(const TwistedTower& t);

/// Tower JSON: {"kind": "truncated"|"periodic", "levels": [dims], "maps": [{"matrix", "twist"}],
/// "preamble": a}; a bare "field" key is optional.
json twisted_tower_to_json(const TwistedTower& t);
TwistedTower twisted_tower_from_json(const json& j, const Field& k);
json ml_report_to_json(const MLReport& r);

} // namespace frobdiv

#endif // FDIV_TOWERS_TWISTED_HPP
