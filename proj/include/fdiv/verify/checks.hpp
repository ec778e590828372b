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

#ifndef FDIV_VERIFY_CHECKS_HPP
#define FDIV_VERIFY_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fdiv/algebra/json_codec.hpp"

namespace frobdiv::verify {

struct CheckConfig {
    std::uint64_t seed = 42;
    /// Test fixture: perturbs one entry of the operator relation table.
    bool corrupt_relations = false;
};

struct CheckResult {
    std::string name;
    std::string statement;
    bool passed = true;
    std::size_t cases = 0;
    /// First identity that failed, empty on success.
    std::string failure;
    /// FNV-1a digest of the generated inputs, for reproducibility checks.
    std::string digest;
};

struct CheckDef {
    int criterion = 0;
    std::string name;
    std::string statement;
    std::function<CheckResult(const CheckConfig&)> run;
};

/// The full suite, in criterion order.
const std::vector<CheckDef>& checks();

/// Runs the named checks (all when `only` is empty), results sorted by name. Throws InvalidInput
/// for an unknown name.
std::vector<CheckResult> run_checks(const CheckConfig& config, const std::vector<std::string>& only = {});

CheckResult run_check(const CheckDef& def, const CheckConfig& config);

json check_result_to_json(const CheckResult& r);
json report_to_json(const CheckConfig& config, const std::vector<CheckResult>& results);

} // namespace frobdiv::verify

#endif // FDIV_VERIFY_CHECKS_HPP
