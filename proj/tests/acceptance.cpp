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

// Acceptance suite: one PASS/FAIL line per criterion. Criterion 12 runs the CLI binary given
// as argv[1] twice and compares the reports byte for byte.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "fdiv/verify/checks.hpp"

namespace {

bool capture(const std::string& command, std::string& out)
{
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return false;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return pclose(pipe) == 0;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace frobdiv::verify;
    if (argc < 2) {
        std::cerr << "usage: fdiv_acceptance PATH_TO_FDIV\n";
        return 2;
    }
    const CheckConfig cfg;
    bool all = true;
    for (const auto& def : checks()) {
        if (def.criterion == 12) continue;
        const CheckResult r = run_check(def, cfg);
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << def.criterion << "  " << r.name << "  (" << r.cases
                  << " cases)";
        if (!r.passed) std::cout << "  " << r.failure;
        std::cout << '\n';
    }

    const std::string command = std::string("\"") + argv[1] + "\" verify-paper --seed 42 --json";
    std::string first;
    std::string second;
    const bool ran = capture(command, first) && capture(command, second);
    const bool same = ran && !first.empty() && first == second;
    all = all && same;
    std::cout << (same ? "PASS" : "FAIL") << "  12  determinism  (verify-paper --seed 42, " << first.size()
              << " bytes";
    if (!ran) std::cout << ", command failed";
    std::cout << ")\n";
    return all ? 0 : 1;
}
