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

#ifndef FDIV_ERROR_HPP
#define FDIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobdiv {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FDIV_DECLARE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

FDIV_DECLARE_ERROR(InvalidField);
FDIV_DECLARE_ERROR(InvalidInput);
FDIV_DECLARE_ERROR(NotATransitionMatrix);
FDIV_DECLARE_ERROR(ExtractionDiverged);
FDIV_DECLARE_ERROR(IsoFailed);
FDIV_DECLARE_ERROR(CohomologyDiverged);
FDIV_DECLARE_ERROR(FactorizationFailed);
FDIV_DECLARE_ERROR(OracleDiverged);
FDIV_DECLARE_ERROR(InvalidTower);

#undef FDIV_DECLARE_ERROR

} // namespace frobdiv

#endif // FDIV_ERROR_HPP
