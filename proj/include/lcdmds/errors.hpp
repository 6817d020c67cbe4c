/*
   Copyright 2026 the lcdmds authors

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

#ifndef LCDMDS_ERRORS_HPP
#define LCDMDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcdmds {

/// Requested parameters fall outside the admissible range of a construction.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A fact that the library re-verifies at runtime failed to hold. This is
/// never swallowed: it indicates a bug or an input that slipped past
/// validation.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

/// An exhaustive verification was refused because its combinatorial cost
/// exceeds the configured budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline void internal_check(bool condition, const std::string& what) {
    if (!condition) {
        throw InternalCheckError(what);
    }
}

inline void require_arg(bool condition, const std::string& what) {
    if (!condition) {
        throw std::invalid_argument(what);
    }
}

} // namespace lcdmds

#endif
