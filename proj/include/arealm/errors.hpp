/*
   Copyright 2026 The arealm authors

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

#ifndef AREALM_ERRORS_HPP
#define AREALM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arealm {

/// Root iteration exhausted its budget with residuals above tolerance.
/// Signals ill-conditioned input; the caller may retry at higher precision.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature node evaluated to exactly zero even after one grid rotation.
struct SingularNode : std::runtime_error {
    explicit SingularNode(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration size exceeds the configured cap; narrow the search bounds.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Vanishing discriminant where a squarefree polynomial is required.
struct MultipleRoot : std::runtime_error {
    explicit MultipleRoot(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient stream lacks a membership certificate for the requested exponent.
struct TailNotCertified : std::runtime_error {
    explicit TailNotCertified(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arealm

#endif  // AREALM_ERRORS_HPP
