/*
 * Copyright 2026 hermcurve contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermcurve {

/// Enumeration or table size over budget. Mapped to CLI exit code 3.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments or an inapplicable family/q/i combination. CLI exit code 2.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Valuation of a truncated series. When every stored coefficient vanishes
/// the true valuation is only bounded below; `exact` is false and `value`
/// holds the bound (the truncation order).
struct Valuation {
    int64_t value = 0;
    bool exact = true;

    bool resolved() const { return exact; }
    bool operator==(const Valuation& o) const { return value == o.value && exact == o.exact; }

    std::string str() const {
        return exact ? std::to_string(value) : (">=" + std::to_string(value));
    }
};

// Default resource budgets. The CLI can scale these via HERMCURVE_CAP.
inline constexpr uint64_t kFieldOrderCap = uint64_t(1) << 20;
inline constexpr uint64_t kPointEnumCap = uint64_t(1) << 24;

}  // namespace hermcurve
