// Copyright 2026 The Oracle Reals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORACLES_ERRORS_HPP
#define ORACLES_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oracles {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroInDenominator : public Error {
public:
    ZeroInDenominator() : Error("division by an interval or value containing zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedDomain : public Error {
public:
    using Error::Error;
};

class InvalidFonsi : public Error {
public:
    using Error::Error;
};

class InvalidBracket : public Error {
public:
    using Error::Error;
};

class InvalidBounds : public Error {
public:
    using Error::Error;
};

class ZeroWitnessInvalid : public Error {
public:
    using Error::Error;
};

class DomainEscape : public Error {
public:
    using Error::Error;
};

// An oracle violated one of its defining properties at runtime.
class OracleViolation : public Error {
public:
    using Error::Error;
};

// A budgeted computation could not finish. Carries the budget that was spent.
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(std::uint64_t steps, const std::string& what = "budget exhausted")
        : Error(what + " (budget " + std::to_string(steps) + ")"), steps_(steps)
    {
    }

    std::uint64_t steps() const noexcept { return steps_; }

private:
    std::uint64_t steps_;
};

} // namespace oracles

#endif
