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


// Oracles shared by several test binaries.

#ifndef ORACLES_TESTS_FIXTURES_HPP
#define ORACLES_TESTS_FIXTURES_HPP

#include "oracles/oracles.hpp"

namespace fixtures {

inline oracles::Oracle golden()
{
    using namespace oracles;
    return ivt_oracle(polynomial_sign(Polynomial({-1, -1, 1})), 1, 2);
}

// Partial sums 2 - 2^-i of sum 2^-k, with modulus ceil(log2(2 / eps)).
inline oracles::Oracle geometric_sum(bool with_limit)
{
    using namespace oracles;
    CauchySpec s;
    s.term = [](std::uint64_t i) { return Rational(2) - Rational(BigInt(1), pow2(i)); };
    s.modulus = [](const Rational& eps) {
        std::uint64_t n = 0;
        while (Rational(BigInt(2), pow2(n)) > eps) {
            ++n;
        }
        return n;
    };
    if (with_limit) {
        s.known_limit = Rational(2);
    }
    return cauchy_oracle(s);
}

// Not an oracle: says Yes exactly to intervals of width at least 1. Its
// refiner offers [0, 2^-k], which the rule itself rejects for k >= 1.
inline oracles::Oracle broken_width_rule()
{
    using namespace oracles;
    return oracle_from_rule(
        [](const Interval& i, Budget) { return i.width() >= Rational(1) ? Answer::yes : Answer::no; },
        [](std::uint64_t k) { return Interval::make(0, Rational(BigInt(1), pow2(k))); });
}

} // namespace fixtures

#endif
