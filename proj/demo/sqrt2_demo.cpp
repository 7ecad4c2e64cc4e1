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


// Walks through the main operations on the square root of two.

#include <iostream>

#include "oracles/oracles.hpp"

int main()
{
    using namespace oracles;
    const Budget budget{10000};
    const Oracle sqrt2 = nth_root_oracle(2, Rational(2));

    std::cout << "decide 1:2        " << to_string(sqrt2.decide(Interval::make(1, 2), budget)) << "\n";
    std::cout << "decide 3/2:3/2    " << to_string(sqrt2.decide(Interval::point(Rational::parse("3/2")), budget))
              << "\n";
    std::cout << "refine to 1/4     " << sqrt2.refine(Rational::parse("1/4"), budget)->to_string() << "\n";
    std::cout << "30 digits         " << to_decimal(sqrt2, 30, budget).text << "\n";
    std::cout << "continued frac.   " << cf_to_string(mediant_expand(sqrt2, 8, budget)) << "\n";
    std::cout << "best q <= 100     " << best_approx(sqrt2, 100, budget) << "\n";

    const Oracle two = o_mul(sqrt2, sqrt2);
    std::cout << "sqrt2*sqrt2       " << to_decimal(two, 20, budget).text << "\n";
    std::cout << "compare to 3/2    " << to_string(compare(sqrt2, rational_oracle(Rational::parse("3/2")), budget))
              << "\n";

    for (const auto& r : check_axioms(sqrt2, 7, 200, Budget{200})) {
        std::cout << to_string(r) << "\n";
    }
}
