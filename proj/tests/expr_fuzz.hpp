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


// Random expression text drawn from the CLI grammar, for parser fuzzing.

#ifndef ORACLES_TESTS_EXPR_FUZZ_HPP
#define ORACLES_TESTS_EXPR_FUZZ_HPP

#include <random>
#include <string>

namespace fuzz {

class ExprText {
public:
    explicit ExprText(std::uint64_t seed) : rng_(seed) {}

    std::string make(int depth) { return expr(depth); }

private:
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    std::string ws()
    {
        switch (pick(0, 5)) {
        case 0:
            return " ";
        case 1:
            return "  ";
        case 2:
            return "\t";
        default:
            return "";
        }
    }

    std::string minus() { return pick(0, 4) == 0 ? "−" : "-"; }

    std::string integer(long lo, long hi) { return std::to_string(pick(lo, hi)); }

    std::string rational(bool positive)
    {
        std::string out = positive ? integer(1, 99) : integer(0, 99);
        if (pick(0, 1)) {
            out += "/" + integer(1, 12);
        }
        return out;
    }

    std::string signed_rational(bool positive)
    {
        return (!positive && pick(0, 3) == 0 ? minus() : "") + rational(positive);
    }

    std::string polyzero()
    {
        // Brackets chosen so the endpoint signs differ or vanish.
        if (pick(0, 1)) {
            const long r = pick(-9, 9);
            return "polyzero(" + ws() + std::to_string(-r) + "," + ws() + "1" + ws() + ";" + ws() +
                   std::to_string(r - pick(0, 3)) + "," + ws() + std::to_string(r + pick(1, 3)) + ")";
        }
        const long c = pick(1, 30);
        return "polyzero(-" + std::to_string(c) + ", 0," + ws() + "1;" + ws() + "0, " + std::to_string(c) + ")";
    }

    std::string atom(int depth)
    {
        const long choice = pick(0, depth > 0 ? 6 : 3);
        switch (choice) {
        case 0:
            return rational(false);
        case 1:
            return "sqrt" + ws() + "(" + ws() + rational(true) + ws() + ")";
        case 2:
            return "root(" + integer(1, 7) + "," + ws() + rational(true) + ")";
        case 3:
            return polyzero();
        case 4:
        case 5:
            return "(" + ws() + expr(depth - 1) + ws() + ")";
        default: {
            const long lo = pick(1, 20);
            const std::string w = pick(0, 1) ? std::to_string(lo) + ":" + std::to_string(lo + pick(0, 5))
                                             : minus() + std::to_string(lo + pick(0, 5)) + ":" + minus() +
                                                   std::to_string(lo);
            return "recip(" + ws() + expr(depth - 1) + ws() + ";" + ws() + w + ws() + ")";
        }
        }
    }

    std::string factor(int depth)
    {
        if (pick(0, 5) == 0) {
            return minus() + ws() + factor(depth);
        }
        return atom(depth);
    }

    std::string term(int depth)
    {
        std::string out = factor(depth);
        for (long n = pick(0, 2); n > 0; --n) {
            if (pick(0, 2) == 0) {
                out += ws() + "/" + ws() + rational(true);
            } else {
                out += ws() + "*" + ws() + factor(depth);
            }
        }
        return out;
    }

    std::string expr(int depth)
    {
        std::string out = term(depth);
        for (long n = pick(0, 2); n > 0; --n) {
            out += ws() + (pick(0, 1) ? "+" : minus()) + ws() + term(depth);
        }
        return out;
    }

    std::mt19937_64 rng_;
};

} // namespace fuzz

#endif
