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


#ifndef ORACLES_POLYNOMIAL_HPP
#define ORACLES_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "oracles/interval.hpp"

namespace oracles {

// Polynomial with rational coefficients, stored lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        while (coeffs_.size() > 1 && coeffs_.back().sign() == 0) {
            coeffs_.pop_back();
        }
    }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Rational operator()(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    // Horner-form interval extension. Sound (contains the true image) and
    // inclusion-monotone, but may overestimate when x straddles zero.
    Interval operator()(const Interval& x) const
    {
        if (coeffs_.empty()) {
            return Interval::point(Rational(0));
        }
        Interval acc = Interval::point(coeffs_.back());
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
            acc = acc * x + Interval::point(*it);
        }
        return acc;
    }

    // Bound on the Horner extension's width growth over [-m, m]:
    // width(p(X)) <= slope_bound(m) * width(X) for X inside [-m, m].
    Rational slope_bound(const Rational& m) const
    {
        Rational bound(0);
        Rational power(1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            bound += Rational(static_cast<long>(i)) * abs(coeffs_[i]) * power;
            power *= m;
        }
        return bound;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) {
                out += ", ";
            }
            out += coeffs_[i].to_string();
        }
        return "[" + out + "]";
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

} // namespace oracles

#endif
