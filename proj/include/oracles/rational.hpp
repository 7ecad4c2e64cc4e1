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

#ifndef ORACLES_RATIONAL_HPP
#define ORACLES_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "oracles/errors.hpp"

namespace oracles {

using BigInt = mpz_class;

// Exact fraction in canonical form: denominator > 0, gcd(|num|, den) = 1.
// Thin value wrapper over GMP's mpq_class that keeps the canonical-form
// invariant on every construction path and exposes the handful of integer
// helpers (floor, powers, exact roots) the rest of the library needs.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {} // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) {
            throw ZeroInDenominator();
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "p/q", with an optional leading '-' or '+'.
    static Rational parse(std::string_view text)
    {
        const auto fail = [&] { throw ParseError("not a rational literal: '" + std::string(text) + "'"); };
        if (text.empty()) {
            fail();
        }
        const auto slash = text.find('/');
        const auto num_text = text.substr(0, slash);
        const auto check_int = [&](std::string_view s, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
                i = 1;
            }
            if (i == s.size()) {
                fail();
            }
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') {
                    fail();
                }
            }
        };
        check_int(num_text, true);
        std::string num_str(num_text[0] == '+' ? num_text.substr(1) : num_text);
        BigInt num(num_str, 10);
        if (slash == std::string_view::npos) {
            return Rational(num);
        }
        const auto den_text = text.substr(slash + 1);
        check_int(den_text, false);
        return Rational(num, BigInt(std::string(den_text), 10));
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    int sign() const noexcept { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string to_string() const
    {
        if (q_.get_den() == 1) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o)
    {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (sgn(o.q_) == 0) {
            throw ZeroInDenominator();
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt floor(const Rational& r)
{
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

inline BigInt ceil(const Rational& r)
{
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

// Rounds toward zero.
inline BigInt trunc(const Rational& r)
{
    BigInt out;
    mpz_tdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

inline Rational pow(const Rational& base, unsigned long exponent)
{
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

inline BigInt pow2(unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
    return out;
}

inline BigInt pow10(unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
    return out;
}

// floor(v^(1/n)) for v >= 0, and whether the root is exact.
inline std::pair<BigInt, bool> integer_root(const BigInt& v, unsigned long n)
{
    BigInt out;
    const bool exact = mpz_root(out.get_mpz_t(), v.get_mpz_t(), n) != 0;
    return {out, exact};
}

inline Rational mediant(const Rational& a, const Rational& b)
{
    return Rational(a.num() + b.num(), a.den() + b.den());
}

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

} // namespace oracles

#endif
