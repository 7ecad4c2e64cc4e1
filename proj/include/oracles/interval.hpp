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

#ifndef ORACLES_INTERVAL_HPP
#define ORACLES_INTERVAL_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "oracles/rational.hpp"

namespace oracles {

// Inclusive rational interval lo:hi. Always normalized so that lo <= hi;
// a singleton has lo == hi. There is no open interval type.
class Interval {
public:
    // Order-free: make(2, 1) and make(1, 2) are the same interval.
    static Interval make(const Rational& x, const Rational& y)
    {
        return x <= y ? Interval(x, y) : Interval(y, x);
    }

    static Interval point(const Rational& x) { return Interval(x, x); }

    // "lo:hi"; a bare rational is read as a singleton.
    static Interval parse(std::string_view text)
    {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            return point(Rational::parse(text));
        }
        return make(Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1)));
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }

    Rational width() const { return hi_ - lo_; }
    bool is_singleton() const { return lo_ == hi_; }
    Rational mid() const { return midpoint(lo_, hi_); }

    std::string to_string() const { return lo_.to_string() + ":" + hi_.to_string(); }

    friend bool operator==(const Interval&, const Interval&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.to_string(); }

private:
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    Rational lo_;
    Rational hi_;
};

inline bool contains(const Interval& i, const Rational& q) { return i.lo() <= q && q <= i.hi(); }

// True when inner is a (not necessarily proper) subset of outer.
inline bool is_subset(const Interval& inner, const Interval& outer)
{
    return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

inline bool is_disjoint(const Interval& a, const Interval& b) { return a.hi() < b.lo() || b.hi() < a.lo(); }

enum class Relation { subset, superset, equal, overlap_only, disjoint };

// How i relates to j: subset means i is strictly inside j.
inline Relation relate(const Interval& i, const Interval& j)
{
    if (is_disjoint(i, j)) {
        return Relation::disjoint;
    }
    const bool sub = is_subset(i, j);
    const bool super = is_subset(j, i);
    if (sub && super) {
        return Relation::equal;
    }
    if (sub) {
        return Relation::subset;
    }
    if (super) {
        return Relation::superset;
    }
    return Relation::overlap_only;
}

inline const char* to_string(Relation r)
{
    switch (r) {
    case Relation::subset:
        return "Subset";
    case Relation::superset:
        return "Superset";
    case Relation::equal:
        return "Equal";
    case Relation::overlap_only:
        return "OverlapOnly";
    case Relation::disjoint:
        return "Disjoint";
    }
    return "?";
}

inline std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    if (is_disjoint(a, b)) {
        return std::nullopt;
    }
    return Interval::make(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval hull(const Interval& a, const Interval& b)
{
    return Interval::make(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// Exact interval arithmetic. Every result is the exact image set, so both
// endpoints are attained by some endpoint combination of the operands.

inline Interval operator+(const Interval& a, const Interval& b)
{
    return Interval::make(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator-(const Interval& a) { return Interval::make(-a.hi(), -a.lo()); }

inline Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

inline Interval operator*(const Interval& a, const Interval& b)
{
    const Rational p[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return Interval::make(*mn, *mx);
}

inline Interval recip(const Interval& a)
{
    if (contains(a, Rational(0))) {
        throw ZeroInDenominator();
    }
    return Interval::make(Rational(1) / a.hi(), Rational(1) / a.lo());
}

inline Interval abs(const Interval& a)
{
    if (a.lo().sign() >= 0) {
        return a;
    }
    if (a.hi().sign() <= 0) {
        return -a;
    }
    return Interval::make(Rational(0), std::max(-a.lo(), a.hi()));
}

enum class IntervalOp { add, neg, mul, recip };

// Dispatching form used where the operation is data (tests, the CLI).
// Binary operations require `j`.
inline Interval interval_arith(IntervalOp op, const Interval& i, const std::optional<Interval>& j = std::nullopt)
{
    switch (op) {
    case IntervalOp::add:
        if (!j) {
            throw std::invalid_argument("interval add needs two operands");
        }
        return i + *j;
    case IntervalOp::neg:
        return -i;
    case IntervalOp::mul:
        if (!j) {
            throw std::invalid_argument("interval mul needs two operands");
        }
        return i * *j;
    case IntervalOp::recip:
        return recip(i);
    }
    throw std::invalid_argument("unknown interval op");
}

} // namespace oracles

#endif
