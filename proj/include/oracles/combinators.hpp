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


#ifndef ORACLES_COMBINATORS_HPP
#define ORACLES_COMBINATORS_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "oracles/constructors.hpp"
#include "oracles/oracle.hpp"

namespace oracles {

enum class CompareResult { less, greater, equal_known, undecided };

inline const char* to_string(CompareResult c)
{
    switch (c) {
    case CompareResult::less:
        return "Less";
    case CompareResult::greater:
        return "Greater";
    case CompareResult::equal_known:
        return "EqualKnown";
    case CompareResult::undecided:
        return "Undecided";
    }
    return "?";
}

// Budget used to certify a reciprocal's witness interval.
inline constexpr Budget default_witness_budget{10000};

namespace detail {

// Oracle whose k-th enclosure is an interval-arithmetic image of the
// operands' k-th enclosures. Inclusion-monotone kernels keep the stream
// nested; computed enclosures are memoized per index.
class DerivedImpl final : public OracleImpl {
public:
    using Kernel = std::function<Interval(const std::vector<Interval>&)>;

    DerivedImpl(std::vector<Oracle> operands, Kernel kernel)
        : operands_(std::move(operands)), kernel_(std::move(kernel))
    {
    }

    Interval enclosure(std::uint64_t k) const override
    {
        {
            std::lock_guard lock(mutex_);
            if (const auto it = cache_.find(k); it != cache_.end()) {
                return it->second;
            }
        }
        std::vector<Interval> args;
        args.reserve(operands_.size());
        for (const auto& o : operands_) {
            args.push_back(o.enclosure(k));
        }
        Interval out = kernel_(args);
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(k, std::move(out)).first->second;
    }

private:
    std::vector<Oracle> operands_;
    Kernel kernel_;
    mutable std::mutex mutex_;
    mutable std::map<std::uint64_t, Interval> cache_;
};

inline Oracle derived(std::vector<Oracle> operands, DerivedImpl::Kernel kernel)
{
    return Oracle(std::make_shared<DerivedImpl>(std::move(operands), std::move(kernel)));
}

} // namespace detail

inline Oracle o_neg(const Oracle& x)
{
    if (const auto r = x.root()) {
        return rational_oracle(-*r);
    }
    return detail::derived({x}, [](const std::vector<Interval>& a) { return -a[0]; });
}

inline Oracle o_add(const Oracle& x, const Oracle& y)
{
    const auto rx = x.root();
    const auto ry = y.root();
    if (rx && ry) {
        return rational_oracle(*rx + *ry);
    }
    return detail::derived({x, y}, [](const std::vector<Interval>& a) { return a[0] + a[1]; });
}

inline Oracle o_sub(const Oracle& x, const Oracle& y)
{
    const auto rx = x.root();
    const auto ry = y.root();
    if (rx && ry) {
        return rational_oracle(*rx - *ry);
    }
    return detail::derived({x, y}, [](const std::vector<Interval>& a) { return a[0] - a[1]; });
}

inline Oracle o_mul(const Oracle& x, const Oracle& y)
{
    const auto rx = x.root();
    const auto ry = y.root();
    if (rx && ry) {
        return rational_oracle(*rx * *ry);
    }
    return detail::derived({x, y}, [](const std::vector<Interval>& a) { return a[0] * a[1]; });
}

inline Oracle o_abs(const Oracle& x)
{
    if (const auto r = x.root()) {
        return rational_oracle(abs(*r));
    }
    return detail::derived({x}, [](const std::vector<Interval>& a) { return abs(a[0]); });
}

// 1/x. The witness must be a Yes interval of x excluding zero; each
// enclosure of x is clipped to it before inverting.
inline Oracle o_recip(const Oracle& x, const Interval& witness, Budget certify = default_witness_budget)
{
    if (contains(witness, Rational(0))) {
        throw ZeroWitnessInvalid("witness " + witness.to_string() + " contains zero");
    }
    if (const Answer a = x.decide(witness, certify); a != Answer::yes) {
        throw ZeroWitnessInvalid("witness " + witness.to_string() + " is not a Yes interval of the operand (" +
                                 to_string(a) + ")");
    }
    if (const auto r = x.root()) {
        return rational_oracle(Rational(1) / *r);
    }
    return detail::derived({x}, [witness](const std::vector<Interval>& a) {
        const auto clipped = intersect(a[0], witness);
        if (!clipped) {
            throw OracleViolation("operand enclosure " + a[0].to_string() + " left its witness " + witness.to_string());
        }
        return recip(*clipped);
    });
}

// Order by searching for disjoint Yes intervals at matching refinement depth.
// Equality is reported only when both roots are known.
inline CompareResult compare(const Oracle& x, const Oracle& y, Budget budget)
{
    const auto rx = x.root();
    const auto ry = y.root();
    if (rx && ry) {
        if (*rx == *ry) {
            return CompareResult::equal_known;
        }
        return *rx < *ry ? CompareResult::less : CompareResult::greater;
    }
    // Against a known rational, locate can use the other side's exact hint.
    const auto from_position = [](Position p, bool flipped) {
        switch (p) {
        case Position::less:
            return flipped ? CompareResult::greater : CompareResult::less;
        case Position::greater:
            return flipped ? CompareResult::less : CompareResult::greater;
        case Position::equal:
            return CompareResult::equal_known;
        case Position::exhausted:
            break;
        }
        return CompareResult::undecided;
    };
    if (ry) {
        return from_position(x.locate(*ry, budget), false);
    }
    if (rx) {
        return from_position(y.locate(*rx, budget), true);
    }
    CompareResult found = CompareResult::undecided;
    detail::first_probe_where(budget.steps, [&](std::uint64_t k) {
        const Interval ex = x.enclosure(k);
        const Interval ey = y.enclosure(k);
        if (ex.hi() < ey.lo()) {
            found = CompareResult::less;
        } else if (ey.hi() < ex.lo()) {
            found = CompareResult::greater;
        }
        return found != CompareResult::undecided;
    });
    return found;
}

} // namespace oracles

#endif
