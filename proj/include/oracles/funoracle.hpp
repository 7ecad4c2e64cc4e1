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


#ifndef ORACLES_FUNORACLE_HPP
#define ORACLES_FUNORACLE_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "oracles/constructors.hpp"
#include "oracles/oracle.hpp"
#include "oracles/polynomial.hpp"

namespace oracles {

// base x wall. The function oracle says Yes when the image of the base fits
// in the wall.
struct Rectangle {
    Interval base;
    Interval wall;

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// A real function presented through an interval extension.
//
// Callers supplying their own extension must keep it sound (the true image
// of a base lies inside extension(base)), inclusion-monotone, and shrinking
// according to modulus: for bases inside `working`, a base of width at most
// modulus(w, working) yields a wall of width at most w. All rules must be
// pure. `evaluate` gives the exact value at a rational point when it can.
struct FunctionOracle {
    std::function<Interval(const Interval&)> extension;
    std::function<std::optional<Rational>(const Rational&)> evaluate;
    std::function<Rational(const Rational& wall_width, const Interval& working)> modulus;
    std::optional<Interval> domain;
    std::string description;
};

inline FunctionOracle poly_extension(std::vector<Rational> coeffs)
{
    auto p = std::make_shared<const Polynomial>(std::move(coeffs));
    FunctionOracle f;
    f.extension = [p](const Interval& base) { return (*p)(base); };
    f.evaluate = [p](const Rational& x) -> std::optional<Rational> { return (*p)(x); };
    f.modulus = [p](const Rational& w, const Interval& working) {
        const Rational m = std::max(abs(working.lo()), abs(working.hi()));
        const Rational slope = p->slope_bound(m);
        if (slope.sign() == 0) {
            // constant: any base will do
            return std::max(working.width(), Rational(1));
        }
        return w / slope;
    };
    f.description = "poly" + p->to_string();
    return f;
}

// 1/x on a domain that excludes zero.
inline FunctionOracle reciprocal_extension(const Interval& domain)
{
    if (contains(domain, Rational(0))) {
        throw ZeroInDenominator();
    }
    FunctionOracle f;
    f.extension = [](const Interval& base) { return recip(base); };
    f.evaluate = [](const Rational& x) -> std::optional<Rational> {
        if (x.sign() == 0) {
            return std::nullopt;
        }
        return Rational(1) / x;
    };
    // |d/dx 1/x| <= 1/m^2 where m is the smallest magnitude in the domain.
    f.modulus = [](const Rational& w, const Interval& working) {
        const Rational m = std::min(abs(working.lo()), abs(working.hi()));
        return w * m * m;
    };
    f.domain = domain;
    f.description = "recip on " + domain.to_string();
    return f;
}

// Most base pieces a single rect_decide call will track.
inline constexpr std::size_t max_rect_pieces = 1 << 12;

// Yes when the extension of a subdivision of the base lands in the wall;
// No when an exact point value from the base lands outside it. Each budget
// step is one round of halving the pieces that are still undecided.
inline Answer rect_decide(const FunctionOracle& f, const Rectangle& r, Budget budget)
{
    if (f.domain && !is_subset(r.base, *f.domain)) {
        throw DomainEscape("base " + r.base.to_string() + " leaves the domain " + f.domain->to_string());
    }
    const auto escapes = [&](const Rational& x) {
        if (!f.evaluate) {
            return false;
        }
        const auto v = f.evaluate(x);
        return v && !contains(r.wall, *v);
    };
    if (escapes(r.base.lo()) || escapes(r.base.hi())) {
        return Answer::no;
    }
    std::vector<Interval> pending{r.base};
    for (std::uint64_t round = 0;; ++round) {
        std::vector<Interval> still;
        for (const auto& piece : pending) {
            const Interval image = f.extension(piece);
            if (is_subset(image, r.wall)) {
                continue;
            }
            if (is_disjoint(image, r.wall)) {
                // the piece's whole image misses the wall
                return Answer::no;
            }
            still.push_back(piece);
        }
        if (still.empty()) {
            return Answer::yes;
        }
        if (round >= budget.steps || 2 * still.size() > max_rect_pieces) {
            return Answer::exhausted;
        }
        pending.clear();
        for (const auto& piece : still) {
            if (piece.is_singleton()) {
                // exact extension of a point that still straddles the wall
                return Answer::exhausted;
            }
            const Rational mid = piece.mid();
            if (escapes(mid)) {
                return Answer::no;
            }
            pending.push_back(Interval::make(piece.lo(), mid));
            pending.push_back(Interval::make(mid, piece.hi()));
        }
    }
}

// Search cap for the operand index feeding one result enclosure.
inline constexpr std::uint64_t max_apply_lookahead = 4096;

namespace detail {

// Enclosure k is the extension of the first operand enclosure (at or after
// the domain entry index) narrow enough for a wall of width 2^-k.
class ApplyImpl final : public OracleImpl {
public:
    ApplyImpl(FunctionOracle f, Oracle x, std::uint64_t entry)
        : f_(std::move(f)), x_(std::move(x)), entry_(entry), working_(x_.enclosure(entry))
    {
    }

    Interval enclosure(std::uint64_t k) const override
    {
        const Rational target = f_.modulus(Rational(BigInt(1), pow2(k)), working_);
        const std::uint64_t limit = entry_ + max_apply_lookahead + k;
        const auto offset = first_index_where(limit - entry_ + 1, [&](std::uint64_t j) {
            return x_.enclosure(entry_ + j).width() <= target;
        });
        const std::uint64_t j = entry_ + (offset ? *offset : limit - entry_);
        return f_.extension(x_.enclosure(j));
    }

private:
    FunctionOracle f_;
    Oracle x_;
    std::uint64_t entry_;
    Interval working_;
};

} // namespace detail

// f(x): the oracle whose Yes intervals are walls of Yes rectangles whose
// base holds x. A rooted x with an exact point value gives a rooted result.
inline Oracle apply(const FunctionOracle& f, const Oracle& x)
{
    if (const auto r = x.root(); r && f.evaluate) {
        if (f.domain && !contains(*f.domain, *r)) {
            throw DomainEscape("argument " + r->to_string() + " is outside " + f.domain->to_string());
        }
        if (const auto v = f.evaluate(*r)) {
            return rational_oracle(*v);
        }
    }
    std::uint64_t entry = 0;
    if (f.domain) {
        const auto k = detail::first_index_where(max_apply_lookahead, [&](std::uint64_t i) {
            return is_subset(x.enclosure(i), *f.domain);
        });
        if (!k) {
            throw DomainEscape("argument does not refine into " + f.domain->to_string());
        }
        entry = *k;
    }
    return Oracle(std::make_shared<detail::ApplyImpl>(f, x, entry));
}

} // namespace oracles

#endif
