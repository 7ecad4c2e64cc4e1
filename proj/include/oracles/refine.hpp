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


#ifndef ORACLES_REFINE_HPP
#define ORACLES_REFINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "oracles/oracle.hpp"

namespace oracles {

// One bisection round on a Yes interval: returns the Yes piece among
// lo:mid, mid:mid and mid:hi, preferring the singleton when it is Yes.
inline Interval bisect_step(const Oracle& o, const Interval& i, Budget budget)
{
    if (i.is_singleton()) {
        throw std::invalid_argument("cannot bisect the singleton " + i.to_string());
    }
    const Rational mid = i.mid();
    const Interval point = Interval::point(mid);
    const Interval left = Interval::make(i.lo(), mid);
    const Interval right = Interval::make(mid, i.hi());

    const Answer at_mid = o.decide(point, budget);
    if (at_mid == Answer::yes) {
        return point;
    }
    const Answer l = o.decide(left, budget);
    if (l == Answer::yes) {
        return left;
    }
    const Answer r = o.decide(right, budget);
    if (r == Answer::yes) {
        return right;
    }
    if (at_mid == Answer::no && l == Answer::no && r == Answer::no) {
        throw OracleViolation("no piece of " + i.to_string() + " split at " + mid.to_string() +
                              " is a Yes interval");
    }
    throw BudgetExhausted(budget.steps, "bisection of " + i.to_string() + " undecided");
}

// Continued fraction [a0; a1 a2 ...] with its convergents. exact_terminated
// is set only when the traversal landed on the number itself. steps counts
// mediant queries after the integer part was found.
struct CFExpansion {
    std::vector<BigInt> terms;
    std::vector<Rational> convergents;
    bool exact_terminated = false;
    std::uint64_t steps = 0;
};

inline std::vector<Rational> convergents_of(const std::vector<BigInt>& terms)
{
    std::vector<Rational> out;
    BigInt p_prev(1), q_prev(0);
    BigInt p_prev2(0), q_prev2(1);
    for (const auto& a : terms) {
        BigInt p = a * p_prev + p_prev2;
        BigInt q = a * q_prev + q_prev2;
        out.emplace_back(p, q);
        p_prev2 = std::exchange(p_prev, std::move(p));
        q_prev2 = std::exchange(q_prev, std::move(q));
    }
    return out;
}

// "a0; a1 a2 a3", or just "a0" for an integer.
inline std::string cf_to_string(const CFExpansion& cf)
{
    std::string out;
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        out += cf.terms[i].get_str();
        if (i == 0 && cf.terms.size() > 1) {
            out += ";";
        }
        if (i + 1 < cf.terms.size()) {
            out += " ";
        }
    }
    return out;
}

namespace detail {

inline Position locate_or_throw(const Oracle& o, const Rational& c, Budget budget)
{
    const Position p = o.locate(c, budget);
    if (p == Position::exhausted) {
        throw BudgetExhausted(budget.steps, "could not place the number relative to " + c.to_string());
    }
    return p;
}

struct IntegerPart {
    BigInt value;
    bool exact = false;
};

// Linear locate sweep starting from the floor of a unit-width enclosure.
inline IntegerPart integer_part(const Oracle& o, Budget budget)
{
    BigInt n;
    if (const auto r = o.root()) {
        n = floor(*r);
    } else if (const auto e = o.refine(Rational(1), budget)) {
        n = floor(e->lo());
    } else {
        throw BudgetExhausted(budget.steps, "no unit-width enclosure");
    }
    while (true) {
        const Position here = locate_or_throw(o, Rational(n), budget);
        if (here == Position::equal) {
            return {n, true};
        }
        if (here == Position::less) {
            n -= 1;
            continue;
        }
        const Position next = locate_or_throw(o, Rational(BigInt(n + 1)), budget);
        if (next == Position::equal) {
            return {n + 1, true};
        }
        if (next == Position::less) {
            return {n, false};
        }
        n += 1;
    }
}

} // namespace detail

// Stern-Brocot descent with mediants inside [a0, a0 + 1]. Runs of
// same-direction moves become continued fraction terms; the first run is
// one shorter than its term because the frame already sits one level down.
inline CFExpansion mediant_expand(const Oracle& o, std::size_t max_terms, Budget budget)
{
    CFExpansion cf;
    if (max_terms == 0) {
        return cf;
    }
    const auto ip = detail::integer_part(o, budget);
    cf.terms.push_back(ip.value);
    if (ip.exact) {
        cf.exact_terminated = true;
        cf.convergents = convergents_of(cf.terms);
        return cf;
    }

    BigInt lp = ip.value, lq = 1;
    BigInt rp = ip.value + 1, rq = 1;
    enum class Move { left, right };
    Move run_dir = Move::left;
    BigInt run_len = 0;
    bool first_run = true;

    while (cf.terms.size() < max_terms) {
        const Rational m(lp + rp, lq + rq);
        ++cf.steps;
        const Position p = detail::locate_or_throw(o, m, budget);
        if (p == Position::equal) {
            cf.terms.push_back(first_run ? run_len + 2 : run_len + 1);
            cf.exact_terminated = true;
            break;
        }
        const Move mv = (p == Position::less) ? Move::left : Move::right;
        if (mv == run_dir) {
            ++run_len;
        } else {
            cf.terms.push_back(first_run ? run_len + 1 : run_len);
            first_run = false;
            run_dir = mv;
            run_len = 1;
        }
        if (mv == Move::left) {
            rp = m.num();
            rq = m.den();
        } else {
            lp = m.num();
            lq = m.den();
        }
    }
    cf.convergents = convergents_of(cf.terms);
    return cf;
}

// Closest rational with denominator <= max_denominator (best approximation
// of the first kind). The Stern-Brocot frame is walked until its mediant
// would exceed the bound; the frame ends are then neighbours in the Farey
// sequence of that order, so one of them is the answer. Runs of equal moves
// are taken in galloping strides. Ties go to the smaller denominator, then
// the smaller numerator.
inline Rational best_approx(const Oracle& o, const BigInt& max_denominator, Budget budget)
{
    if (max_denominator < 1) {
        throw std::invalid_argument("max_denominator must be positive");
    }
    const auto ip = detail::integer_part(o, budget);
    if (ip.exact) {
        return Rational(ip.value);
    }
    BigInt lp = ip.value, lq = 1;
    BigInt rp = ip.value + 1, rq = 1;

    while (lq + rq <= max_denominator) {
        const Rational m(lp + rp, lq + rq);
        const Position p = detail::locate_or_throw(o, m, budget);
        if (p == Position::equal) {
            return m;
        }
        // Moving right replaces the left end with (lp + j rp)/(lq + j rq);
        // moving left replaces the right end symmetrically.
        const bool right = (p == Position::greater);
        const BigInt& bp = right ? lp : rp;
        const BigInt& bq = right ? lq : rq;
        const BigInt& sp = right ? rp : lp;
        const BigInt& sq = right ? rq : lq;
        const auto candidate = [&](const BigInt& j) { return Rational(bp + j * sp, bq + j * sq); };
        const Position keep = right ? Position::greater : Position::less;
        // largest j with denominator in range
        const BigInt j_max = (max_denominator - bq) / sq;

        std::optional<Rational> exact_hit;
        const auto holds = [&](const BigInt& j) {
            const Rational c = candidate(j);
            const Position pos = detail::locate_or_throw(o, c, budget);
            if (pos == Position::equal) {
                exact_hit = c;
            }
            return pos == keep;
        };
        BigInt good = 1;
        BigInt bad = j_max + 1;
        for (BigInt step = 2; step <= j_max; step *= 2) {
            if (!holds(step)) {
                bad = step;
                break;
            }
            good = step;
        }
        if (bad == j_max + 1 && good < j_max) {
            if (holds(j_max)) {
                good = j_max;
            } else {
                bad = j_max;
            }
        }
        while (bad - good > 1) {
            const BigInt mid = (good + bad) / 2;
            if (holds(mid)) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        if (exact_hit && exact_hit->den() <= max_denominator) {
            return *exact_hit;
        }
        const Rational next = candidate(good);
        if (right) {
            lp = next.num();
            lq = next.den();
        } else {
            rp = next.num();
            rq = next.den();
        }
    }

    const Rational left(lp, lq);
    const Rational right(rp, rq);
    switch (detail::locate_or_throw(o, midpoint(left, right), budget)) {
    case Position::less:
        return left;
    case Position::greater:
        return right;
    default:
        break;
    }
    if (lq != rq) {
        return lq < rq ? left : right;
    }
    return std::min(left, right);
}

// Decimal enclosure "d.ddd ± 1e-N": the number lies within 10^-N of the
// printed value. The printed value is the truncation toward zero to N digits,
// or the nearest N-digit value when the number sits on a digit boundary.
struct DecimalEnclosure {
    std::string text;
    Rational value;
    unsigned digits = 0;
    bool exact = false;
    Interval enclosure = Interval::point(Rational(0));
};

inline std::string format_fixed(const BigInt& scaled, unsigned digits)
{
    BigInt mag = abs(scaled);
    std::string body = mag.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    if (digits > 0) {
        body.insert(body.size() - digits, ".");
    }
    return (sgn(scaled) < 0 ? "-" : "") + body;
}

inline constexpr int max_decimal_halvings = 32;

inline DecimalEnclosure to_decimal(const Oracle& o, unsigned digits, Budget budget)
{
    const BigInt scale = pow10(digits);
    const Rational unit(BigInt(1), scale);
    Rational width(BigInt(1), pow10(digits + 2));
    std::optional<Interval> e = o.refine(width, budget);
    if (!e) {
        throw BudgetExhausted(budget.steps, "decimal enclosure to " + std::to_string(digits) + " digits");
    }
    const auto finish = [&](const BigInt& scaled, const Interval& enc) {
        DecimalEnclosure out;
        out.value = Rational(scaled, scale);
        out.digits = digits;
        out.enclosure = enc;
        out.exact = enc.is_singleton() && enc.lo() == out.value;
        out.text = format_fixed(scaled, digits) + " ± 1e" + (digits ? "-" : "") + std::to_string(digits);
        return out;
    };
    for (int halving = 0;; ++halving) {
        const BigInt a = trunc(e->lo() * Rational(scale));
        const BigInt b = trunc(e->hi() * Rational(scale));
        if (a == b) {
            return finish(a, *e);
        }
        if (e->is_singleton()) {
            throw OracleViolation("singleton enclosure straddles a digit boundary");
        }
        std::optional<Interval> narrower;
        if (halving < max_decimal_halvings) {
            width = e->width() / Rational(2);
            narrower = o.refine(width, budget);
        }
        if (!narrower) {
            // The number sits on (or very near) a digit boundary. The grid
            // point nearest the midpoint is within 1e-N of the whole enclosure.
            const BigInt nearest = floor(e->mid() * Rational(scale) + Rational(BigInt(1), BigInt(2)));
            const Rational d(nearest, scale);
            if (e->lo() < d - unit || e->hi() > d + unit) {
                throw BudgetExhausted(budget.steps, "decimal enclosure to " + std::to_string(digits) + " digits");
            }
            return finish(nearest, *e);
        }
        e = narrower;
    }
}

} // namespace oracles

#endif
