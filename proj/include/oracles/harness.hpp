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


#ifndef ORACLES_HARNESS_HPP
#define ORACLES_HARNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles/oracle.hpp"

namespace oracles {

// Falsification-oriented checks of the oracle properties over seeded random
// rational intervals. Passed only ever means "no counterexample found".

enum class Verdict { passed, falsified, inconclusive };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::passed:
        return "Passed";
    case Verdict::falsified:
        return "Falsified";
    case Verdict::inconclusive:
        return "Inconclusive";
    }
    return "?";
}

struct QueryRecord {
    Interval interval;
    Answer answer;
};

// Replayable witness: re-deciding each interval at `budget` reproduces the
// recorded answers.
struct Counterexample {
    std::vector<QueryRecord> queries;
    Budget budget;
    std::string detail;
};

struct AxiomReport {
    std::string property;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Counterexample> counterexample;
    std::size_t samples_run = 0;
    std::size_t conclusive = 0;
    std::string note;
};

inline constexpr std::array<const char*, 9> axiom_names = {
    "Consistency",        "Existence",    "Closed",    "Rooted",       "Separation",
    "TwoPointSeparation", "Disjointness", "Narrowing", "Intersection",
};

// "PROPERTY verdict samples [counterexample]"
inline std::string to_string(const AxiomReport& r)
{
    std::string out = r.property + " " + to_string(r.verdict) + " " + std::to_string(r.samples_run);
    if (r.counterexample) {
        std::string ce;
        for (const auto& q : r.counterexample->queries) {
            ce += q.interval.to_string() + "->" + to_string(q.answer) + "; ";
        }
        ce += "budget " + std::to_string(r.counterexample->budget.steps);
        if (!r.counterexample->detail.empty()) {
            ce += "; " + r.counterexample->detail;
        }
        out += " [" + ce + "]";
    }
    return out;
}

inline bool replay(const Oracle& o, const Counterexample& ce)
{
    for (const auto& q : ce.queries) {
        if (o.decide(q.interval, ce.budget) != q.answer) {
            return false;
        }
    }
    return true;
}

namespace detail {

// Draws rationals and intervals from denominator-bounded grids laid around
// the oracle's own refined intervals at depths 0..max_depth, so intervals
// that touch the number are common.
class IntervalSampler {
public:
    static constexpr unsigned max_depth = 24;

    IntervalSampler(const Oracle& o, Budget budget, std::uint64_t seed) : rng_(seed), root_(o.root())
    {
        Interval fallback = o.enclosure(0);
        for (unsigned d = 0; d <= max_depth; ++d) {
            const Rational target(BigInt(1), pow2(d));
            if (const auto e = o.refine(target, budget)) {
                fallback = *e;
            }
            levels_.push_back(fallback);
        }
    }

    std::mt19937_64& rng() { return rng_; }

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    bool chance(unsigned one_in) { return uniform(1, one_in) == 1; }

    unsigned depth() { return static_cast<unsigned>(uniform(0, max_depth)); }

    const Interval& level(unsigned d) const { return levels_[d]; }

    // Grid frame around level d: [lo - s, hi + s] cut into `cells` pieces.
    struct Frame {
        Rational origin;
        Rational step;
        std::uint64_t cells;
    };

    Frame frame(unsigned d)
    {
        const Interval& e = levels_[d];
        Rational s = std::max(e.width(), Rational(BigInt(1), pow2(d)));
        static constexpr long widen[] = {1, 1, 1, 2, 4, 8};
        s *= Rational(widen[uniform(0, 5)]);
        const std::uint64_t cells = uniform(1, 16);
        const Rational span = e.width() + s + s;
        return Frame{e.lo() - s, span / Rational(static_cast<long>(cells)), cells};
    }

    Rational grid_point(unsigned d)
    {
        const Interval& e = levels_[d];
        switch (uniform(0, 11)) {
        case 0:
            return e.lo();
        case 1:
            return e.hi();
        case 2:
            if (root_) {
                return *root_;
            }
            return e.mid();
        default:
            break;
        }
        const Frame f = frame(d);
        return f.origin + f.step * Rational(static_cast<long>(uniform(0, f.cells)));
    }

    Interval interval()
    {
        const unsigned d = depth();
        const Rational a = grid_point(d);
        if (chance(10)) {
            return Interval::point(a);
        }
        return Interval::make(a, grid_point(d));
    }

    // A refined interval, sometimes padded outward; Yes for a real oracle.
    Interval yes_candidate()
    {
        const unsigned d = depth();
        Interval e = levels_[d];
        if (e.is_singleton() || chance(2)) {
            e = pad(e, d);
        }
        return e;
    }

    Interval pad(const Interval& e, unsigned d)
    {
        const Frame f = frame(d);
        const Rational left = f.step * Rational(static_cast<long>(uniform(0, f.cells)));
        const Rational right = f.step * Rational(static_cast<long>(uniform(0, f.cells)));
        return Interval::make(e.lo() - left, e.hi() + right);
    }

    // Strictly interior rational of a non-singleton interval.
    Rational interior(const Interval& j)
    {
        if (root_ && j.lo() < *root_ && *root_ < j.hi() && chance(4)) {
            return *root_;
        }
        const Interval& e = levels_[depth()];
        for (const Rational& c : {e.lo(), e.hi()}) {
            if (j.lo() < c && c < j.hi() && chance(3)) {
                return c;
            }
        }
        const std::uint64_t cells = uniform(2, 16);
        const std::uint64_t i = uniform(1, cells - 1);
        return j.lo() + j.width() * Rational(static_cast<long>(i), static_cast<long>(cells));
    }

private:
    std::mt19937_64 rng_;
    std::optional<Rational> root_;
    std::vector<Interval> levels_;
};

class AxiomChecker {
public:
    AxiomChecker(const Oracle& o, std::uint64_t seed, std::size_t samples, Budget budget)
        : o_(o), seed_(seed), samples_(samples), budget_(budget)
    {
    }

    std::vector<AxiomReport> run()
    {
        return {consistency(), existence(), closed(),   rooted(),       separation(),
                two_point(),   disjoint(),  narrowing(), intersection()};
    }

private:
    IntervalSampler sampler(std::uint64_t salt) const
    {
        return IntervalSampler(o_, budget_, seed_ * 0x9E3779B97F4A7C15ULL + salt);
    }

    Answer ask(const Interval& i) const { return o_.decide(i, budget_); }

    AxiomReport start(const char* name) const
    {
        AxiomReport r;
        r.property = name;
        r.samples_run = samples_;
        return r;
    }

    void falsify(AxiomReport& r, std::vector<QueryRecord> queries, std::string detail = {}) const
    {
        if (!r.counterexample) {
            r.counterexample = Counterexample{std::move(queries), budget_, std::move(detail)};
        }
    }

    static void settle(AxiomReport& r)
    {
        if (r.counterexample) {
            r.verdict = Verdict::falsified;
        } else {
            r.verdict = r.conclusive > 0 ? Verdict::passed : Verdict::inconclusive;
        }
    }

    // A Yes interval that is not a singleton, or nullopt after a few tries.
    std::optional<Interval> wide_yes(IntervalSampler& s) const
    {
        for (int attempt = 0; attempt < 4; ++attempt) {
            Interval j = s.chance(2) ? s.yes_candidate() : s.interval();
            if (j.is_singleton()) {
                j = s.pad(j, s.depth());
            }
            if (!j.is_singleton() && ask(j) == Answer::yes) {
                return j;
            }
        }
        return std::nullopt;
    }

    AxiomReport consistency() const
    {
        auto r = start("Consistency");
        auto s = sampler(1);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const Interval j = s.chance(2) ? s.yes_candidate() : s.interval();
            if (ask(j) != Answer::yes) {
                continue;
            }
            const Interval i = s.pad(j, s.depth());
            const Answer a = ask(i);
            if (a == Answer::yes) {
                ++r.conclusive;
            } else if (a == Answer::no) {
                falsify(r, {{j, Answer::yes}, {i, Answer::no}}, "superset of a Yes interval is No");
            }
        }
        settle(r);
        return r;
    }

    AxiomReport existence() const
    {
        auto r = start("Existence");
        auto s = sampler(2);
        std::optional<QueryRecord> refused;
        for (std::size_t t = 0; t < samples_; ++t) {
            const Interval j = t % 2 ? s.interval() : s.level(s.depth());
            const Answer a = ask(j);
            if (a == Answer::yes) {
                ++r.conclusive;
            } else if (a == Answer::no && t % 2 == 0 && !refused) {
                refused = QueryRecord{j, a};
            }
        }
        if (r.conclusive > 0) {
            r.verdict = Verdict::passed;
        } else if (refused) {
            falsify(r, {*refused}, "no Yes interval found; the refiner's own output is No");
            r.verdict = Verdict::falsified;
        } else {
            r.verdict = Verdict::inconclusive;
        }
        return r;
    }

    AxiomReport closed() const
    {
        auto r = start("Closed");
        const auto root = o_.root();
        if (!root) {
            r.verdict = Verdict::passed;
            r.note = "vacuous: no known root";
            return r;
        }
        auto s = sampler(3);
        const Interval point = Interval::point(*root);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const Interval j = s.yes_candidate();
            if (ask(j) != Answer::yes || !contains(j, *root)) {
                continue;
            }
            const Answer a = ask(point);
            if (a == Answer::yes) {
                ++r.conclusive;
            } else if (a == Answer::no) {
                falsify(r, {{j, Answer::yes}, {point, Answer::no}}, "root singleton is No");
            }
        }
        settle(r);
        return r;
    }

    AxiomReport rooted() const
    {
        auto r = start("Rooted");
        auto s = sampler(4);
        std::optional<Rational> first_yes;
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const Rational c = s.grid_point(s.depth());
            const Interval point = Interval::point(c);
            const Answer a = ask(point);
            if (a == Answer::exhausted) {
                continue;
            }
            ++r.conclusive;
            if (a != Answer::yes) {
                continue;
            }
            if (!first_yes) {
                first_yes = c;
            } else if (*first_yes != c) {
                falsify(r, {{Interval::point(*first_yes), Answer::yes}, {point, Answer::yes}},
                        "two distinct Yes singletons");
            }
        }
        settle(r);
        return r;
    }

    AxiomReport separation() const
    {
        auto r = start("Separation");
        auto s = sampler(5);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const auto j = wide_yes(s);
            if (!j) {
                continue;
            }
            const Rational c = s.interior(*j);
            const Interval left = Interval::make(j->lo(), c);
            const Interval point = Interval::point(c);
            const Interval right = Interval::make(c, j->hi());
            const Answer al = ask(left);
            const Answer ap = ask(point);
            const Answer ar = ask(right);
            if (al == Answer::exhausted || ap == Answer::exhausted || ar == Answer::exhausted) {
                continue;
            }
            ++r.conclusive;
            const int yes_sides = (al == Answer::yes) + (ar == Answer::yes);
            const bool ok = ap == Answer::yes ? yes_sides == 2 : yes_sides == 1;
            if (!ok) {
                falsify(r, {{*j, Answer::yes}, {left, al}, {point, ap}, {right, ar}},
                        "split at " + c.to_string());
            }
        }
        settle(r);
        return r;
    }

    AxiomReport two_point() const
    {
        auto r = start("TwoPointSeparation");
        auto s = sampler(6);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const auto j = wide_yes(s);
            if (!j) {
                continue;
            }
            const Rational a = s.interior(*j);
            Rational b = s.chance(2) ? j->lo() : j->hi();
            if (s.chance(2)) {
                b = s.interior(*j);
            }
            if (a == b) {
                continue;
            }
            const Interval pair = Interval::make(a, b);
            const auto narrow = o_.refine(pair.width() / Rational(2), budget_);
            if (!narrow) {
                continue;
            }
            const Answer an = ask(*narrow);
            if (an == Answer::exhausted) {
                continue;
            }
            ++r.conclusive;
            const bool separates = !contains(*narrow, pair.lo()) || !contains(*narrow, pair.hi());
            if (an != Answer::yes || !separates) {
                falsify(r, {{*j, Answer::yes}, {*narrow, an}},
                        "points " + pair.lo().to_string() + ", " + pair.hi().to_string());
            }
        }
        settle(r);
        return r;
    }

    AxiomReport disjoint() const
    {
        auto r = start("Disjointness");
        auto s = sampler(7);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const Interval i = s.chance(2) ? s.yes_candidate() : s.interval();
            const unsigned d = s.depth();
            const auto f = s.frame(d);
            const Rational gap = f.step * Rational(static_cast<long>(s.uniform(1, f.cells)));
            const Rational len = f.step * Rational(static_cast<long>(s.uniform(0, f.cells)));
            const Interval j = s.chance(2) ? Interval::make(i.hi() + gap, i.hi() + gap + len)
                                           : Interval::make(i.lo() - gap - len, i.lo() - gap);
            const Answer ai = ask(i);
            const Answer aj = ask(j);
            if (ai == Answer::exhausted || aj == Answer::exhausted) {
                continue;
            }
            ++r.conclusive;
            if (ai == Answer::yes && aj == Answer::yes) {
                falsify(r, {{i, ai}, {j, aj}}, "disjoint Yes intervals");
            }
        }
        settle(r);
        return r;
    }

    AxiomReport narrowing() const
    {
        auto r = start("Narrowing");
        auto s = sampler(8);
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            const Rational length = t < 40 ? Rational(BigInt(1), pow2(t + 1))
                                           : Rational(BigInt(1), BigInt(std::to_string(s.uniform(1, 1u << 20))));
            const auto narrow = o_.refine(length, budget_);
            if (!narrow) {
                continue;
            }
            const Answer a = ask(*narrow);
            if (a == Answer::exhausted) {
                continue;
            }
            ++r.conclusive;
            if (a != Answer::yes || narrow->width() > length) {
                falsify(r, {{*narrow, a}}, "length " + length.to_string());
            }
        }
        settle(r);
        return r;
    }

    AxiomReport intersection() const
    {
        auto r = start("Intersection");
        auto s = sampler(9);
        std::optional<Interval> max_lo;
        std::optional<Interval> min_hi;
        for (std::size_t t = 0; t < samples_ && !r.counterexample; ++t) {
            std::optional<Interval> j;
            if (t % 2) {
                j = s.interval();
            } else {
                j = o_.refine(Rational(BigInt(1), pow2(s.depth())), budget_);
            }
            if (!j || ask(*j) != Answer::yes) {
                continue;
            }
            ++r.conclusive;
            if (!max_lo || j->lo() > max_lo->lo()) {
                max_lo = j;
            }
            if (!min_hi || j->hi() < min_hi->hi()) {
                min_hi = j;
            }
            if (max_lo->lo() > min_hi->hi()) {
                falsify(r, {{*max_lo, Answer::yes}, {*min_hi, Answer::yes}}, "disjoint Yes intervals");
            }
        }
        settle(r);
        return r;
    }

    const Oracle& o_;
    std::uint64_t seed_;
    std::size_t samples_;
    Budget budget_;
};

} // namespace detail

// Runs all nine property checks. Deterministic in (oracle, seed, samples,
// budget) for a freshly built oracle.
inline std::vector<AxiomReport> check_axioms(const Oracle& o, std::uint64_t seed, std::size_t samples, Budget budget)
{
    if (samples < 1) {
        throw std::invalid_argument("check_axioms needs at least one sample");
    }
    return detail::AxiomChecker(o, seed, samples, budget).run();
}

} // namespace oracles

#endif
