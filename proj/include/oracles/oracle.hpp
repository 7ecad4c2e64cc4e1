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

#ifndef ORACLES_ORACLE_HPP
#define ORACLES_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "oracles/interval.hpp"

namespace oracles {

// Effort bound for one query: the number of refinement rounds (indices of
// the refiner stream) a query may look at. Budget{0} permits no refinement.
struct Budget {
    std::uint64_t steps = 0;
};

// Outcome of a membership query. Yes and No are definitive; a larger budget
// can only turn exhausted into one of them.
enum class Answer { no, yes, exhausted };

// Position of the oracle's number relative to a rational.
enum class Position { less, equal, greater, exhausted };

inline const char* to_string(Answer a)
{
    switch (a) {
    case Answer::yes:
        return "Yes";
    case Answer::no:
        return "No";
    case Answer::exhausted:
        return "Exhausted";
    }
    return "?";
}

inline const char* to_string(Position p)
{
    switch (p) {
    case Position::less:
        return "Less";
    case Position::equal:
        return "Equal";
    case Position::greater:
        return "Greater";
    case Position::exhausted:
        return "Exhausted";
    }
    return "?";
}

inline Position compare_rationals(const Rational& x, const Rational& c)
{
    if (x < c) {
        return Position::less;
    }
    return x == c ? Position::equal : Position::greater;
}

// Implementation side of an oracle.
//
// enclosure(k) is the refiner stream in running-intersection form: every
// element is a Yes interval, enclosure(k + 1) is a subset of enclosure(k),
// and widths go to zero. rule() and locate_hint() are optional exact
// shortcuts; returning exhausted / nullopt means "ask the stream".
//
// Implementations are immutable apart from monotone caches, which must be
// safe under concurrent readers.
class OracleImpl {
public:
    explicit OracleImpl(std::optional<Rational> root = std::nullopt) : root_(std::move(root)) {}
    virtual ~OracleImpl() = default;

    OracleImpl(const OracleImpl&) = delete;
    OracleImpl& operator=(const OracleImpl&) = delete;

    virtual Interval enclosure(std::uint64_t k) const = 0;

    virtual Answer rule(const Interval&, Budget) const { return Answer::exhausted; }

    virtual std::optional<Position> locate_hint(const Rational&) const { return std::nullopt; }

    std::optional<Rational> known_root() const
    {
        std::lock_guard lock(root_mutex_);
        return root_;
    }

    // Roots are only ever learned, never forgotten or replaced.
    void record_root(const Rational& r) const
    {
        std::lock_guard lock(root_mutex_);
        if (!root_) {
            root_ = r;
        }
    }

private:
    mutable std::mutex root_mutex_;
    mutable std::optional<Rational> root_;
};

namespace detail {

// Probe order for monotone predicates over stream indices [0, limit):
// 0, 1, 3, 7, ... and finally limit - 1. Once a predicate holds at some
// index it holds at every later one, so probing a subset is exact.
template <typename F>
std::optional<std::uint64_t> first_probe_where(std::uint64_t limit, F&& pred)
{
    if (limit == 0) {
        return std::nullopt;
    }
    std::uint64_t k = 0;
    while (true) {
        if (pred(k)) {
            return k;
        }
        if (k == limit - 1) {
            return std::nullopt;
        }
        k = (k >= (limit - 1) / 2) ? limit - 1 : 2 * k + 1;
    }
}

// Smallest index in [0, limit) satisfying a monotone predicate: gallop
// forward, then bisect between the last failing and first passing probe.
template <typename F>
std::optional<std::uint64_t> first_index_where(std::uint64_t limit, F&& pred)
{
    std::optional<std::uint64_t> last_fail;
    const auto hit = first_probe_where(limit, [&](std::uint64_t k) {
        if (pred(k)) {
            return true;
        }
        last_fail = k;
        return false;
    });
    if (!hit || !last_fail) {
        return hit;
    }
    std::uint64_t lo = *last_fail;
    std::uint64_t hi = *hit;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace detail

// A real number, as a budgeted Yes/No rule over inclusive rational intervals.
// Cheap to copy; copies share the underlying implementation.
class Oracle {
public:
    explicit Oracle(std::shared_ptr<const OracleImpl> impl) : impl_(std::move(impl)) {}

    // The k-th refiner interval. Always a Yes interval.
    Interval enclosure(std::uint64_t k) const
    {
        Interval out = impl_->enclosure(k);
        if (out.is_singleton()) {
            impl_->record_root(out.lo());
        }
        return out;
    }

    Answer decide(const Interval& query, Budget budget) const
    {
        if (const Answer a = impl_->rule(query, budget); a != Answer::exhausted) {
            return a;
        }
        if (const auto r = impl_->known_root()) {
            return contains(query, *r) ? Answer::yes : Answer::no;
        }
        Answer found = Answer::exhausted;
        detail::first_probe_where(budget.steps, [&](std::uint64_t k) {
            const Interval e = enclosure(k);
            if (is_subset(e, query)) {
                found = Answer::yes;
            } else if (is_disjoint(e, query)) {
                found = Answer::no;
            }
            return found != Answer::exhausted;
        });
        return found;
    }

    // A Yes interval of width <= width, or nullopt when the budget runs out.
    // Among stream elements, the first one narrow enough is returned.
    std::optional<Interval> refine(const Rational& width, Budget budget) const
    {
        if (width.sign() <= 0) {
            throw std::invalid_argument("refine width must be positive");
        }
        if (budget.steps == 0) {
            return std::nullopt;
        }
        if (const auto r = impl_->known_root()) {
            return Interval::point(*r);
        }
        const auto k = detail::first_index_where(budget.steps, [&](std::uint64_t i) {
            return enclosure(i).width() <= width;
        });
        if (!k) {
            return std::nullopt;
        }
        return enclosure(*k);
    }

    Position locate(const Rational& c, Budget budget) const
    {
        if (const auto r = impl_->known_root()) {
            return compare_rationals(*r, c);
        }
        if (const auto p = impl_->locate_hint(c)) {
            return *p;
        }
        Position found = Position::exhausted;
        detail::first_probe_where(budget.steps, [&](std::uint64_t k) {
            const Interval e = enclosure(k);
            if (e.hi() < c) {
                found = Position::less;
            } else if (e.lo() > c) {
                found = Position::greater;
            } else if (e.is_singleton()) {
                found = Position::equal;
            }
            return found != Position::exhausted;
        });
        return found;
    }

    // The root when one is known. Absence means "not known", not "irrational".
    std::optional<Rational> root() const { return impl_->known_root(); }

    const OracleImpl& impl() const noexcept { return *impl_; }
    std::shared_ptr<const OracleImpl> share() const noexcept { return impl_; }

private:
    std::shared_ptr<const OracleImpl> impl_;
};

inline Answer decide(const Oracle& o, const Interval& i, Budget b) { return o.decide(i, b); }
inline std::optional<Interval> refine(const Oracle& o, const Rational& width, Budget b) { return o.refine(width, b); }
inline Position locate(const Oracle& o, const Rational& c, Budget b) { return o.locate(c, b); }
inline std::optional<Rational> is_rooted(const Oracle& o) { return o.root(); }

// Shrinking-interval description of a number: any two enumerated intervals
// intersect and some enumerated interval is shorter than any given length.
// The claimed root stands in for the infinite intersection of the family.
struct FonsiSource {
    std::function<Interval(std::uint64_t)> enumerator;
    std::optional<Rational> claimed_root;
};

namespace detail {

// Keeps the running finite intersection of the enumerated intervals.
class FonsiImpl final : public OracleImpl {
public:
    explicit FonsiImpl(FonsiSource src) : OracleImpl(src.claimed_root), src_(std::move(src)) {}

    Interval enclosure(std::uint64_t k) const override
    {
        std::lock_guard lock(mutex_);
        while (cache_.size() <= k) {
            const std::uint64_t idx = cache_.size();
            const Interval next = src_.enumerator(idx);
            if (src_.claimed_root && !contains(next, *src_.claimed_root)) {
                throw InvalidFonsi("enumerated interval " + next.to_string() + " at index " + std::to_string(idx) +
                                   " misses the claimed root " + src_.claimed_root->to_string());
            }
            if (cache_.empty()) {
                cache_.push_back(next);
                continue;
            }
            const auto meet = intersect(cache_.back(), next);
            if (!meet) {
                throw InvalidFonsi("enumerated interval " + next.to_string() + " at index " + std::to_string(idx) +
                                   " is disjoint from earlier ones");
            }
            cache_.push_back(*meet);
        }
        return cache_[k];
    }

private:
    FonsiSource src_;
    mutable std::mutex mutex_;
    mutable std::vector<Interval> cache_;
};

// Wraps a caller-supplied rule and refiner verbatim. Used for testing the
// axiom harness against rules that are not oracles.
class RuleImpl final : public OracleImpl {
public:
    RuleImpl(std::function<Answer(const Interval&, Budget)> rule, std::function<Interval(std::uint64_t)> refiner,
             std::optional<Rational> root)
        : OracleImpl(std::move(root)), rule_(std::move(rule)), refiner_(std::move(refiner))
    {
    }

    Interval enclosure(std::uint64_t k) const override { return refiner_(k); }
    Answer rule(const Interval& i, Budget b) const override { return rule_(i, b); }

private:
    std::function<Answer(const Interval&, Budget)> rule_;
    std::function<Interval(std::uint64_t)> refiner_;
};

} // namespace detail

// The unique oracle whose Yes intervals are those containing a finite
// intersection of enumerated intervals, plus the claimed root singleton.
// The source is pulled lazily; the first two intervals are checked eagerly.
inline Oracle oracle_from_fonsi(FonsiSource src)
{
    if (!src.enumerator) {
        throw std::invalid_argument("fonsi source needs an enumerator");
    }
    auto impl = std::make_shared<detail::FonsiImpl>(std::move(src));
    impl->enclosure(1);
    return Oracle(std::move(impl));
}

inline Oracle oracle_from_rule(std::function<Answer(const Interval&, Budget)> rule,
                               std::function<Interval(std::uint64_t)> refiner,
                               std::optional<Rational> root = std::nullopt)
{
    return Oracle(std::make_shared<detail::RuleImpl>(std::move(rule), std::move(refiner), std::move(root)));
}

} // namespace oracles

#endif
