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


#ifndef ORACLES_CONSTRUCTORS_HPP
#define ORACLES_CONSTRUCTORS_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "oracles/oracle.hpp"
#include "oracles/polynomial.hpp"

namespace oracles {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& r) { return static_cast<Sign>(r.sign()); }

// Exact sign oracle for a function of one rational variable. eval_sign must
// be deterministic and safe to call concurrently.
struct SignFunction {
    std::function<Sign(const Rational&)> eval_sign;
    std::string description;
};

inline SignFunction polynomial_sign(Polynomial p)
{
    std::string desc = "poly" + p.to_string();
    return SignFunction{[p = std::move(p)](const Rational& x) { return sign_of(p(x)); }, std::move(desc)};
}

// Cauchy sequence with a modulus of convergence: for every eps > 0, all
// terms at indices >= modulus(eps) are within eps of each other.
struct CauchySpec {
    std::function<Rational(std::uint64_t)> term;
    std::function<std::uint64_t(const Rational&)> modulus;
    std::optional<Rational> known_limit;
};

// A nonempty set bounded above, given through its upper bounds: is_ub is
// monotone (once true, true for every larger rational), seed_member is not
// above the least upper bound and seed_bound is an upper bound.
struct UpperBoundTest {
    std::function<bool(const Rational&)> is_ub;
    Rational seed_member;
    Rational seed_bound;
};

namespace detail {

class RationalImpl final : public OracleImpl {
public:
    explicit RationalImpl(Rational q) : OracleImpl(q), q_(std::move(q)) {}

    Interval enclosure(std::uint64_t) const override { return Interval::point(q_); }

    Answer rule(const Interval& i, Budget) const override { return contains(i, q_) ? Answer::yes : Answer::no; }

    std::optional<Position> locate_hint(const Rational& c) const override { return compare_rationals(q_, c); }

private:
    Rational q_;
};

// Positive n-th root of q > 0. The stream is the dyadic grid refinement of
// [floor(root), floor(root) + 1], computed directly at any depth.
class NthRootImpl final : public OracleImpl {
public:
    NthRootImpl(unsigned long n, Rational q, std::optional<Rational> root)
        : OracleImpl(std::move(root)), n_(n), q_(std::move(q))
    {
    }

    Interval enclosure(std::uint64_t k) const override
    {
        if (const auto r = known_root()) {
            return Interval::point(*r);
        }
        const BigInt scale = pow2(k);
        BigInt scaled_num;
        mpz_mul_2exp(scaled_num.get_mpz_t(), q_.num().get_mpz_t(), k * n_);
        const BigInt floor_value = scaled_num / q_.den();
        const BigInt m = integer_root(floor_value, n_).first;
        return Interval::make(Rational(m, scale), Rational(m + 1, scale));
    }

    Answer rule(const Interval& i, Budget) const override
    {
        if (i.hi().sign() <= 0) {
            return Answer::no;
        }
        if (pow(i.hi(), n_) < q_) {
            return Answer::no;
        }
        if (i.lo().sign() <= 0) {
            return Answer::yes;
        }
        return pow(i.lo(), n_) <= q_ ? Answer::yes : Answer::no;
    }

    std::optional<Position> locate_hint(const Rational& c) const override
    {
        if (c.sign() <= 0) {
            return Position::greater;
        }
        // The root sits on the opposite side of c from where c^n sits relative to q.
        const Rational p = pow(c, n_);
        if (p == q_) {
            return Position::equal;
        }
        return p < q_ ? Position::greater : Position::less;
    }

private:
    unsigned long n_;
    Rational q_;
};

// Bisection driven by an exact probe. Subclasses answer where the number
// lies relative to a rational; equal pins the root.
class BisectionImpl : public OracleImpl {
public:
    BisectionImpl(Interval start, std::optional<Rational> root)
        : OracleImpl(std::move(root)), cache_{std::move(start)}
    {
    }

    Interval enclosure(std::uint64_t k) const final
    {
        std::lock_guard lock(mutex_);
        while (cache_.size() <= k) {
            const Interval& last = cache_.back();
            if (last.is_singleton()) {
                cache_.push_back(last);
                continue;
            }
            const Rational mid = last.mid();
            switch (probe(mid)) {
            case Position::less:
                cache_.push_back(Interval::make(last.lo(), mid));
                break;
            case Position::greater:
                cache_.push_back(Interval::make(mid, last.hi()));
                break;
            case Position::equal:
                cache_.push_back(Interval::point(mid));
                break;
            case Position::exhausted:
                throw OracleViolation("bisection probe could not place the midpoint");
            }
        }
        return cache_[k];
    }

protected:
    virtual Position probe(const Rational& mid) const = 0;

private:
    mutable std::mutex mutex_;
    mutable std::vector<Interval> cache_;
};

class IvtImpl final : public BisectionImpl {
public:
    IvtImpl(SignFunction f, Interval bracket, Sign at_lo, std::optional<Rational> root)
        : BisectionImpl(bracket, std::move(root)), f_(std::move(f)), bracket_(std::move(bracket)), at_lo_(at_lo)
    {
    }

    Answer rule(const Interval& i, Budget) const override
    {
        const auto clipped = intersect(i, bracket_);
        if (!clipped) {
            return Answer::no;
        }
        const int s = static_cast<int>(f_.eval_sign(clipped->lo())) * static_cast<int>(f_.eval_sign(clipped->hi()));
        return s <= 0 ? Answer::yes : Answer::no;
    }

    std::optional<Position> locate_hint(const Rational& c) const override
    {
        if (c < bracket_.lo()) {
            return Position::greater;
        }
        if (c > bracket_.hi()) {
            return Position::less;
        }
        const Sign s = f_.eval_sign(c);
        if (s == Sign::zero) {
            record_root(c);
            return Position::equal;
        }
        if (at_lo_ == Sign::zero) {
            return Position::less;
        }
        return s == at_lo_ ? Position::greater : Position::less;
    }

protected:
    Position probe(const Rational& mid) const override { return *locate_hint(mid); }

private:
    SignFunction f_;
    Interval bracket_;
    Sign at_lo_;
};

class LubImpl final : public BisectionImpl {
public:
    explicit LubImpl(UpperBoundTest t, std::optional<Rational> root)
        : BisectionImpl(Interval::make(t.seed_member, t.seed_bound), std::move(root)), t_(std::move(t))
    {
    }

    // Sufficient conditions only; anything else falls through to the stream.
    Answer rule(const Interval& i, Budget) const override
    {
        if (!t_.is_ub(i.hi())) {
            return Answer::no;
        }
        if (!t_.is_ub(i.lo())) {
            return Answer::yes;
        }
        return Answer::exhausted;
    }

    std::optional<Position> locate_hint(const Rational& c) const override
    {
        if (!t_.is_ub(c)) {
            return Position::greater;
        }
        return std::nullopt;
    }

protected:
    Position probe(const Rational& mid) const override
    {
        return t_.is_ub(mid) ? Position::less : Position::greater;
    }

private:
    UpperBoundTest t_;
};

} // namespace detail

inline Oracle rational_oracle(const Rational& q) { return Oracle(std::make_shared<detail::RationalImpl>(q)); }

// Exact rational n-th root of q when it exists.
inline std::optional<Rational> exact_nth_root(const Rational& q, unsigned long n)
{
    if (q.sign() < 0) {
        return std::nullopt;
    }
    const auto [num_root, num_exact] = integer_root(q.num(), n);
    const auto [den_root, den_exact] = integer_root(q.den(), n);
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    return Rational(num_root, den_root);
}

inline Oracle nth_root_oracle(long n, const Rational& q)
{
    if (n < 1) {
        throw UnsupportedDomain("root index must be at least 1, got " + std::to_string(n));
    }
    if (q.sign() <= 0) {
        throw UnsupportedDomain("root of a non-positive rational " + q.to_string());
    }
    const auto un = static_cast<unsigned long>(n);
    return Oracle(std::make_shared<detail::NthRootImpl>(un, q, exact_nth_root(q, un)));
}

// Zero of f inside the bracket a:b. The caller asserts that f changes sign
// exactly once there; only the endpoint signs are checked.
inline Oracle ivt_oracle(SignFunction f, const Rational& a, const Rational& b)
{
    const Interval bracket = Interval::make(a, b);
    const Sign at_lo = f.eval_sign(bracket.lo());
    const Sign at_hi = f.eval_sign(bracket.hi());
    if (static_cast<int>(at_lo) * static_cast<int>(at_hi) > 0) {
        throw InvalidBracket("f has the same strict sign at " + bracket.lo().to_string() + " and " +
                             bracket.hi().to_string() + " (" + f.description + ")");
    }
    std::optional<Rational> root;
    if (at_lo == Sign::zero) {
        root = bracket.lo();
    } else if (at_hi == Sign::zero) {
        root = bracket.hi();
    }
    return Oracle(std::make_shared<detail::IvtImpl>(std::move(f), bracket, at_lo, std::move(root)));
}

// Limit of a Cauchy sequence, as the fonsi of tail enclosures
// [term(N) - eps, term(N) + eps] with eps = 2^-k and N = modulus(eps).
inline Oracle cauchy_oracle(CauchySpec spec)
{
    if (!spec.term || !spec.modulus) {
        throw std::invalid_argument("cauchy spec needs a term rule and a modulus");
    }
    auto enumerate = [term = spec.term, modulus = spec.modulus](std::uint64_t k) {
        const Rational eps(BigInt(1), pow2(k));
        const Rational t = term(modulus(eps));
        return Interval::make(t - eps, t + eps);
    };
    return oracle_from_fonsi(FonsiSource{std::move(enumerate), spec.known_limit});
}

inline Oracle lub_oracle(UpperBoundTest t)
{
    if (!t.is_ub) {
        throw std::invalid_argument("upper bound test needs an is_ub rule");
    }
    if (!t.is_ub(t.seed_bound)) {
        throw InvalidBounds("seed bound " + t.seed_bound.to_string() + " is not an upper bound");
    }
    if (t.seed_member > t.seed_bound) {
        throw InvalidBounds("seed member " + t.seed_member.to_string() + " exceeds seed bound " +
                            t.seed_bound.to_string());
    }
    // A member that is also an upper bound is the maximum.
    std::optional<Rational> root;
    if (t.is_ub(t.seed_member)) {
        root = t.seed_member;
    }
    return Oracle(std::make_shared<detail::LubImpl>(std::move(t), std::move(root)));
}

} // namespace oracles

#endif
