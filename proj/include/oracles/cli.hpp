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


#ifndef ORACLES_CLI_HPP
#define ORACLES_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "oracles/expr.hpp"
#include "oracles/harness.hpp"
#include "oracles/refine.hpp"

namespace oracles::cli {

// Exit codes: definitive answer, error, undecided within budget.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_undecided = 2;

inline constexpr std::uint64_t default_budget = 10000;

namespace detail {

struct Options {
    std::uint64_t budget = default_budget;
    bool json = false;
    std::string expression;
};

inline void emit(std::ostream& out, const Options& opt, const nlohmann::json& j, const std::string& text)
{
    if (opt.json) {
        out << j.dump() << "\n";
    } else {
        out << text << "\n";
    }
}

inline int exhausted(std::ostream& out, const Options& opt, const std::string& what = "Exhausted")
{
    emit(out, opt, {{"status", what}, {"budget", opt.budget}},
         what + " (budget " + std::to_string(opt.budget) + ")");
    return exit_undecided;
}

inline int cmd_eval(const Options& opt, unsigned digits, std::ostream& out)
{
    const Oracle o = expr::evaluate(*expr::parse_expr(opt.expression));
    try {
        const DecimalEnclosure d = to_decimal(o, digits, Budget{opt.budget});
        emit(out, opt,
             {{"lo", d.enclosure.lo().to_string()},
              {"hi", d.enclosure.hi().to_string()},
              {"status", "ok"},
              {"text", d.text},
              {"exact", d.exact}},
             d.text);
        return exit_ok;
    } catch (const BudgetExhausted&) {
        return exhausted(out, opt);
    }
}

inline int cmd_cf(const Options& opt, std::size_t terms, std::ostream& out)
{
    const Oracle o = expr::evaluate(*expr::parse_expr(opt.expression));
    try {
        const CFExpansion cf = mediant_expand(o, terms, Budget{opt.budget});
        nlohmann::json jterms = nlohmann::json::array();
        for (const auto& t : cf.terms) {
            jterms.push_back(t.get_str());
        }
        emit(out, opt, {{"terms", jterms}, {"exact", cf.exact_terminated}, {"status", "ok"}}, cf_to_string(cf));
        return exit_ok;
    } catch (const BudgetExhausted&) {
        return exhausted(out, opt);
    }
}

inline int cmd_approx(const Options& opt, const std::string& maxden, std::ostream& out)
{
    const Oracle o = expr::evaluate(*expr::parse_expr(opt.expression));
    const Rational q = Rational::parse(maxden);
    if (!q.is_integer() || q.sign() <= 0) {
        throw std::invalid_argument("--maxden must be a positive integer");
    }
    try {
        const Rational best = best_approx(o, q.num(), Budget{opt.budget});
        emit(out, opt, {{"value", best.to_string()}, {"status", "ok"}}, best.to_string());
        return exit_ok;
    } catch (const BudgetExhausted&) {
        return exhausted(out, opt);
    }
}

inline int cmd_query(const Options& opt, const std::string& interval, std::ostream& out)
{
    const Oracle o = expr::evaluate(*expr::parse_expr(opt.expression));
    const Interval i = Interval::parse(interval);
    const Answer a = o.decide(i, Budget{opt.budget});
    if (a == Answer::exhausted) {
        return exhausted(out, opt);
    }
    emit(out, opt, {{"lo", i.lo().to_string()}, {"hi", i.hi().to_string()}, {"status", to_string(a)}},
         to_string(a));
    return exit_ok;
}

inline int cmd_check(const Options& opt, std::size_t samples, std::uint64_t seed, std::ostream& out)
{
    const Oracle o = expr::evaluate(*expr::parse_expr(opt.expression));
    const auto reports = check_axioms(o, seed, samples, Budget{opt.budget});
    bool falsified = false;
    bool inconclusive = false;
    nlohmann::json j = nlohmann::json::array();
    std::string text;
    for (const auto& r : reports) {
        falsified |= r.verdict == Verdict::falsified;
        inconclusive |= r.verdict == Verdict::inconclusive;
        j.push_back({{"property", r.property},
                     {"verdict", to_string(r.verdict)},
                     {"samples", r.samples_run},
                     {"line", to_string(r)}});
        text += (text.empty() ? "" : "\n") + to_string(r);
    }
    emit(out, opt, j, text);
    if (falsified) {
        return exit_error;
    }
    return inconclusive ? exit_undecided : exit_ok;
}

} // namespace detail

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact real arithmetic with interval oracles", "oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    detail::Options opt;
    app.add_option("--budget", opt.budget, "refinement rounds per query")->capture_default_str();
    app.add_flag("--json", opt.json, "machine-readable output with exact rational strings");

    unsigned digits = 10;
    auto* eval = app.add_subcommand("eval", "decimal enclosure of an expression");
    eval->add_option("expr", opt.expression)->required();
    eval->add_option("--digits", digits)->capture_default_str();

    std::size_t terms = 10;
    auto* cf = app.add_subcommand("cf", "continued fraction terms by mediant descent");
    cf->add_option("expr", opt.expression)->required();
    cf->add_option("--terms", terms)->capture_default_str();

    std::string maxden = "1000";
    auto* approx = app.add_subcommand("approx", "best rational approximation with bounded denominator");
    approx->add_option("expr", opt.expression)->required();
    approx->add_option("--maxden", maxden)->capture_default_str();

    std::string interval;
    auto* query = app.add_subcommand("query", "Yes/No membership of the number in LO:HI");
    query->add_option("expr", opt.expression)->required();
    query->add_option("interval", interval, "LO:HI")->required();

    std::size_t samples = 500;
    std::uint64_t seed = 7;
    auto* check = app.add_subcommand("check", "run the oracle axiom checks");
    check->add_option("expr", opt.expression)->required();
    check->add_option("--samples", samples)->capture_default_str();
    check->add_option("--seed", seed)->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    try {
        if (eval->parsed()) {
            return detail::cmd_eval(opt, digits, out);
        }
        if (cf->parsed()) {
            return detail::cmd_cf(opt, terms, out);
        }
        if (approx->parsed()) {
            return detail::cmd_approx(opt, maxden, out);
        }
        if (query->parsed()) {
            return detail::cmd_query(opt, interval, out);
        }
        if (check->parsed()) {
            if (samples < 1) {
                throw std::invalid_argument("--samples must be at least 1");
            }
            return detail::cmd_check(opt, samples, seed, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    err << "error: no command\n";
    return exit_error;
}

} // namespace oracles::cli

#endif
