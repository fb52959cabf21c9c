/*
 * Copyright 2026 The distext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// distext: batch front end for the oracle, extender, bounds and lemma suites.
//
// Exit status: 0 success, 1 bad input or undefined quantity, 2 a property
// that should hold failed (a witness file is written), 3 budget exceeded.

#include "distext/distext.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace distext;

enum Exit { kOk = 0, kBadInput = 1, kPropertyFailed = 2, kOverBudget = 3 };

struct Config
{
    std::string format = "text";
    unsigned jobs = default_jobs();
    std::uint64_t seed = 1;
    std::string witness = "distext-witness.json";
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_witness(const Config& cfg, const Json& j)
{
    std::ofstream out(cfg.witness);
    out << j.dump(2) << "\n";
    std::cerr << "witness written to " << cfg.witness << "\n";
}

Json instance_witness(const PartialColoring& pre, const std::vector<std::string>& reasons)
{
    Json j = to_json(pre);
    j["reasons"] = reasons;
    return j;
}

bool json_out(const Config& cfg) { return cfg.format == "json"; }

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_dnum(const Config& cfg, int n)
{
    CycleSize size(n);
    const int d = distinguishing_number(size);
    if (json_out(cfg))
        print({{"n", n}, {"dnum", d}});
    else
        std::cout << d << "\n";
    return kOk;
}

struct ExtArgs
{
    int n = 0;
    int k = 2;
    bool force = false;
    bool no_reduce = false;
    std::string method = "auto";
};

int cmd_ext(const Config& cfg, const ExtArgs& a)
{
    ExtOptions opt;
    opt.jobs = cfg.jobs;
    opt.force = a.force;
    opt.reduce_orbits = !a.no_reduce;
    if (a.method == "bitset")
        opt.method = ExtOptions::Method::Bitset;
    else if (a.method == "enumerate")
        opt.method = ExtOptions::Method::Enumerate;
    const auto rep = ext_number(a.n, a.k, opt);
    if (json_out(cfg))
        print(to_json(rep));
    else
        std::cout << rep.value << (rep.vacuous ? " (vacuous)" : "") << "\n";
    return kOk;
}

std::pair<int, int> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw InputError("range must look like LO..HI, got '" + s + "'");
    }
}

struct ConjectureArgs
{
    std::string range;
    bool timing = false;
    double timeout = 0;
    bool force = false;
};

int cmd_verify_conjecture(const Config& cfg, const ConjectureArgs& a)
{
    const auto [lo, hi] = parse_range(a.range);
    ConjectureOptions opt;
    opt.jobs = cfg.jobs;
    opt.force = a.force;
    if (a.timeout > 0)
        opt.timeout = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000));
    const auto rows = verify_conjecture(lo, hi, opt);

    std::vector<std::string> failures;
    for (const auto& r : rows) {
        if (r.skipped || r.n < 6)
            continue;
        if (*r.computed > *r.corollary_bound)
            failures.push_back("n = " + std::to_string(r.n) + ": computed " + std::to_string(*r.computed) +
                               " exceeds the indicator bound " + std::to_string(*r.corollary_bound));
        const int lower = std::max(sharpness_instance(r.n).claimed_bound, best_embedding_lower_bound(r.n, r.k));
        if (*r.computed < lower)
            failures.push_back("n = " + std::to_string(r.n) + ": computed " + std::to_string(*r.computed) +
                               " is below the proven lower bound " + std::to_string(lower));
    }
    if (json_out(cfg)) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json row{{"n", r.n}, {"k", r.k}};
            row["computed"] = r.computed ? Json(*r.computed) : Json(nullptr);
            row["conjectured"] = r.conjectured;
            row["corollary_bound"] = r.corollary_bound ? Json(*r.corollary_bound) : Json(nullptr);
            row["agree"] = r.agree;
            if (a.timing)
                row["seconds"] = r.seconds;
            arr.push_back(std::move(row));
        }
        print({{"schema", kConjectureCsvSchema}, {"rows", arr}});
    } else {
        std::cout << conjecture_csv(rows, a.timing);
    }
    if (!failures.empty()) {
        for (const auto& f : failures)
            std::cerr << "proven bound violated: " << f << "\n";
        write_witness(cfg, {{"range", a.range}, {"reasons", failures}});
        return kPropertyFailed;
    }
    return kOk;
}

int cmd_extend(const Config& cfg, const std::string& input, bool trace)
{
    const auto g = game_instance_from_json(parse_json(read_file(input)));
    if (auto why = extension_precondition_failure(g)) {
        std::cerr << "preconditions not met: " << *why << "; consulting the oracle\n";
        std::uint64_t completions = 1;
        for (std::size_t i = 0; i < g.blanks.size() && completions <= (1ULL << 26); ++i)
            completions *= static_cast<std::uint64_t>(g.k);
        if (completions > (1ULL << 26))
            throw BudgetExceeded("oracle check needs more than 2^26 completions");
        const auto c = precoloring_extends(g);
        if (json_out(cfg) || trace)
            print({{"precondition_failure", *why},
                   {"extendible", c.has_value()},
                   {"coloring", c ? Json(to_string(*c)) : Json(nullptr)}});
        else
            std::cout << (c ? to_string(*c) : std::string("not extendible")) << "\n";
        return kOk;
    }
    std::vector<std::string> violations;
    std::optional<ExtendOutcome> out;
    try {
        out = extend_distinguishing(g);
        violations = trace_violations(out->trace);
    } catch (const ConsistencyError& e) {
        violations.push_back(e.what());
    }
    if (out) {
        if (json_out(cfg) || trace)
            print(to_json(out->trace));
        else
            std::cout << to_string(out->result) << "\n";
    }
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << "property failed: " << v << "\n";
        write_witness(cfg, instance_witness(g.pre, violations));
        return kPropertyFailed;
    }
    return kOk;
}

int cmd_sharpness(const Config& cfg, int n)
{
    const auto s = sharpness_instance(n);
    if (json_out(cfg)) {
        print(to_json(s));
        return kOk;
    }
    std::cout << "construction " << s.construction << "\nblanks";
    for (int w : s.blanks)
        std::cout << " " << w;
    std::cout << "\ncolors " << to_string(s.pre) << "\nbound " << s.claimed_bound << "\n";
    return kOk;
}

int cmd_bound(const Config& cfg, int n)
{
    const auto b = corollary_upper_bound(n);
    if (json_out(cfg))
        print(to_json(b));
    else
        std::cout << b.value << "\n";
    return kOk;
}

int cmd_fact_check(const Config& cfg, int n)
{
    const auto r = fact_check(n, cfg.jobs);
    if (json_out(cfg)) {
        Json routes;
        for (std::size_t j = 0; j < r.routes.size(); ++j)
            routes[to_string(static_cast<Route>(j))] = r.routes[j];
        print({{"n", n},
               {"blank_sets", r.blank_sets},
               {"satisfying_sets", r.satisfying_sets},
               {"instances", r.instances},
               {"routes", routes},
               {"pairs", r.pairs},
               {"fact31_failures", r.fact31_failures},
               {"max_forbidden", r.max_forbidden},
               {"violating_instances", r.violating_instances}});
    } else {
        std::cout << "n " << n << "\nblank sets " << r.blank_sets << " (" << r.satisfying_sets
                  << " satisfy divisibility)\ninstances " << r.instances << "\n";
        for (std::size_t j = 0; j < r.routes.size(); ++j)
            if (r.routes[j])
                std::cout << "route " << to_string(static_cast<Route>(j)) << " " << r.routes[j] << "\n";
        std::cout << "reflection pairs " << r.pairs << "\nfact failures " << r.fact31_failures
                  << "\nmax forbidden " << r.max_forbidden << "\nviolating instances " << r.violating_instances
                  << "\n";
    }
    if (r.violating_instances) {
        for (const auto& v : r.first_violation_reasons)
            std::cerr << "property failed: " << v << "\n";
        write_witness(cfg, instance_witness(*r.first_violation, r.first_violation_reasons));
        return kPropertyFailed;
    }
    return kOk;
}

struct SuiteArgs
{
    std::string name;
    std::vector<int> ns;
    int count = 0;
    int max_n = 12;
    std::vector<int> sizes{3, 4};
    bool any_centre = false;
    std::string input;
};

int suite_w0(const Config& cfg, const SuiteArgs& a)
{
    bool ok = true;
    for (int n : a.ns.empty() ? std::vector<int>{7, 11, 13} : a.ns) {
        const auto r = w0_suite(n);
        std::cout << "n " << n << ": subsets " << r.subsets << ", satisfying " << r.satisfying << ", w0 found "
                  << r.found << "\n";
        if (r.found != r.satisfying) {
            ok = false;
            write_witness(cfg, {{"n", n}, {"blanks", *r.first_failure}, {"reasons", {"no valid w0"}}});
        }
    }
    return ok ? kOk : kPropertyFailed;
}

int suite_forbidden(const Config& cfg, const SuiteArgs& a)
{
    bool ok = true;
    for (int n : a.ns.empty() ? std::vector<int>{7, 11} : a.ns) {
        const auto r = forbidden_suite(n, cfg.jobs);
        std::cout << "n " << n << ": instances " << r.instances << ", max forbidden " << r.max_forbidden
                  << ", over two " << r.overflow << ", discrepancies " << r.discrepancies << "\n";
        if (r.first_bad) {
            ok = false;
            write_witness(cfg, instance_witness(*r.first_bad, {"forbidden extension count or membership wrong"}));
        }
    }
    return ok ? kOk : kPropertyFailed;
}

int suite_pigeonhole(const Config& cfg, const SuiteArgs& a)
{
    const auto r = pigeonhole_suite(cfg.seed, a.count ? a.count : 1000);
    std::cout << "sets " << r.sets << "\nsubset found " << r.found << "\npassing " << r.passing
              << "\nfifteen-point set has none " << (r.fifteen_none ? "yes" : "no") << "\n";
    if (r.first_failure)
        write_witness(cfg, to_json(*r.first_failure));
    return r.passing == r.sets && r.fifteen_none ? kOk : kPropertyFailed;
}

int suite_line(const Config& cfg, const SuiteArgs& a)
{
    const auto r = line_suite(cfg.seed, a.count ? a.count : 10000);
    std::cout << "sets " << r.sets << "\nw0 is min " << r.w0_is_min << "\nw0 valid " << r.w0_valid
              << "\nrescale ok " << r.rescale_ok << " (" << r.rescaled << " needed alpha != 1)\n";
    if (r.first_failure)
        write_witness(cfg, to_json(*r.first_failure));
    const bool ok = r.w0_is_min == r.sets && r.w0_valid == r.sets && r.rescale_ok == r.sets;
    return ok ? kOk : kPropertyFailed;
}

int suite_wprime(const Config& cfg, const SuiteArgs& a)
{
    const auto r = wprime_search(a.max_n, cfg.jobs, a.sizes, a.any_centre);
    std::cout << "runs " << r.runs << "\nsigma path " << r.sigma_path << "\nW' case 1 " << r.wprime_cases[1]
              << "\nW' case 2 " << r.wprime_cases[2] << "\nW' case 3 " << r.wprime_cases[3] << "\nW' undefined "
              << r.wprime_undefined << "\nc2 forbidden " << r.c2_forbidden << "\nfallback fired " << r.fallback_fired
              << "\nno extension " << r.no_extension << "\nreflection pairs " << r.pairs << "\nfact failures "
              << r.fact31_failures << "\n";
    if (r.first_case1)
        std::cout << "first case-1 instance " << to_string(*r.first_case1) << " w0 " << *r.first_case1_w0 << "\n";
    return r.fact31_failures ? kPropertyFailed : kOk;
}

int suite_fig1c(const Config& cfg, const SuiteArgs& a)
{
    const int n = a.ns.empty() ? 21 : a.ns.front();
    const auto c = three_blank_census(n, cfg.jobs);
    std::cout << "n " << n << "\nthree-blank sets up to symmetry " << c.blank_sets << "\nwith a non-extendible precoloring "
              << c.failing_sets << "\nnon-extendible precolorings " << c.failing_precolorings
              << "\nof which use both colors " << c.failing_two_colored << "\n";
    if (c.two_colored_witness)
        std::cout << "first two-color instance " << to_string(*c.two_colored_witness) << "\n";
    return kOk;
}

int suite_blankset(const Config& cfg, const SuiteArgs& a)
{
    if (a.input.empty())
        throw InputError("lemma-suite blankset needs --input");
    const auto w = blank_set_from_json(parse_json(read_file(a.input)));
    const auto div = divisibility_condition(w);
    Json j = to_json(w);
    j["divisibility"] = div.holds;
    if (div.violation)
        j["violation"] = {{"w", div.violation->w.value().str()},
                          {"w_prime", div.violation->w_prime.value().str()},
                          {"difference", std::to_string(div.violation->i) + "/" + std::to_string(div.violation->k)}};
    try {
        j["w0"] = find_w0(w).value().str();
    } catch (const std::exception& e) {
        j["w0"] = nullptr;
        j["w0_error"] = e.what();
    }
    if (w.mode() == Mode::Circle) {
        const auto sub = pigeonhole_subset(w);
        j["pigeonhole"] = sub ? to_json(*sub) : Json(nullptr);
    } else {
        const auto res = rescale_line_blanks(w);
        j["rescale_alpha"] = res.alpha.str();
        j["rescaled"] = to_json(res.scaled);
    }
    if (json_out(cfg)) {
        print(j);
    } else {
        for (const auto& [key, value] : j.items())
            std::cout << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return kOk;
}

int cmd_lemma_suite(const Config& cfg, const SuiteArgs& a)
{
    if (a.name == "w0")
        return suite_w0(cfg, a);
    if (a.name == "forbidden")
        return suite_forbidden(cfg, a);
    if (a.name == "pigeonhole")
        return suite_pigeonhole(cfg, a);
    if (a.name == "line")
        return suite_line(cfg, a);
    if (a.name == "wprime-search")
        return suite_wprime(cfg, a);
    if (a.name == "fig1c")
        return suite_fig1c(cfg, a);
    if (a.name == "blankset")
        return suite_blankset(cfg, a);
    throw InputError("unknown lemma suite '" + a.name + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distinguishing extension numbers of cycles: oracle, constructive extender, bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs,-j", cfg.jobs, "Worker threads (default: DISTEXT_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");
    app.add_option("--witness", cfg.witness, "Where to write a failure witness");

    int n = 0;
    auto* dnum = app.add_subcommand("dnum", "Distinguishing number of C_n");
    dnum->add_option("n", n)->required();

    ExtArgs ext_args;
    auto* ext = app.add_subcommand("ext", "Extension number of C_n by exhaustive search");
    ext->add_option("n", ext_args.n)->required();
    ext->add_option("--k", ext_args.k, "Number of colors");
    ext->add_flag("--force", ext_args.force, "Run beyond the desk-scale budget");
    ext->add_flag("--no-reduce", ext_args.no_reduce, "Enumerate every blank set, not one per symmetry class");
    ext->add_option("--method", ext_args.method)->check(CLI::IsMember({"auto", "bitset", "enumerate"}));

    ConjectureArgs conj_args;
    auto* conj = app.add_subcommand("verify-conjecture", "Computed extension numbers against the conjecture");
    conj->add_option("range", conj_args.range, "LO..HI")->required();
    conj->add_flag("--timing", conj_args.timing, "Add a seconds column");
    conj->add_option("--timeout", conj_args.timeout, "Per-n time limit in seconds");
    conj->add_flag("--force", conj_args.force);

    std::string input;
    bool trace = false;
    auto* extend = app.add_subcommand("extend", "Constructive distinguishing extension of a JSON instance");
    extend->add_option("--input", input)->required();
    extend->add_flag("--trace", trace, "Print the full certificate trace as JSON");

    auto* sharp = app.add_subcommand("sharpness", "Non-extendible lower-bound instance for C_n");
    sharp->add_option("n", n)->required();
    auto* bound = app.add_subcommand("bound", "Indicator upper bound for C_n");
    bound->add_option("n", n)->required();
    auto* fact = app.add_subcommand("fact-check", "Run the extender on every valid four-blank instance of C_n");
    fact->add_option("n", n)->required();

    SuiteArgs suite;
    auto* lemma = app.add_subcommand("lemma-suite", "Lemma-level verification runs");
    lemma->add_option("name", suite.name)
        ->required()
        ->check(CLI::IsMember({"w0", "forbidden", "pigeonhole", "line", "wprime-search", "fig1c", "blankset"}));
    lemma->add_option("--n", suite.ns, "Cycle sizes")->delimiter(',');
    lemma->add_option("--count", suite.count, "Random cases");
    lemma->add_option("--max-n", suite.max_n, "Largest cycle for wprime-search");
    lemma->add_option("--sizes", suite.sizes, "Blank-set sizes for wprime-search")->delimiter(',');
    lemma->add_flag("--any-centre", suite.any_centre, "wprime-search: also try centres that fail the reflection test");
    lemma->add_option("--input", suite.input, "Blank-set JSON for blankset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*dnum)
            return cmd_dnum(cfg, n);
        if (*ext)
            return cmd_ext(cfg, ext_args);
        if (*conj)
            return cmd_verify_conjecture(cfg, conj_args);
        if (*extend)
            return cmd_extend(cfg, input, trace);
        if (*sharp)
            return cmd_sharpness(cfg, n);
        if (*bound)
            return cmd_bound(cfg, n);
        if (*fact)
            return cmd_fact_check(cfg, n);
        if (*lemma)
            return cmd_lemma_suite(cfg, suite);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kOverBudget;
    } catch (const Timeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kOverBudget;
    } catch (const InputError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const UndefinedQuantity& e) {
        std::cerr << "undefined: " << e.what() << "\n";
        return kBadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const OverflowError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const NoW0Error& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const ConsistencyError& e) {
        std::cerr << "property failed: " << e.what() << "\n";
        write_witness(cfg, {{"reasons", {e.what()}}});
        return kPropertyFailed;
    }
    return kOk;
}
