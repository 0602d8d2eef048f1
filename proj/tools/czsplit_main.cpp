// czsplit: factor polynomials over small finite fields and verify the
// splitting-count formulas and bounds against brute force.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "czsplit/cz.hpp"
#include "czsplit/format.hpp"
#include "czsplit/oracle.hpp"
#include "czsplit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace czsplit;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParseError = 2, kInternalError = 3 };

struct OutputOptions {
    std::string format = "json"; // json | csv | pretty
};

json trace_to_json(const AttemptTrace& trace) {
    json attempts = json::array();
    for (const auto& rec : trace.records) {
        for (const auto& at : rec.attempts) {
            json a;
            a["sigma"] = rec.sigma.to_string();
            a["test"] = at.test.to_string();
            a["status"] = at.status == SplitStatus::already_factor ? "already_factor"
                          : at.status == SplitStatus::split        ? "split"
                                                                   : "failure";
            if (at.observed_coset) a["coset"] = *at.observed_coset;
            attempts.push_back(std::move(a));
        }
    }
    json out;
    out["attempts"] = std::move(attempts);
    out["total"] = trace.total_attempts();
    out["coset_restricted"] = trace.coset_restricted;
    return out;
}

void emit(const json& result, const OutputOptions& out, double elapsed_ms) {
    if (out.format == "json") {
        json doc = result;
        doc["meta"] = {{"elapsed_ms", elapsed_ms}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (out.format == "csv") {
        if (result.contains("factors")) {
            std::cout << "poly,mult\n";
            for (const auto& f : result["factors"])
                std::cout << '"' << f["poly"].get<std::string>() << "\","
                          << (f.contains("mult") ? f["mult"].dump() : "1") << "\n";
        } else if (result.contains("records")) {
            std::cout << "kind,beta,a,b\n";
            for (const auto& r : result["records"])
                std::cout << r["kind"].get<std::string>() << ','
                          << (r.contains("beta") ? r["beta"].dump() : "") << ','
                          << r["value"]["a"] << ',' << r["value"]["b"] << "\n";
        } else {
            for (auto it = result.begin(); it != result.end(); ++it)
                std::cout << it.key() << ',' << it.value().dump() << "\n";
        }
        return;
    }
    // pretty
    std::cout << result.dump(2) << "\n";
}

json report_to_json(const ExperimentReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        json entry;
        entry["params"] = r.params;
        entry["brute"] = r.brute;
        if (!r.formula.empty()) entry["formula"] = r.formula;
        if (!r.bound.empty()) entry["bound"] = r.bound;
        entry["exhaustive"] = r.exhaustive;
        entry["samples"] = r.samples;
        entry["witness"] = r.witness;
        results.push_back(std::move(entry));
    }
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"observed", c.observed},
                          {"expected", c.expected},
                          {"pass", c.pass},
                          {"info_only", c.info_only}});
    }
    json out;
    out["schema"] = 1;
    out["experiment"] = report.experiment;
    out["field"] = report.field;
    out["results"] = std::move(results);
    out["checks"] = std::move(checks);
    out["passed"] = report.passed();
    return out;
}

void print_report_pretty(const ExperimentReport& report) {
    std::cout << "experiment " << report.experiment << " [" << report.field << "]\n";
    for (const auto& c : report.checks) {
        const char* tag = c.info_only ? "INFO" : (c.pass ? "PASS" : "FAIL");
        std::cout << "  " << tag << "  " << c.name << ": " << c.observed << " (expected "
                  << c.expected << ")\n";
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << ": " << report.experiment << "\n";
}

std::uint64_t budget_from_env(std::uint64_t cli_budget) {
    if (const char* env = std::getenv("CZSPLIT_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw Error("malformed CZSPLIT_BUDGET");
    }
    return cli_budget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cantor-Zassenhaus splitting over small finite fields: factorization, "
                 "character sums and brute-force verification of the attempt-count formulas"};
    app.require_subcommand(1);

    std::string field_spec_str, poly_str, strategy_str = "improved", output_str;
    std::uint64_t seed = 0, trials = 10000, budget = 100'000'000;
    unsigned threads = 0;
    std::uint32_t t = 2, s = 1, q = 0;
    bool validate = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_spec_str, "field spec, e.g. gf(2,4)");
        cmd->add_option("--seed", seed, "64-bit seed; 0 = deterministic enumeration");
        cmd->add_option("--output", output_str, "json | csv | pretty");
        cmd->add_option("--threads", threads, "worker threads for sweeps (0 = auto)");
    };

    auto* cmd_factor = app.add_subcommand("factor", "factor a polynomial completely");
    add_common(cmd_factor);
    cmd_factor->add_option("--poly", poly_str, "polynomial (comma or pretty form)")->required();
    cmd_factor->add_option("--strategy", strategy_str, "classic | improved | coset | direct");
    cmd_factor->add_option("--q", q, "splitting modulus (default 3 for p=2, else 2)");

    auto* cmd_split = app.add_subcommand("split", "equal-degree splitting of a squarefree input");
    add_common(cmd_split);
    cmd_split->add_option("--poly", poly_str, "polynomial (comma or pretty form)")->required();
    cmd_split->add_option("--s", s, "common irreducible factor degree");
    cmd_split->add_option("--q", q, "splitting modulus");
    cmd_split->add_option("--strategy", strategy_str, "classic | improved | coset | direct");
    cmd_split->add_flag("--validate", validate, "verify the equal-degree precondition first");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification experiment");
    std::string experiment;
    cmd_verify->add_option("experiment", experiment,
                           "n-small | n-bounds | m | t0 | na | charsum | attempts")
        ->required();
    add_common(cmd_verify);
    cmd_verify->add_option("--t", t, "degree t for attempts");
    cmd_verify->add_option("--s", s, "factor degree s for na")->default_val(2);
    cmd_verify->add_option("--q", q, "splitting modulus");
    cmd_verify->add_option("--trials", trials, "simulation trials");
    cmd_verify->add_option("--budget", budget, "step budget for sweeps");
    cmd_verify->add_option("--strategy", strategy_str, "strategy for attempts");

    auto* cmd_charsum = app.add_subcommand("charsum", "exact character sums as JSON records");
    add_common(cmd_charsum);
    cmd_charsum->add_option("--q", q, "character order (default 3 for p=2, else 2)");
    std::int64_t beta_arg = -1;
    cmd_charsum->add_option("--beta", beta_arg, "single beta (default: all nonzero)");

    auto* cmd_simulate = app.add_subcommand("simulate", "expected-attempts simulation");
    add_common(cmd_simulate);
    cmd_simulate->add_option("--t", t, "degree of the fully split inputs");
    cmd_simulate->add_option("--q", q, "splitting modulus");
    cmd_simulate->add_option("--trials", trials, "number of trials");
    cmd_simulate->add_option("--strategy", strategy_str, "classic | improved | coset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        OutputOptions out;
        if (!output_str.empty()) out.format = output_str;

        if (cmd_factor->parsed() || cmd_split->parsed()) {
            if (field_spec_str.empty()) throw Error("--field is required");
            FieldPtr field = parse_field_spec(field_spec_str);
            Polynomial poly = parse_polynomial(field, poly_str);
            Strategy strategy = strategy_from_name(strategy_str);

            json result;
            result["schema"] = 1;
            result["field"] = field_spec(*field);
            result["input"] = poly.to_string();
            result["strategy"] = strategy_name(strategy);
            result["seed"] = seed;

            if (cmd_factor->parsed()) {
                Factorization fac = factor(poly, seed, strategy, q);
                json factors = json::array();
                for (const auto& [part, mult] : fac.factors)
                    factors.push_back({{"poly", part.to_string()},
                                       {"pretty", part.pretty()},
                                       {"mult", mult}});
                result["leading"] = fac.leading;
                result["factors"] = std::move(factors);
                result["trace"] = trace_to_json(fac.trace);
            } else {
                SplitProblem problem{poly, s, q, strategy, validate};
                EdfResult res = equal_degree_factor(problem, seed);
                json factors = json::array();
                for (const auto& part : res.factors)
                    factors.push_back({{"poly", part.to_string()}, {"pretty", part.pretty()}});
                result["s"] = s;
                result["factors"] = std::move(factors);
                result["trace"] = trace_to_json(res.trace);
            }
            emit(result, out, elapsed_ms());
            return kOk;
        }

        if (cmd_verify->parsed()) {
            if (field_spec_str.empty()) throw Error("--field is required");
            FieldPtr field = parse_field_spec(field_spec_str);
            VerifyOptions opt;
            opt.budget = budget_from_env(budget);
            opt.seed = seed;
            opt.trials = trials;
            opt.threads = threads;

            ExperimentReport report;
            if (experiment == "n-small")
                report = verify_n_small(field, opt);
            else if (experiment == "n-bounds")
                report = verify_n_bounds(field, opt);
            else if (experiment == "m")
                report = verify_m(field, opt);
            else if (experiment == "t0")
                report = verify_t0(field, opt);
            else if (experiment == "na")
                report = verify_na(field, s, opt);
            else if (experiment == "charsum")
                report = verify_charsum(field, opt);
            else if (experiment == "attempts")
                report = verify_attempts(field, t, q, strategy_from_name(strategy_str), opt);
            else
                throw Error("unknown experiment: " + experiment);

            if (output_str.empty() || out.format == "pretty") {
                print_report_pretty(report);
            } else if (out.format == "csv") {
                std::cout << "name,observed,expected,pass,info_only\n";
                for (const auto& c : report.checks)
                    std::cout << '"' << c.name << "\",\"" << c.observed << "\",\"" << c.expected
                              << "\"," << (c.pass ? 1 : 0) << ',' << (c.info_only ? 1 : 0)
                              << "\n";
            } else {
                emit(report_to_json(report), out, elapsed_ms());
            }
            return report.passed() ? kOk : kVerifyFailed;
        }

        if (cmd_charsum->parsed()) {
            if (field_spec_str.empty()) throw Error("--field is required");
            FieldPtr field = parse_field_spec(field_spec_str);
            std::uint32_t qq = q ? q : default_q(*field);
            CosetStructure cs = CosetStructure::make(field, qq);

            json records = json::array();
            auto record = [&](const std::string& kind, std::optional<std::uint64_t> beta,
                              const Eisenstein& value) {
                json r;
                r["field"] = field_spec(*field);
                r["q"] = qq;
                r["kind"] = kind;
                if (beta) r["beta"] = *beta;
                r["value"] = {{"a", value.a}, {"b", value.b}};
                records.push_back(std::move(r));
            };

            record("total_sum", std::nullopt, total_sum(cs));
            if (beta_arg >= 0) {
                record("pair_sum", (std::uint64_t)beta_arg,
                       pair_sum(cs, field->check_range((std::uint64_t)beta_arg)));
            } else {
                for (std::uint64_t b = 1; b < field->size(); ++b)
                    record("pair_sum", b, pair_sum(cs, (enc_t)b));
            }
            if (field->characteristic() == 2 && field->degree() % 2 == 0 && qq == 3)
                record("gauss_sum", std::nullopt, gauss_sum_cubic(cs));

            json result;
            result["schema"] = 1;
            result["field"] = field_spec(*field);
            result["q"] = qq;
            result["records"] = std::move(records);
            emit(result, out, elapsed_ms());
            return kOk;
        }

        if (cmd_simulate->parsed()) {
            if (field_spec_str.empty()) throw Error("--field is required");
            FieldPtr field = parse_field_spec(field_spec_str);
            AttemptStats stats = expected_attempts_sim(field, t, strategy_from_name(strategy_str),
                                                       q, trials, seed);
            json result;
            result["schema"] = 1;
            result["field"] = field_spec(*field);
            result["t"] = t;
            result["q"] = q ? q : default_q(*field);
            result["strategy"] = strategy_str;
            result["seed"] = seed;
            result["trials"] = stats.trials;
            result["mean_attempts"] = stats.mean;
            result["max_attempts"] = stats.max;
            result["predicted_mean"] = stats.predicted;
            emit(result, out, elapsed_ms());
            return kOk;
        }
    } catch (const InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInternalError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
