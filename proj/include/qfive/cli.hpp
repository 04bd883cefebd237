#pragma once

// The qfive command line. run() takes argv-style strings and two streams so the
// whole front end can be driven from tests.
//
// Exit codes: 0 every requested check passed, 1 some verification failed,
// 2 usage error, unknown id, or an identity whose builder threw.

#include "arith.hpp"
#include "identities.hpp"
#include "numeric.hpp"
#include "render.hpp"
#include "report.hpp"
#include "theta.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace qfive::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct Options {
    std::string format = "text";
    // expand
    std::string object = "theta";
    std::string characteristic = "1,1/5";
    int deriv = 0;
    std::string mult = "1";
    std::string spec;
    bool product = false;
    // verify
    std::vector<std::string> ids;
    bool all = false;
    std::string variant = "as-stated";
    bool exact_only = false;
    bool serial = false;
    // shared
    int order = 20;
    std::string kernel;
    int upto = 0;
    int samples = 0;
    std::uint64_t seed = NumericConfig{}.rng_seed;
    double tol = 0;
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_list(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        Json j;
        Json ids = Json::array();
        for (const auto& e : catalog()) {
            Json x;
            x["id"] = e.id;
            x["title"] = e.title;
            x["location"] = e.location;
            x["min_order"] = to_fraction_string(e.min_order);
            Json vs = Json::array();
            for (const auto& v : e.variants) vs.push_back(to_string(v.kind));
            x["variants"] = std::move(vs);
            ids.push_back(std::move(x));
        }
        j["identities"] = std::move(ids);
        Json num = Json::array();
        for (const auto& e : numeric_suite()) {
            Json x;
            x["id"] = e.id;
            x["title"] = e.title;
            x["tolerance"] = format_residual(e.tolerance);
            x["samples"] = e.default_samples;
            num.push_back(std::move(x));
        }
        j["numeric"] = std::move(num);
        emit(out, j);
        return kPass;
    }
    for (const auto& e : catalog()) {
        out << e.id;
        if (e.has(Variant::Corrected)) out << " (as-stated, corrected)";
        out << "  " << e.title << "  [" << e.location << "]\n";
    }
    for (const auto& e : numeric_suite()) out << e.id << "  " << e.title << "\n";
    return kPass;
}

inline int cmd_expand(const Options& o, std::ostream& out) {
    const BigRat order(o.order);
    FracSeries f;
    if (o.object == "theta") {
        ThetaChar ch = parse_char(o.characteristic);
        if (o.product) {
            if (o.deriv != 0) throw CLI::ValidationError("--product", "product form has no derivatives");
            f = theta_const_product(ch, order);
        } else {
            f = theta_const(ch, o.deriv, order);
        }
    } else if (o.object == "eta") {
        f = eta_q(parse_rational(o.mult), order);
    } else {
        if (o.spec.empty()) throw CLI::ValidationError("--spec", "eta-quotient needs --spec like 5:5,1:-1");
        f = eta_quotient(parse_eta_spec(o.spec), order);
    }
    if (o.format == "json") emit(out, series_to_json(f));
    else out << to_string(f) << '\n';
    return kPass;
}

inline std::vector<NumericCheck> run_numeric_suite(const std::vector<std::string>& ids, const Options& o) {
    NumericConfig cfg;
    cfg.rng_seed = o.seed;
    std::vector<NumericCheck> out;
    if (ids.empty())
        for (const auto& e : numeric_suite()) out.push_back(run_numeric(e.id, o.samples, cfg, o.tol));
    else
        for (const auto& id : ids) out.push_back(run_numeric(id, o.samples, cfg, o.tol));
    return out;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.all == !o.ids.empty()) {
        err << "verify: give either --id (repeatable) or --all\n";
        return kUsage;
    }
    if (o.order <= 0) {
        err << "verify: --order must be positive\n";
        return kUsage;
    }
    const Variant variant = *parse_variant(o.variant);
    for (const auto& id : o.ids) {
        try {
            lookup(id);
        } catch (const UnknownIdentity&) {
            err << "verify: unknown identity '" << id << "'\n";
            return kUsage;
        }
    }
    std::vector<IdentityReport> reports;
    if (o.all) reports = verify_all(BigRat(o.order), !o.serial, variant);
    else
        for (const auto& id : o.ids) reports.push_back(verify(id, BigRat(o.order), variant));
    std::vector<NumericCheck> numeric;
    if (o.all && !o.exact_only) numeric = run_numeric_suite({}, o);

    bool passed = true, builder_error = false;
    for (const auto& r : reports) {
        passed = passed && r.passed;
        builder_error = builder_error || r.reason.rfind("builder error", 0) == 0;
    }
    for (const auto& c : numeric) passed = passed && c.passed;

    if (o.format == "json") {
        Json j;
        j["order"] = to_fraction_string(BigRat(o.order));
        j["variant"] = to_string(variant);
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(report_to_json(r));
        j["reports"] = std::move(rs);
        if (!numeric.empty()) {
            Json ns = Json::array();
            for (const auto& c : numeric) ns.push_back(numeric_to_json(c));
            j["numeric"] = std::move(ns);
        }
        j["passed"] = passed;
        emit(out, j);
    } else {
        std::size_t fails = 0;
        for (const auto& r : reports) {
            out << report_line(r) << '\n';
            fails += r.passed ? 0 : 1;
        }
        for (const auto& c : numeric) {
            out << numeric_line(c) << '\n';
            fails += c.passed ? 0 : 1;
        }
        out << (reports.size() + numeric.size() - fails) << " passed, " << fails << " failed\n";
    }
    if (builder_error) return kUsage;
    return passed ? kPass : kFail;
}

inline int cmd_numeric(const Options& o, std::ostream& out, std::ostream& err) {
    for (const auto& id : o.ids) {
        bool known = false;
        for (const auto& e : numeric_suite()) known = known || e.id == id;
        if (!known) {
            err << "numeric-check: unknown check '" << id << "'\n";
            return kUsage;
        }
    }
    auto checks = run_numeric_suite(o.ids, o);
    bool passed = true;
    for (const auto& c : checks) passed = passed && c.passed;
    if (o.format == "json") {
        Json j;
        j["seed"] = o.seed;
        Json ns = Json::array();
        for (const auto& c : checks) ns.push_back(numeric_to_json(c));
        j["numeric"] = std::move(ns);
        j["passed"] = passed;
        emit(out, j);
    } else {
        for (const auto& c : checks) out << numeric_line(c) << '\n';
    }
    return passed ? kPass : kFail;
}

inline int cmd_coeffs(const Options& o, std::ostream& out) {
    DivisorKernel k = *parse_kernel(o.kernel);
    if (o.format == "json") {
        Json j;
        j["kernel"] = o.kernel;
        Json vs = Json::array();
        for (int n = 1; n <= o.upto; ++n) vs.push_back(to_string(divisor_sum(k, n)));
        j["values"] = std::move(vs);
        emit(out, j);
    } else {
        for (int n = 1; n <= o.upto; ++n) out << n << ' ' << to_string(divisor_sum(k, n)) << '\n';
    }
    return kPass;
}

inline int cmd_partitions(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        Json vs = Json::array();
        for (int n = 0; n <= o.upto; ++n) vs.push_back(partition_p(n).get_str());
        Json j;
        j["values"] = std::move(vs);
        emit(out, j);
    } else {
        for (int n = 0; n <= o.upto; ++n) out << n << ' ' << partition_p(n).get_str() << '\n';
    }
    return kPass;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Exact q-series identities for level-five theta constants", "qfive"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    app.add_subcommand("list", "List catalog identities and numeric checks");

    auto* expand = app.add_subcommand("expand", "Print the q-expansion of a theta constant, eta, or eta quotient");
    expand->add_option("--object", o.object, "theta | eta | eta-quotient")
        ->check(CLI::IsMember({"theta", "eta", "eta-quotient"}));
    expand->add_option("--char", o.characteristic, "Characteristic 'eps,eps_prime'");
    expand->add_option("--deriv", o.deriv, "z-derivative order of the theta constant")->check(CLI::Range(0, 16));
    expand->add_option("--mult", o.mult, "Multiplier m of eta(m tau)");
    expand->add_option("--spec", o.spec, "Eta quotient as mult:exp items, e.g. 5:5,1:-1");
    expand->add_flag("--product", o.product, "Use the triple product instead of the theta sum");
    expand->add_option("--order", o.order, "Integer q-orders")->check(CLI::Range(1, 100000));

    auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities exactly");
    verify_cmd->add_option("--id", o.ids, "Identity id (repeatable)");
    verify_cmd->add_flag("--all", o.all, "Every catalog identity, then the numeric suite");
    verify_cmd->add_option("--order", o.order, "Integer q-orders");
    verify_cmd->add_option("--variant", o.variant, "as-stated | corrected")
        ->check(CLI::IsMember({"as-stated", "corrected"}));
    verify_cmd->add_flag("--exact-only", o.exact_only, "Skip the numeric suite with --all");
    verify_cmd->add_flag("--serial", o.serial, "Single-threaded --all");
    verify_cmd->add_option("--seed", o.seed, "Numeric seed");

    auto* coeffs = app.add_subcommand("coeffs", "Tabulate a divisor-sum kernel");
    coeffs->add_option("--kernel", o.kernel, "A | B | C | D25 | E11 | S")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D25", "E11", "S"}));
    coeffs->add_option("--upto", o.upto, "Largest n")->required()->check(CLI::Range(1, 1000000));

    auto* parts = app.add_subcommand("partitions", "Tabulate p(n)");
    parts->add_option("--upto", o.upto, "Largest n")->required()->check(CLI::Range(0, 100000));

    auto* numeric = app.add_subcommand("numeric-check", "Run the double-precision checks");
    numeric->add_option("--id", o.ids, "Check id N1..N7 (repeatable)");
    numeric->add_option("--samples", o.samples, "Samples per check")->check(CLI::Range(1, 100000));
    numeric->add_option("--seed", o.seed, "Random seed");
    numeric->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"qfive"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (app.got_subcommand("list")) return detail::cmd_list(o, out);
        if (app.got_subcommand("expand")) return detail::cmd_expand(o, out);
        if (app.got_subcommand("verify")) return detail::cmd_verify(o, out, err);
        if (app.got_subcommand("coeffs")) return detail::cmd_coeffs(o, out);
        if (app.got_subcommand("partitions")) return detail::cmd_partitions(o, out);
        return detail::cmd_numeric(o, out, err);
    } catch (const CLI::Error& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace qfive::cli
