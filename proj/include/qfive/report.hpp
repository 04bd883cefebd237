#pragma once

// JSON forms of series and reports. Exponents are "num/den" strings, CycloQ5
// values 4-arrays of them, phases "e(a)". No floating point in exact reports,
// and no timings, so identical runs serialize byte for byte.

#include "identities.hpp"
#include "numeric.hpp"
#include "render.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace qfive {

using Json = nlohmann::ordered_json;

inline Json cyclo_to_json(const CycloQ5& c) {
    Json out = Json::array();
    for (const auto& x : c.coeffs()) out.push_back(to_fraction_string(x));
    return out;
}

inline CycloQ5 cyclo_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cyclotomic value must be a 4-array");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>())};
}

inline Json series_to_json(const FracSeries& f) {
    Json out;
    out["cpow"] = f.cpow();
    out["phase"] = to_string(f.phase());
    out["qpow"] = to_fraction_string(f.qpow());
    out["order"] = f.order() ? Json(to_fraction_string(*f.order())) : Json(nullptr);
    Json terms = Json::array();
    for (const auto& [k, c] : f.tail()) {
        Json t;
        t["exponent"] = to_fraction_string(f.exponent_of(k));
        t["coeff"] = cyclo_to_json(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    out["text"] = to_string(f);
    return out;
}

inline Json report_to_json(const IdentityReport& r) {
    Json out;
    out["id"] = r.id;
    out["location"] = r.location;
    out["variant"] = to_string(r.variant);
    out["passed"] = r.passed;
    out["order"] = to_fraction_string(r.order_checked);
    if (r.first_mismatch_exponent) {
        Json m;
        m["exponent"] = to_fraction_string(*r.first_mismatch_exponent);
        m["lhs"] = cyclo_to_json(r.lhs_coeff.value_or(CycloQ5()));
        m["rhs"] = cyclo_to_json(r.rhs_coeff.value_or(CycloQ5()));
        out["first_mismatch"] = std::move(m);
    } else {
        out["first_mismatch"] = nullptr;
    }
    out["reason"] = r.reason;
    return out;
}

/// Inverse of report_to_json on every field it writes; elapsed comes back zero.
inline IdentityReport report_from_json(const Json& j) {
    IdentityReport r;
    r.id = j.at("id").get<std::string>();
    r.location = j.at("location").get<std::string>();
    auto v = parse_variant(j.at("variant").get<std::string>());
    if (!v) throw std::invalid_argument("unknown variant in report");
    r.variant = *v;
    r.passed = j.at("passed").get<bool>();
    r.order_checked = parse_rational(j.at("order").get<std::string>());
    const Json& m = j.at("first_mismatch");
    if (!m.is_null()) {
        r.first_mismatch_exponent = parse_rational(m.at("exponent").get<std::string>());
        r.lhs_coeff = cyclo_from_json(m.at("lhs"));
        r.rhs_coeff = cyclo_from_json(m.at("rhs"));
    }
    r.reason = j.at("reason").get<std::string>();
    return r;
}

inline std::string format_residual(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

/// Residuals go out as fixed-format strings so reruns with one seed diff clean.
inline Json numeric_to_json(const NumericCheck& c) {
    Json out;
    out["id"] = c.id;
    out["title"] = c.title;
    out["passed"] = c.passed;
    out["max_residual"] = format_residual(c.max_residual);
    out["tolerance"] = format_residual(c.tolerance);
    out["samples"] = c.samples;
    out["seed"] = c.seed;
    out["reason"] = c.reason;
    return out;
}

inline std::string report_line(const IdentityReport& r) {
    std::string out = (r.passed ? "PASS " : "FAIL ") + r.id + " [" + to_string(r.variant) + "] order " +
                      to_string(r.order_checked);
    if (r.first_mismatch_exponent)
        out += "  first mismatch at q^(" + to_string(*r.first_mismatch_exponent) + "): lhs " +
               to_string(r.lhs_coeff.value_or(CycloQ5())) + ", rhs " + to_string(r.rhs_coeff.value_or(CycloQ5()));
    if (!r.reason.empty() && !r.first_mismatch_exponent) out += "  " + r.reason;
    return out;
}

inline std::string numeric_line(const NumericCheck& c) {
    std::string out = (c.passed ? "PASS " : "FAIL ") + c.id + " " + c.title + "  max residual " +
                      format_residual(c.max_residual) + " (tol " + format_residual(c.tolerance) + ", " +
                      std::to_string(c.samples) + " samples, seed " + std::to_string(c.seed) + ")";
    if (!c.reason.empty() && !c.passed) out += "  " + c.reason;
    return out;
}

}  // namespace qfive
