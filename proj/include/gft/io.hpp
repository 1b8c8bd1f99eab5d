#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gft/class_kernel.hpp"
#include "gft/errors.hpp"
#include "gft/neighborhood.hpp"
#include "gft/partial_sums.hpp"
#include "gft/series.hpp"
#include "gft/verifier.hpp"

namespace gft {

// ---------------------------------------------------------------------------
// Series JSON input.
//
// Schema: {"form": "negative"|"general", "order": N,
//          "coefficients": [{"n": 2, "re": 0.5, "im": 0.0}, ...]}
// Unlisted n means 0. Parsing is strict: unknown keys, indices outside
// [2, N], duplicates and non-finite values are rejected.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys,
                         const char* where) {
    for (const char* key : keys)
        if (!j.contains(key))
            throw ParseError(std::string(where) + ": missing key '" + key + "'");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || item.key() == key;
        if (!known)
            throw ParseError(std::string(where) + ": unknown key '" + item.key() + "'");
    }
}

inline double finite_number(const nlohmann::json& j, const char* where) {
    if (!j.is_number()) throw ParseError(std::string(where) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(where) + " must be finite");
    return v;
}

} // namespace detail

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("series: expected a JSON object");
    detail::require_keys(j, {"form", "order", "coefficients"}, "series");

    const auto& form_j = j.at("form");
    if (!form_j.is_string()) throw ParseError("series: 'form' must be a string");
    SignForm form;
    if (form_j == "negative")
        form = SignForm::NegativeCoefficients;
    else if (form_j == "general")
        form = SignForm::General;
    else
        throw ParseError("series: 'form' must be \"negative\" or \"general\"");

    const auto& order_j = j.at("order");
    if (!order_j.is_number_integer()) throw ParseError("series: 'order' must be an integer");
    const int order = order_j.get<int>();
    if (order < 1) throw ParseError("series: 'order' must be >= 1");

    const auto& coeffs_j = j.at("coefficients");
    if (!coeffs_j.is_array()) throw ParseError("series: 'coefficients' must be an array");

    std::vector<Complex> coeffs(static_cast<std::size_t>(order - 1));
    std::set<int> seen;
    for (const auto& entry : coeffs_j) {
        if (!entry.is_object()) throw ParseError("series: coefficient entries must be objects");
        detail::require_keys(entry, {"n", "re", "im"}, "coefficient");
        if (!entry.at("n").is_number_integer())
            throw ParseError("coefficient: 'n' must be an integer");
        const int n = entry.at("n").get<int>();
        if (n < 2) throw ParseError("coefficient: 'n' must be >= 2");
        if (n > order) throw ParseError("coefficient: 'n' exceeds the series order");
        if (!seen.insert(n).second) throw ParseError("coefficient: duplicate index n");
        const double re = detail::finite_number(entry.at("re"), "coefficient 're'");
        const double im = detail::finite_number(entry.at("im"), "coefficient 'im'");
        coeffs[static_cast<std::size_t>(n - 2)] = Complex(re, im);
    }
    try {
        return TruncatedSeries(form, order, std::move(coeffs));
    } catch (const FormError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline TruncatedSeries parse_series(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
    return series_from_json(j);
}

inline TruncatedSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open series file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str());
}

// ---------------------------------------------------------------------------
// Report JSON output. Fields are emitted in a fixed order and doubles with
// 17 significant digits, so identical inputs give byte-identical output.
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

/// Minimal object/array builder with insertion-ordered fields.
class JsonWriter {
public:
    JsonWriter& field(const char* key, double v) { return raw(key, format_double(v)); }
    JsonWriter& field(const char* key, int v) { return raw(key, std::to_string(v)); }
    JsonWriter& field(const char* key, std::uint64_t v) { return raw(key, std::to_string(v)); }
    JsonWriter& field(const char* key, bool v) { return raw(key, v ? "true" : "false"); }
    JsonWriter& field(const char* key, const std::string& v) {
        return raw(key, "\"" + v + "\""); // labels are plain ASCII, no escaping needed
    }
    JsonWriter& raw(const char* key, const std::string& v) {
        out_ += sep_;
        out_ += '"';
        out_ += key;
        out_ += "\":";
        out_ += v;
        sep_ = ",";
        return *this;
    }
    std::string str() const { return "{" + out_ + "}"; }

private:
    std::string out_;
    const char* sep_ = "";
};

inline std::string argmin_json(const PolarPoint& p) {
    return JsonWriter().field("r", p.r).field("theta", p.theta).str();
}

inline std::string grid_json(const GridSpec& g) {
    return JsonWriter()
        .field("r_count", static_cast<int>(g.r_values.size()))
        .field("theta_count", g.theta_count)
        .field("ray_count", static_cast<int>(g.include_rays.size()))
        .field("r_max", g.r_values.back())
        .str();
}

} // namespace detail

inline std::string series_to_json(const TruncatedSeries& f) {
    std::string entries;
    const char* sep = "";
    for (int n = 2; n <= f.order(); ++n) {
        const Complex c = f.coeff(n);
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        entries += sep;
        entries += detail::JsonWriter()
                       .field("n", n)
                       .field("re", c.real())
                       .field("im", c.imag())
                       .str();
        sep = ",";
    }
    return detail::JsonWriter()
        .field("form", std::string(f.form() == SignForm::NegativeCoefficients ? "negative"
                                                                              : "general"))
        .field("order", f.order())
        .raw("coefficients", "[" + entries + "]")
        .str();
}

inline std::string verdict_to_json(const MembershipVerdict& v) {
    return detail::JsonWriter()
        .field("member", v.member)
        .field("sum", v.sum)
        .field("budget", v.budget)
        .field("slack", v.slack)
        .str();
}

inline std::string condition_report_to_json(const VerificationReport& r) {
    return detail::JsonWriter()
        .field("quantity", r.quantity)
        .raw("grid", detail::grid_json(r.grid))
        .field("minimum", r.minimum)
        .raw("argmin", detail::argmin_json(r.argmin))
        .field("bound", r.bound)
        .field("margin", r.minimum - r.bound)
        .field("pass", r.pass)
        .str();
}

inline std::string ratio_report_to_json(const VerificationReport& r) {
    return detail::JsonWriter()
        .field("ratio", r.quantity)
        .field("bound", r.bound)
        .field("grid_min", r.minimum)
        .field("margin", r.minimum - r.bound)
        .raw("argmin", detail::argmin_json(r.argmin))
        .field("pass", r.pass)
        .str();
}

inline std::string inclusion_report_to_json(const InclusionReport& r) {
    return detail::JsonWriter()
        .field("alpha", r.alpha)
        .field("trials", r.trials)
        .field("passes", r.passes)
        .field("min_grid_margin", r.min_grid_margin)
        .field("seed", r.seed)
        .str();
}

inline std::string distance_report_to_json(double alpha, double dist, bool inside) {
    return detail::JsonWriter()
        .field("alpha", alpha)
        .field("distance", dist)
        .field("in_neighborhood", inside)
        .str();
}

inline std::string partial_sums_to_json(const PartialSumBounds& b,
                                        const std::array<VerificationReport, 4>& reports) {
    const std::string bounds = detail::JsonWriter()
                                   .field("f_over_fm", b.bound_f_over_fm)
                                   .field("fm_over_f", b.bound_fm_over_f)
                                   .field("df_over_dfm", b.bound_df_over_dfm)
                                   .field("dfm_over_df", b.bound_dfm_over_df)
                                   .str();
    const std::string conditions = detail::JsonWriter()
                                       .field("ratio_ok", b.conditions.ratio_ok)
                                       .field("derivative_ok", b.conditions.derivative_ok)
                                       .str();
    std::string reps;
    const char* sep = "";
    for (const VerificationReport& r : reports) {
        reps += sep;
        reps += ratio_report_to_json(r);
        sep = ",";
    }
    return detail::JsonWriter()
        .field("m", b.m)
        .field("delta", b.delta)
        .raw("bounds", bounds)
        .raw("conditions", conditions)
        .raw("reports", "[" + reps + "]")
        .str();
}

inline std::string phi_table_to_json(const OperatorParams& p, int order) {
    std::string ns, phis;
    const char* sep = "";
    for (int n = 1; n <= order; ++n) {
        ns += sep;
        ns += std::to_string(n);
        phis += sep;
        phis += format_double(phi(p, n));
        sep = ",";
    }
    return detail::JsonWriter().raw("n", "[" + ns + "]").raw("phi", "[" + phis + "]").str();
}

// ---------------------------------------------------------------------------
// Grid CSV dump: one (r, theta, G) row per grid point for external plotting.
// ---------------------------------------------------------------------------

inline void write_condition_csv(std::ostream& os, const ClassParams& p, const TruncatedSeries& f,
                                const GridSpec& grid) {
    grid.validate();
    const ConditionEvaluator ev(p, f);
    const std::vector<double> thetas = grid.theta_values();
    os << "r,theta,G\n";
    for (double r : grid.r_values)
        for (double theta : thetas)
            os << format_double(r) << ',' << format_double(theta) << ','
               << format_double(ev.value(std::polar(r, theta))) << '\n';
}

} // namespace gft
