#include "degenkit/degen_core.hpp"
#include "degenkit/families.hpp"
#include "degenkit/series.hpp"
#include "degenkit/stirling.hpp"
#include "degenkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using degenkit::LambdaPoly;
using degenkit::Rational;
using degenkit::StirlingKind;
using degenkit::StirlingTriangle;
using degenkit::TruncatedSeries;
using degenkit::XPoly;

constexpr int kExitUsage = 2;
constexpr int kExitIdentityFailure = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Rational> parse_lambda(const std::string& text) {
    if (text == "sym")
        return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--lambda expects 'sym' or an exact rational like 1/2");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw UsageError("cannot open output file: " + out_path);
    file << text;
}

std::string lambda_poly_text(const LambdaPoly& poly, const std::optional<Rational>& lambda) {
    return lambda ? poly.eval(*lambda).to_string() : poly.to_string();
}

XPoly substituted_lambda(const XPoly& poly, const Rational& lambda) {
    std::vector<LambdaPoly> coeffs;
    coeffs.reserve(static_cast<size_t>(poly.degree()) + 1);
    for (int k = 0; k <= poly.degree(); ++k)
        coeffs.emplace_back(poly.coeff(k).eval(lambda));
    return XPoly(std::move(coeffs));
}

int run_triangle(const std::string& kind_text, int n_max, const std::string& lambda_text,
                 const std::string& format, const std::string& out_path) {
    if (kind_text != "first" && kind_text != "second")
        throw UsageError("triangle kind must be 'first' or 'second'");
    if (n_max < 0)
        throw UsageError("n_max must be nonnegative");
    auto lambda = parse_lambda(lambda_text);
    StirlingTriangle triangle = kind_text == "second" ? degenkit::stirling_second_by_recurrence(n_max)
                                                      : degenkit::stirling_first_by_egf(n_max);
    if (format == "csv") {
        emit(triangle.to_csv(lambda), out_path);
    } else if (format == "json") {
        emit(triangle.to_json(lambda).dump(2) + "\n", out_path);
    } else {
        std::string text;
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                if (k > 0)
                    text += ", ";
                text += lambda_poly_text(triangle.at(n, k), lambda);
            }
            text += "\n";
        }
        emit(text, out_path);
    }
    return 0;
}

int run_poly(const std::string& family, int n, const std::string& lambda_text,
             const std::string& at_x_text, const std::string& format, const std::string& out_path) {
    if (family != "bell" && family != "fubini")
        throw UsageError("poly family must be 'bell' or 'fubini'");
    if (n < 0)
        throw UsageError("n must be nonnegative");
    auto lambda = parse_lambda(lambda_text);
    auto triangle = degenkit::stirling_second_by_recurrence(n);
    XPoly poly = family == "bell" ? degenkit::bell_polynomial(triangle, n)
                                  : degenkit::fubini_polynomial(triangle, n);

    std::optional<Rational> at_x;
    if (!at_x_text.empty()) {
        try {
            at_x = Rational::parse(at_x_text);
        } catch (const std::exception&) {
            throw UsageError("--at-x expects an exact rational like 1 or -3/2");
        }
    }

    if (at_x) {
        LambdaPoly value = poly.eval_x(*at_x);
        std::string rendered = lambda_poly_text(value, lambda);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["at_x"] = at_x->to_string();
            j["value"] = rendered;
            emit(j.dump(2) + "\n", out_path);
        } else if (format == "csv") {
            emit("n,at_x,value\n" + std::to_string(n) + "," + at_x->to_string() + "," + rendered + "\n",
                 out_path);
        } else {
            emit(rendered + "\n", out_path);
        }
        return 0;
    }

    XPoly shown = lambda ? substituted_lambda(poly, *lambda) : poly;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int k = 0; k <= n; ++k)
            coeffs.push_back(lambda_poly_text(poly.coeff(k), lambda));
        j["coeffs"] = std::move(coeffs);
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::string text = "n,k,coeff\n";
        for (int k = 0; k <= n; ++k)
            text += std::to_string(n) + "," + std::to_string(k) + "," +
                    lambda_poly_text(poly.coeff(k), lambda) + "\n";
        emit(text, out_path);
    } else {
        emit(shown.to_string() + "\n", out_path);
    }
    return 0;
}

int run_sum(int p, int n, const std::string& lambda_text, const std::string& format,
            const std::string& out_path) {
    if (p < 1 || n < 1)
        throw UsageError("sum requires p >= 1 and n >= 1");
    auto lambda = parse_lambda(lambda_text);
    std::string rendered = lambda_poly_text(degenkit::falling_power_sum(p, n), lambda);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["n"] = n;
        j["value"] = rendered;
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        emit("p,n,value\n" + std::to_string(p) + "," + std::to_string(n) + "," + rendered + "\n",
             out_path);
    } else {
        emit(rendered + "\n", out_path);
    }
    return 0;
}

int run_series(const std::string& name, int weight, int order, const std::string& lambda_text,
               const std::string& format, const std::string& out_path) {
    if (order < 0)
        throw UsageError("--order must be nonnegative");
    auto lambda = parse_lambda(lambda_text);

    std::vector<std::string> coeffs;
    std::string text;
    if (name == "exp") {
        auto series = degenkit::exp_degenerate_series(order);
        for (int k = 0; k <= order; ++k) {
            const XPoly& c = series.coefficient(k);
            coeffs.push_back(lambda ? substituted_lambda(c, *lambda).to_string() : c.to_string());
        }
        if (lambda) {
            auto shown = TruncatedSeries<XPoly>::build(
                order, [&](int k) { return substituted_lambda(series.coefficient(k), *lambda); });
            text = shown.to_string();
        } else {
            text = series.to_string();
        }
    } else if (name == "exp1" || name == "log" || name == "polylog") {
        TruncatedSeries<LambdaPoly> series =
            name == "exp1"  ? degenkit::exp_degenerate_one_series(order)
            : name == "log" ? degenkit::log_degenerate_series(order)
                            : degenkit::polylog_degenerate_series(weight, order);
        for (int k = 0; k <= order; ++k)
            coeffs.push_back(lambda_poly_text(series.coefficient(k), lambda));
        if (lambda) {
            auto shown = TruncatedSeries<Rational>::build(
                order, [&](int k) { return series.coefficient(k).eval(*lambda); });
            text = shown.to_string();
        } else {
            text = series.to_string();
        }
    } else {
        throw UsageError("series name must be one of: exp, exp1, log, polylog");
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["name"] = name;
        if (name == "polylog")
            j["k"] = weight;
        j["order"] = order;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : coeffs)
            arr.push_back(c);
        j["coeffs"] = std::move(arr);
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::string body = "n,coeff\n";
        for (int k = 0; k <= order; ++k)
            body += std::to_string(k) + "," + coeffs[static_cast<size_t>(k)] + "\n";
        emit(body, out_path);
    } else {
        emit(text + "\n", out_path);
    }
    return 0;
}

int run_verify(std::vector<std::string> names, bool all, bool list, int n_max, int p_max, int r_max,
               int order, const std::string& lambda_text, const std::string& format,
               const std::string& out_path) {
    if (list) {
        std::string text;
        for (const auto& info : degenkit::suite_families())
            text += info.name + "\n";
        emit(text, out_path);
        return 0;
    }
    if (!all && names.empty())
        throw UsageError("select identity families by name or pass --all");
    degenkit::SuiteConfig config;
    config.n_max = n_max;
    config.p_max = p_max;
    config.r_max = r_max;
    config.order = order;
    config.lambda_value = parse_lambda(lambda_text);
    if (!all)
        config.selection = std::move(names);
    for (const auto& name : config.selection) {
        if (!degenkit::is_family_name(name)) {
            std::string message = "unknown identity family: " + name + "\nvalid names:";
            for (const auto& info : degenkit::suite_families())
                message += "\n  " + info.name;
            throw UsageError(message);
        }
    }

    degenkit::SuiteResult result;
    try {
        result = degenkit::run_suite(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (format == "json")
        emit(degenkit::suite_to_json(result).dump(2) + "\n", out_path);
    else if (format == "csv")
        emit(degenkit::suite_to_csv(result), out_path);
    else
        emit(degenkit::suite_to_text(result), out_path);
    return result.all_passed ? 0 : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact deformed Stirling/Bell/Fubini tables and identity verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string lambda_text = "sym";
    std::string out_path;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--lambda", lambda_text, "Deformation parameter: 'sym' or an exact rational");
        cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
    };

    auto* triangle_cmd = app.add_subcommand("triangle", "Print a Stirling triangle");
    std::string triangle_kind;
    int triangle_n_max = 0;
    triangle_cmd->add_option("kind", triangle_kind, "first | second")->required();
    triangle_cmd->add_option("n_max", triangle_n_max, "Largest row index")->required();
    add_common(triangle_cmd);

    auto* poly_cmd = app.add_subcommand("poly", "Print a Bell or Fubini polynomial");
    std::string poly_family;
    int poly_n = 0;
    std::string at_x_text;
    poly_cmd->add_option("family", poly_family, "bell | fubini")->required();
    poly_cmd->add_option("n", poly_n, "Polynomial index")->required();
    poly_cmd->add_option("--at-x", at_x_text, "Evaluate at a rational x");
    add_common(poly_cmd);

    auto* sum_cmd = app.add_subcommand("sum", "Print the consecutive falling-factorial sum");
    int sum_p = 1;
    int sum_n = 1;
    sum_cmd->add_option("p", sum_p, "Falling-factorial order")->required();
    sum_cmd->add_option("n", sum_n, "Last summand")->required();
    add_common(sum_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
    std::vector<std::string> verify_names;
    bool verify_all = false;
    bool verify_list = false;
    int n_max = 10;
    int p_max = 8;
    int r_max = 4;
    int order = degenkit::kDefaultOrder;
    verify_cmd->add_option("names", verify_names, "Identity family names");
    verify_cmd->add_flag("--all", verify_all, "Run every family");
    verify_cmd->add_flag("--list", verify_list, "List family names and exit");
    verify_cmd->add_option("--n-max", n_max, "Row/index sweep bound");
    verify_cmd->add_option("--p-max", p_max, "Falling-factorial order sweep bound");
    verify_cmd->add_option("--r-max", r_max, "Operator order sweep bound");
    verify_cmd->add_option("--order", order, "Series truncation order");
    add_common(verify_cmd);

    auto* series_cmd = app.add_subcommand("series", "Print a deformed generating-function series");
    std::string series_name;
    int series_weight = 2;
    int series_order = degenkit::kDefaultOrder;
    series_cmd->add_option("name", series_name, "exp | exp1 | log | polylog")->required();
    series_cmd->add_option("--k", series_weight, "Polylogarithm weight");
    series_cmd->add_option("--order", series_order, "Series truncation order");
    add_common(series_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*triangle_cmd)
            return run_triangle(triangle_kind, triangle_n_max, lambda_text, format, out_path);
        if (*poly_cmd)
            return run_poly(poly_family, poly_n, lambda_text, at_x_text, format, out_path);
        if (*sum_cmd)
            return run_sum(sum_p, sum_n, lambda_text, format, out_path);
        if (*verify_cmd)
            return run_verify(verify_names, verify_all, verify_list, n_max, p_max, r_max, order,
                              lambda_text, format, out_path);
        if (*series_cmd)
            return run_series(series_name, series_weight, series_order, lambda_text, format, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
    return kExitUsage;
}
