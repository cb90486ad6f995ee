// Copyright 2026 the hilmat authors
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

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilmat/experiments.hpp"
#include "hilmat/hankel.hpp"
#include "hilmat/kernels.hpp"
#include "hilmat/series.hpp"
#include "hilmat/spaces.hpp"

namespace {

using hilmat::complex_t;
using ordered_json = nlohmann::ordered_json;

complex_t parse_complex(const std::string& s) {
    // Accepts "a", "bi", "a+bi", "a-bi" and "a,b".
    if (std::size_t comma = s.find(','); comma != std::string::npos) {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    }
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (body.empty() || body == "+" || body == "-") body += "1";
            return {0.0, std::stod(body)};
        }
        std::string imag = body.substr(split);
        if (imag == "+" || imag == "-") imag += "1";
        return {std::stod(body.substr(0, split)), std::stod(imag)};
    }
    return {std::stod(s), 0.0};
}

hilmat::GridConfig parse_grid(const std::string& text, hilmat::GridConfig base) {
    // "J=16,nodes=128[,truncation=10000][,tol=1e-9]"
    std::string body = text;
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string item = comma == std::string::npos ? body : body.substr(0, comma);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--grid expects key=value pairs");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        if (key == "J") base.max_level = std::stoi(val);
        else if (key == "nodes") base.angular_nodes = static_cast<std::size_t>(std::stoul(val));
        else if (key == "truncation") base.truncation = static_cast<std::size_t>(std::stoul(val));
        else if (key == "tol") base.rel_tol = std::stod(val);
        else throw CLI::ValidationError("--grid: unknown key '" + key + "'");
        if (comma == std::string::npos) break;
        body = body.substr(comma + 1);
    }
    base.validate();
    return base;
}

hilmat::GridConfig default_grid(const std::string& config_path) {
    hilmat::GridConfig grid;
    if (const char* env = std::getenv("HILMAT_GRID_J")) {
        grid.max_level = std::atoi(env);
    }
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw CLI::ValidationError("cannot open config file " + config_path);
        ordered_json j = ordered_json::parse(in);
        if (j.contains("grid")) {
            const auto& g = j["grid"];
            if (g.contains("J")) grid.max_level = g["J"].get<int>();
            if (g.contains("nodes")) grid.angular_nodes = g["nodes"].get<std::size_t>();
            if (g.contains("truncation")) grid.truncation = g["truncation"].get<std::size_t>();
            if (g.contains("rel_tol")) grid.rel_tol = g["rel_tol"].get<double>();
        }
    }
    return grid;
}

int cmd_apply(const std::string& measure_spec, const std::string& function_spec,
              const std::string& at, int derivative, const std::string& form) {
    hilmat::RadialMeasure mu = hilmat::parse_measure(measure_spec);
    hilmat::TaylorSeries f = hilmat::make_function(function_spec);
    complex_t z = parse_complex(at);
    hilmat::HankelOperator op(std::move(mu));

    complex_t value{0.0, 0.0};
    double error_bound = 0.0;
    if (form == "coeff") {
        std::size_t out_degree = 512;
        auto action = op.apply_coefficients(f, out_degree);
        hilmat::TaylorSeries series =
            hilmat::differentiate(action.series, static_cast<unsigned>(derivative));
        value = hilmat::eval(series, z);
        double az = std::abs(z);
        error_bound = hilmat::eval_tail_bound(series, az);
        if (az < 1.0) error_bound += action.tail_bound / (1.0 - az);
    } else if (form == "integral") {
        const double tol = 1e-12;
        if (derivative == 0) value = op.apply_integral(f, z, tol);
        else value = op.derivative_kernel(f, z, derivative, tol);
        error_bound = tol * std::abs(value);
    } else if (form == "contour") {
        if (derivative != 1) throw CLI::ValidationError("--form contour computes --derivative 1");
        if (op.measure().kind() != hilmat::RadialMeasure::Kind::Lebesgue) {
            throw CLI::ValidationError("--form contour is defined for the Lebesgue measure");
        }
        const double tol = 1e-12;
        value = hilmat::contour_derivative(f, z, tol);
        error_bound = tol * std::abs(value);
    } else {
        throw CLI::ValidationError("--form must be coeff, integral or contour");
    }

    ordered_json out;
    out["value"] = {{"re", value.real()}, {"im", value.imag()}};
    out["form"] = form;
    out["error_bound"] = error_bound;
    std::cout << out.dump(2) << std::endl;
    return 0;
}

int cmd_norm(const std::string& function_spec, const std::string& space_spec,
             const hilmat::GridConfig& grid) {
    hilmat::TaylorSeries f = hilmat::make_function(function_spec);
    hilmat::SpaceSpec spec = hilmat::SpaceSpec::parse(space_spec, grid);
    hilmat::NormResult res = hilmat::space_norm(f, spec);
    ordered_json out;
    out["space"] = spec.name();
    out["value"] = res.value;
    if (std::isnan(res.attained_at)) out["attained_at"] = nullptr;
    else out["attained_at"] = res.attained_at;
    out["converged"] = res.converged;
    out["unbounded"] = res.unbounded;
    out["trace"] = res.trace;
    std::cout << out.dump(2) << std::endl;
    return 0;
}

int cmd_verify(const std::string& what, const std::string& measure_spec, double q,
               const hilmat::GridConfig& grid, const std::string& out_format) {
    std::vector<hilmat::Report> reports;
    if (what == "all") {
        reports = hilmat::run_all(grid);
    } else if (what == "thm1.1") {
        std::vector<hilmat::RadialMeasure> family;
        if (measure_spec.empty()) family = hilmat::bundled_measures();
        else family.push_back(hilmat::parse_measure(measure_spec));
        reports.push_back(hilmat::run_carleson_dichotomy(family, grid));
    } else if (what == "thm1.2") {
        reports.push_back(hilmat::run_zygmund_bracket(grid));
    } else if (what == "thm1.3") {
        reports.push_back(hilmat::run_bloch_norm(grid));
    } else if (what == "thm1.4") {
        hilmat::RadialMeasure mu = measure_spec.empty() ? hilmat::RadialMeasure::lebesgue()
                                                        : hilmat::parse_measure(measure_spec);
        reports.push_back(hilmat::run_coefficient_criterion(mu, q > 0 ? q : 2.0, grid));
    } else if (what == "thm1.5") {
        hilmat::RadialMeasure mu = measure_spec.empty() ? hilmat::RadialMeasure::lebesgue()
                                                        : hilmat::parse_measure(measure_spec);
        reports.push_back(hilmat::run_bq_compactness(mu, q > 0 && q < 1 ? q : 0.5, grid));
    } else if (what == "lem2.2") {
        reports.push_back(hilmat::run_kernel_mean_sharpness({-0.5, 0.0, 0.5, 1.0, 2.0, 3.0}, grid));
    } else if (what == "rem2.1") {
        reports.push_back(hilmat::run_disk_integral_sup(grid));
    } else {
        throw CLI::ValidationError(
            "verify expects thm1.1|thm1.2|thm1.3|thm1.4|thm1.5|lem2.2|rem2.1|all");
    }

    if (out_format == "csv") std::cout << hilmat::reports_to_csv(reports);
    else std::cout << hilmat::reports_to_json(reports, 2) << std::endl;

    // exit 0 iff every verdict passes
    for (const hilmat::Report& r : reports) {
        for (const hilmat::Verdict& v : r.verdicts) {
            if (v.status != hilmat::VerdictStatus::Pass) return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Hilbert matrix operators on the unit disk"};
    app.require_subcommand(1);

    std::string config_path;
    std::string grid_text;
    bool serial = false;
    app.add_option("--config", config_path, "JSON config file with grid defaults");
    app.add_flag("--serial", serial, "disable the OpenMP kernels");

    auto* apply = app.add_subcommand("apply", "apply the operator at a point");
    std::string measure_spec = "lebesgue";
    std::string function_spec;
    std::string at_text;
    int derivative = 0;
    std::string form = "integral";
    apply->add_option("--measure", measure_spec, "measure descriptor");
    apply->add_option("--function", function_spec, "function descriptor")->required();
    apply->add_option("--at", at_text, "evaluation point z")->required();
    apply->add_option("--derivative", derivative, "derivative order 0, 1 or 2")
        ->check(CLI::Range(0, 2));
    apply->add_option("--form", form, "coeff | integral | contour");

    auto* norm = app.add_subcommand("norm", "evaluate a function-space norm");
    std::string norm_function;
    std::string space_spec;
    norm->add_option("--function", norm_function, "function descriptor")->required();
    norm->add_option("--space", space_spec, "space descriptor")->required();
    norm->add_option("--grid", grid_text, "grid overrides J=..,nodes=..[,truncation=..,tol=..]");

    auto* verify = app.add_subcommand("verify", "run a verification experiment");
    std::string what;
    std::string verify_measure;
    double q = 0.0;
    std::string out_format = "json";
    verify->add_option("experiment", what, "thm1.1 .. thm1.5, lem2.2, rem2.1 or all")->required();
    verify->add_option("--measure", verify_measure, "measure descriptor");
    verify->add_option("--q", q, "exponent for thm1.4 / thm1.5");
    verify->add_option("--grid", grid_text, "grid overrides J=..,nodes=..[,truncation=..,tol=..]");
    verify->add_option("--out", out_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (serial) hilmat::kernels::set_parallel(false);
        hilmat::GridConfig grid = default_grid(config_path);
        if (!grid_text.empty()) grid = parse_grid(grid_text, grid);
        grid.validate();

        if (app.got_subcommand(apply)) {
            return cmd_apply(measure_spec, function_spec, at_text, derivative, form);
        }
        if (app.got_subcommand(norm)) {
            return cmd_norm(norm_function, space_spec, grid);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(what, verify_measure, q, grid, out_format);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
