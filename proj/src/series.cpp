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

#include "hilmat/series.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hilmat/kernels.hpp"

namespace hilmat {

TaylorSeries::TaylorSeries(std::vector<complex_t> coeffs, std::optional<double> sup_bound,
                           TailLaw tail)
    : coeffs_(std::move(coeffs)), sup_bound_(sup_bound), tail_(tail) {
    if (coeffs_.empty()) throw std::invalid_argument("TaylorSeries needs at least one coefficient");
    for (const complex_t& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("TaylorSeries coefficients must be finite");
        }
    }
    if (sup_bound_) {
        if (*sup_bound_ < 0.0 || !std::isfinite(*sup_bound_)) {
            throw std::invalid_argument("sup bound must be finite and nonnegative");
        }
        for (const complex_t& c : coeffs_) {
            if (std::abs(c) > *sup_bound_ * (1.0 + 1e-12) + 1e-300) {
                throw std::invalid_argument("coefficient exceeds declared sup bound");
            }
        }
    }
    if (tail_.coeff_bound < 0.0) throw std::invalid_argument("tail bound must be nonnegative");
}

double TaylorSeries::coeff_max() const {
    double m = 0.0;
    for (const complex_t& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

complex_t eval(const TaylorSeries& f, complex_t z) {
    if (!f.tail().exact() && std::abs(z) >= 1.0) {
        throw std::domain_error("eval: |z| >= 1 is unreliable for a truncated series");
    }
    auto coeffs = f.coeffs();
    complex_t acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = acc * z + coeffs[i];
    }
    return acc;
}

double eval_tail_bound(const TaylorSeries& f, double r) {
    if (f.tail().exact()) return 0.0;
    return f.tail().coeff_bound *
           polynomial_tail_sum_bound(f.degree() + 1, f.tail().growth_degree, r);
}

double mean_tail_bound(const TaylorSeries& f, double r, double p) {
    if (f.tail().exact()) return 0.0;
    double sup = eval_tail_bound(f, r);
    if (p <= 2.0) {
        // M_p(tail) <= M_2(tail) = sqrt(sum |c_n|^2 r^(2n)) over the dropped n.
        double l2 = f.tail().coeff_bound *
                    std::sqrt(polynomial_tail_sum_bound(f.degree() + 1,
                                                        2 * f.tail().growth_degree, r * r));
        return std::min(sup, l2);
    }
    return sup;
}

TaylorSeries differentiate(const TaylorSeries& f, unsigned order) {
    if (order == 0) return f;
    if (order > f.degree()) {
        TailLaw tail = f.tail();
        if (!tail.exact()) {
            tail.growth_degree += static_cast<int>(order);
            tail.coeff_bound *= std::pow(order + 1.0, f.tail().growth_degree + order);
        }
        return TaylorSeries({complex_t{0.0, 0.0}}, std::nullopt, tail);
    }
    auto coeffs = f.coeffs();
    std::vector<complex_t> out(coeffs.size() - order);
    for (std::size_t n = 0; n < out.size(); ++n) {
        double scale = 1.0;
        for (unsigned j = 1; j <= order; ++j) scale *= static_cast<double>(n + j);
        out[n] = scale * coeffs[n + order];
    }
    TailLaw tail = f.tail();
    if (!tail.exact()) {
        // (n+1)...(n+order) <= ((order+1)(n+1))^order, folded into the law.
        tail.coeff_bound *= std::pow(order + 1.0, tail.growth_degree + static_cast<int>(order));
        tail.growth_degree += static_cast<int>(order);
    }
    return TaylorSeries(std::move(out), std::nullopt, tail);
}

TaylorSeries fractional_derivative(const TaylorSeries& f, double t) {
    auto coeffs = f.coeffs();
    std::vector<complex_t> out(coeffs.size());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = coeffs[n] * std::pow(static_cast<double>(n + 1), t);
    }
    TailLaw tail = f.tail();
    if (!tail.exact() && t > 0.0) {
        tail.growth_degree += static_cast<int>(std::ceil(t));
    }
    std::optional<double> sup;
    if (t <= 0.0 && f.sup_bound()) sup = f.sup_bound();  // |(n+1)^t| <= 1 for t <= 0
    return TaylorSeries(std::move(out), sup, tail);
}

void CircleMeanSpec::validate() const {
    if (!(p > 0.0)) throw std::invalid_argument("circle mean exponent must be positive");
    if (nodes < 16 || nodes % 2 != 0) {
        throw std::invalid_argument("circle mean needs an even node count >= 16");
    }
}

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

constexpr std::size_t kMaxAngularNodes = std::size_t{1} << 22;

}  // namespace

double integral_mean(const TaylorSeries& f, double r, const CircleMeanSpec& spec,
                     double rel_tol) {
    spec.validate();
    if (r < 0.0 || r >= 1.0) throw std::domain_error("integral_mean needs 0 <= r < 1");
    const bool sup_mean = std::isinf(spec.p);
    std::size_t nodes = next_pow2(std::max<std::size_t>(spec.nodes, 16));
    std::vector<complex_t> scaled = kernels::scale_by_radius(f.coeffs(), r);
    // Drop the geometrically dead tail of a_n r^n; it cannot move any mean
    // but would dominate the folding cost of every doubling level.
    double scale_max = 0.0;
    for (const complex_t& c : scaled) scale_max = std::max(scale_max, std::abs(c));
    std::size_t live = scaled.size();
    while (live > 1 && std::abs(scaled[live - 1]) <= 1e-18 * scale_max) --live;
    scaled.resize(live);
    double prev = std::numeric_limits<double>::quiet_NaN();
    double prev2 = std::numeric_limits<double>::quiet_NaN();
    while (nodes <= kMaxAngularNodes) {
        std::vector<complex_t> values = kernels::circle_values_scaled(scaled, nodes);
        double est = sup_mean ? kernels::max_abs(values)
                              : std::pow(kernels::mean_abs_pow(values, spec.p), 1.0 / spec.p);
        if (!std::isnan(prev) &&
            std::abs(est - prev) <= rel_tol * std::max(std::abs(est), 1e-300)) {
            return est;
        }
        prev2 = prev;
        prev = est;
        nodes <<= 1;
    }
    throw ConvergenceError("integral_mean: node doubling did not stabilize", prev2, prev);
}

namespace {

[[noreturn]] void parse_fail(std::string_view descriptor, std::size_t pos, const std::string& why) {
    throw std::invalid_argument("make_function: " + why + " at position " + std::to_string(pos) +
                                " in \"" + std::string(descriptor) + "\"");
}

double parse_real(std::string_view descriptor, std::string_view token, std::size_t pos) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) parse_fail(descriptor, pos, "expected a number");
    return value;
}

long parse_int(std::string_view descriptor, std::string_view token, std::size_t pos) {
    long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0) {
        parse_fail(descriptor, pos, "expected a nonnegative integer");
    }
    return value;
}

std::string_view expect_key(std::string_view descriptor, std::string_view body,
                            std::string_view key, std::size_t pos) {
    if (body.substr(0, key.size()) != key) {
        parse_fail(descriptor, pos, "expected '" + std::string(key) + "'");
    }
    return body.substr(key.size());
}

}  // namespace

TaylorSeries make_function(std::string_view d) {
    std::size_t colon = d.find(':');
    if (colon == std::string_view::npos) parse_fail(d, d.size(), "missing ':'");
    std::string_view head = d.substr(0, colon);
    std::string_view body = d.substr(colon + 1);
    std::size_t body_pos = colon + 1;
    if (body.empty()) parse_fail(d, body_pos, "empty argument");

    if (head == "const") {
        double c = parse_real(d, body, body_pos);
        return TaylorSeries({complex_t{c, 0.0}}, std::abs(c));
    }
    if (head == "poly") {
        std::vector<complex_t> coeffs;
        double abs_sum = 0.0;
        std::size_t pos = body_pos;
        while (true) {
            std::size_t comma = body.find(',');
            std::string_view tok = comma == std::string_view::npos ? body : body.substr(0, comma);
            if (tok.empty()) parse_fail(d, pos, "empty coefficient");
            double a = parse_real(d, tok, pos);
            coeffs.push_back(complex_t{a, 0.0});
            abs_sum += std::abs(a);
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
            pos += comma + 1;
        }
        return TaylorSeries(std::move(coeffs), abs_sum);
    }
    if (head == "monomial") {
        long k = parse_int(d, expect_key(d, body, "k=", body_pos), body_pos + 2);
        std::vector<complex_t> coeffs(static_cast<std::size_t>(k) + 1, complex_t{0.0, 0.0});
        coeffs.back() = complex_t{1.0, 0.0};
        return TaylorSeries(std::move(coeffs), 1.0);
    }
    if (head == "geom") {
        long n = parse_int(d, expect_key(d, body, "N=", body_pos), body_pos + 2);
        std::vector<complex_t> coeffs(static_cast<std::size_t>(n) + 1, complex_t{1.0, 0.0});
        return TaylorSeries(std::move(coeffs), std::nullopt, TailLaw{1.0, 0});
    }
    if (head == "hlog") {
        long n = parse_int(d, expect_key(d, body, "N=", body_pos), body_pos + 2);
        std::vector<complex_t> coeffs(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = complex_t{1.0 / static_cast<double>(i + 1), 0.0};
        }
        double tail_bound = 1.0 / static_cast<double>(n + 2);
        return TaylorSeries(std::move(coeffs), std::nullopt, TailLaw{tail_bound, 0});
    }
    parse_fail(d, 0, "unknown function kind '" + std::string(head) + "'");
}

}  // namespace hilmat
