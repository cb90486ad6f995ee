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

#include "hilmat/numeric.hpp"

#include <cmath>
#include <limits>

namespace hilmat {

double sum_sequential(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

complex_t sum_sequential(std::span<const complex_t> values) {
    complex_t s{0.0, 0.0};
    for (const complex_t& v : values) s += v;
    return s;
}

namespace {

GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x).
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[k] = -x;
        rule.nodes[n - 1 - k] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[k] = w;
        rule.weights[n - 1 - k] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_rule_16() {
    static const GaussRule rule = make_gauss_rule(16);
    return rule;
}

namespace {

// Sum of per-cell Gauss contributions over cells [2^-(j+1), 2^-j] for
// j = 0..levels-1, closed by one Gauss cell on [0, 2^-levels] (interior nodes
// only, so integrable endpoint singularities are sampled, never evaluated at
// 0). Cells are accumulated coarse-to-fine in a single fixed order.
complex_t graded_partial(const std::function<complex_t(double)>& h, int levels,
                         std::vector<complex_t>& cell_values) {
    const GaussRule& rule = gauss_rule_16();
    cell_values.resize(static_cast<std::size_t>(levels) + 1);
    auto gauss_cell = [&rule, &h](double lo, double hi) {
        double mid = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        complex_t acc{0.0, 0.0};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += rule.weights[i] * h(mid + half * rule.nodes[i]);
        }
        return half * acc;
    };
    for (int j = 0; j < levels; ++j) {
        double hi = std::ldexp(1.0, -j);
        cell_values[static_cast<std::size_t>(j)] = gauss_cell(0.5 * hi, hi);
    }
    cell_values[static_cast<std::size_t>(levels)] = gauss_cell(0.0, std::ldexp(1.0, -levels));
    return sum_sequential(std::span<const complex_t>(cell_values));
}

}  // namespace

GradedIntegral integrate_graded_toward_zero(const std::function<complex_t(double)>& h,
                                            double rel_tol, int max_levels) {
    std::vector<complex_t> cells;
    int levels = 8;
    complex_t prev = graded_partial(h, levels, cells);
    while (levels < max_levels) {
        int next = std::min(levels + 4, max_levels);
        complex_t cur = graded_partial(h, next, cells);
        double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rel_tol * scale) {
            return {cur, true, next};
        }
        prev = cur;
        levels = next;
    }
    return {prev, false, levels};
}

double integrate_graded_toward_zero_real(const std::function<double(double)>& h,
                                         double rel_tol, int max_levels) {
    auto wrapped = [&h](double u) { return complex_t{h(u), 0.0}; };
    GradedIntegral res = integrate_graded_toward_zero(wrapped, rel_tol, max_levels);
    if (!res.converged) {
        throw ConvergenceError("graded quadrature did not converge", res.value.real(),
                               res.value.real());
    }
    return res.value.real();
}

double polynomial_tail_sum_bound(std::size_t first_index, int degree, double r) {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    double m = static_cast<double>(first_index) + 1.0;
    // (n+1)^d <= m^d * exp(d*(n+1-m)/m) for n+1 >= m, so the tail is dominated
    // by a geometric series with ratio r*exp(d/m).
    double ratio = r * std::exp(static_cast<double>(degree) / m);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    double lead = std::pow(m, static_cast<double>(degree)) *
                  std::pow(r, static_cast<double>(first_index));
    return lead / (1.0 - ratio);
}

double kernel_mean_sharp_bound(double c) {
    if (c == 0.0) throw std::invalid_argument("sharp bound undefined at c = 0");
    double a = std::abs(c);
    double half = (1.0 + a) / 2.0;
    return std::exp(std::lgamma(a) - 2.0 * std::lgamma(half));
}

}  // namespace hilmat
