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

#include "hilmat/hankel.hpp"

#include <cmath>
#include <limits>

#include "hilmat/kernels.hpp"

namespace hilmat {

HankelOperator::CoeffAction HankelOperator::apply_coefficients(const TaylorSeries& f,
                                                               std::size_t out_degree,
                                                               double tol) const {
    const std::size_t in_count = f.coeffs().size();
    const std::size_t need = out_degree + in_count;
    std::vector<double> mom = moments_.prefix(need + 1);

    std::vector<complex_t> out(out_degree + 1);
    kernels::hankel_apply(std::span<const double>(mom).first(need),
                          f.coeffs(), out);

    double abs_sum = 0.0;
    for (const complex_t& a : f.coeffs()) abs_sum += std::abs(a);

    // Contribution of the coefficients the truncation of f dropped. With
    // support in [0, t_max], mu_{m+1} <= t_max * mu_m, so the dropped sum is
    // geometric below t_max once the input tail law caps |a_k|.
    double input_tail = 0.0;
    if (!f.tail().exact()) {
        double t_max = mu_->support_sup();
        double factor = polynomial_tail_sum_bound(in_count, f.tail().growth_degree, t_max);
        if (std::isfinite(factor) && t_max > 0.0) {
            input_tail = f.tail().coeff_bound * mom[in_count] *
                         factor / std::pow(t_max, static_cast<double>(in_count));
        } else if (t_max == 0.0) {
            input_tail = 0.0;
        } else {
            input_tail = std::numeric_limits<double>::infinity();
        }
    }

    // The output is itself a truncation: |b_n| <= mu_n * (|a| sum + input tail).
    TailLaw out_tail;
    out_tail.coeff_bound = mom[std::min(out_degree + 1, need)] * abs_sum + input_tail;
    out_tail.growth_degree = 0;

    TaylorSeries series(std::move(out), std::nullopt, out_tail);
    return {std::move(series), input_tail, input_tail <= tol};
}

complex_t HankelOperator::apply_integral(const TaylorSeries& f, complex_t z,
                                         double rel_tol) const {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("apply_integral needs |z| < 1");
    return mu_->integrate(
        [&f, z](double t) { return eval(f, complex_t{t, 0.0}) / (1.0 - t * z); }, rel_tol);
}

complex_t HankelOperator::derivative_kernel(const TaylorSeries& f, complex_t z, int order,
                                            double rel_tol) const {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("derivative_kernel needs |z| < 1");
    if (order == 1) {
        return mu_->integrate(
            [&f, z](double t) {
                complex_t d = 1.0 - t * z;
                return t * eval(f, complex_t{t, 0.0}) / (d * d);
            },
            rel_tol);
    }
    if (order == 2) {
        return mu_->integrate(
            [&f, z](double t) {
                complex_t d = 1.0 - t * z;
                return 2.0 * t * t * eval(f, complex_t{t, 0.0}) / (d * d * d);
            },
            rel_tol);
    }
    throw std::invalid_argument("derivative_kernel supports orders 1 and 2");
}

complex_t contour_derivative(const TaylorSeries& f, complex_t z, double rel_tol) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("contour_derivative needs |z| < 1");
    GradedIntegral res = integrate_graded_toward_zero(
        [&f, z](double u) {
            double t = 1.0 - u;
            complex_t psi = t / (1.0 - (1.0 - t) * z);
            return psi * eval(f, psi);
        },
        rel_tol);
    if (!res.converged) {
        throw ConvergenceError("contour_derivative quadrature did not converge",
                               std::abs(res.value), std::abs(res.value));
    }
    return res.value / (1.0 - z);
}

TaylorSeries cesaro_coefficients(const TaylorSeries& f, std::size_t out_degree) {
    auto a = f.coeffs();
    std::vector<complex_t> out(out_degree + 1);
    complex_t prefix{0.0, 0.0};
    for (std::size_t n = 0; n <= out_degree; ++n) {
        if (n < a.size()) prefix += a[n];
        out[n] = prefix / static_cast<double>(n + 1);
    }
    // Beyond the truncation: |c_n| <= (|a|-sum + dropped input tail) / (n+1).
    double abs_sum = 0.0;
    for (const complex_t& c : a) abs_sum += std::abs(c);
    TailLaw tail;
    tail.coeff_bound = abs_sum;
    if (!f.tail().exact()) {
        // The input's own tail keeps feeding the prefix sums; only a finite
        // bound when the input coefficients are summable, so stay conservative.
        tail.coeff_bound += f.tail().coeff_bound * static_cast<double>(out_degree + 2);
        tail.growth_degree = f.tail().growth_degree;
    }
    return TaylorSeries(std::move(out), std::nullopt, tail);
}

complex_t cesaro_point(const TaylorSeries& f, complex_t z, double rel_tol) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("cesaro_point needs |z| < 1");
    GradedIntegral res = integrate_graded_toward_zero(
        [&f, z](double u) {
            complex_t tz = (1.0 - u) * z;
            return eval(f, tz) / (1.0 - tz);
        },
        rel_tol);
    if (!res.converged) {
        throw ConvergenceError("cesaro_point quadrature did not converge", std::abs(res.value),
                               std::abs(res.value));
    }
    return res.value;
}

}  // namespace hilmat
