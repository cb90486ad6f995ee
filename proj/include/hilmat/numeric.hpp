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

#ifndef HILMAT_NUMERIC_HPP
#define HILMAT_NUMERIC_HPP

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilmat {

using complex_t = std::complex<double>;

/// Raised when an adaptive rule exhausts its refinement budget. Carries the
/// last two estimates so the caller can report how far apart they were.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string what, double previous, double last)
        : std::runtime_error(std::move(what)), previous_estimate(previous), last_estimate(last) {}
    double previous_estimate;
    double last_estimate;
};

/// Fixed-order sequential sums. Every reduction in the library goes through
/// one of these so results are bit-identical run to run and do not depend on
/// the number of threads.
double sum_sequential(std::span<const double> values);
complex_t sum_sequential(std::span<const complex_t> values);

/// Gauss-Legendre rule on [-1, 1], computed once by Newton iteration on the
/// Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule_16();

/// Integrates h over (0, 1] with dyadic cells graded toward 0 (boundaries
/// 2^-j) and a fixed Gauss rule per cell. Refinement extends the grading
/// depth until the estimate moves by less than rel_tol; the leftover mass in
/// (0, 2^-J) must vanish as J grows, which holds for any integrable h.
struct GradedIntegral {
    complex_t value;
    bool converged;
    int levels;
};
GradedIntegral integrate_graded_toward_zero(const std::function<complex_t(double)>& h,
                                            double rel_tol, int max_levels = 46);

double integrate_graded_toward_zero_real(const std::function<double(double)>& h,
                                         double rel_tol, int max_levels = 46);

/// sum_{n > N} (n+1)^degree * r^n, bounded from above in closed form.
/// Used for truncation-tail control; returns +inf when the bound is useless.
double polynomial_tail_sum_bound(std::size_t first_index, int degree, double r);

/// Gamma-ratio constants for the circle kernel means: Gamma(c) / Gamma^2((1+c)/2)
/// for c > 0 and Gamma(-c) / Gamma^2((1-c)/2) for c < 0.
double kernel_mean_sharp_bound(double c);

/// Dyadic radius 1 - 2^-j.
inline double dyadic_radius(int level) { return 1.0 - std::ldexp(1.0, -level); }

}  // namespace hilmat

#endif  // HILMAT_NUMERIC_HPP
