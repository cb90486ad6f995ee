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

#ifndef HILMAT_SERIES_HPP
#define HILMAT_SERIES_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hilmat/numeric.hpp"

namespace hilmat {

/// Bound on the coefficients dropped by a truncation: |a_n| <= coeff_bound *
/// (n+1)^growth_degree for every n beyond the stored degree. coeff_bound == 0
/// means the stored coefficients are the whole function (an exact polynomial).
struct TailLaw {
    double coeff_bound = 0.0;
    int growth_degree = 0;
    bool exact() const { return coeff_bound == 0.0; }
};

/// Truncated power series a_0 + a_1 z + ... + a_N z^N, the universal function
/// representation. Immutable after construction.
class TaylorSeries {
public:
    explicit TaylorSeries(std::vector<complex_t> coeffs,
                          std::optional<double> sup_bound = std::nullopt,
                          TailLaw tail = TailLaw{});

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const complex_t> coeffs() const { return coeffs_; }
    complex_t coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : complex_t{0.0, 0.0};
    }
    const std::optional<double>& sup_bound() const { return sup_bound_; }
    const TailLaw& tail() const { return tail_; }

    /// Largest stored |a_n|.
    double coeff_max() const;

private:
    std::vector<complex_t> coeffs_;
    std::optional<double> sup_bound_;
    TailLaw tail_;
};

/// Horner evaluation of the stored polynomial. For truncated series the result
/// is only meaningful inside the disk, so |z| >= 1 is rejected unless the
/// series is an exact polynomial.
complex_t eval(const TaylorSeries& f, complex_t z);

/// Upper bound on |true function - stored polynomial| at radius r, from the
/// tail law. 0 for exact polynomials, +inf when the law gives no control.
double eval_tail_bound(const TaylorSeries& f, double r);

/// Upper bound on |M_p(r, true) - M_p(r, stored)|. For p <= 2 the quadratic
/// mean of the dropped tail sharpens the sup-norm bound considerably.
double mean_tail_bound(const TaylorSeries& f, double r, double p);

/// order-fold derivative by coefficient shift-and-scale. The derivative of a
/// constant is the zero series [0].
TaylorSeries differentiate(const TaylorSeries& f, unsigned order);

/// Coefficient n scaled by (n+1)^t; t = 0 is the identity.
TaylorSeries fractional_derivative(const TaylorSeries& f, double t);

/// Circle-mean parameters: exponent p (infinity() for the sup) and the
/// starting angular node count. Nodes must be >= 16 and even.
struct CircleMeanSpec {
    double p = 2.0;
    std::size_t nodes = 64;
    void validate() const;
};

/// M_p(r, f) = ((1/2pi) Int |f(r e^{i theta})|^p dtheta)^(1/p) by uniform
/// angular quadrature with node doubling until the relative change drops
/// below rel_tol. p = infinity returns the max over the finest grid (a lower
/// estimate of the true sup). Throws ConvergenceError when doubling stalls.
double integral_mean(const TaylorSeries& f, double r, const CircleMeanSpec& spec,
                     double rel_tol = 1e-9);

/// Builds the bundled test functions from a one-line descriptor:
///   const:<c>  poly:<a0>,<a1>,...  monomial:k=<k>  geom:N=<N>  hlog:N=<N>
/// geom is the truncated geometric series, hlog the truncated series with
/// coefficients 1/(n+1). Throws std::invalid_argument with the offending
/// position on parse failure.
TaylorSeries make_function(std::string_view descriptor);

}  // namespace hilmat

#endif  // HILMAT_SERIES_HPP
