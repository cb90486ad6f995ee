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

#ifndef HILMAT_HANKEL_HPP
#define HILMAT_HANKEL_HPP

#include <memory>

#include "hilmat/measure.hpp"
#include "hilmat/series.hpp"

namespace hilmat {

/// The moment-matrix operator of a radial measure, in both of its guises:
/// coefficient action b_n = sum_k mu_{n+k} a_k and the kernel-integral form
/// Int f(t) / (1 - t z) dmu(t). Immutable apart from the lazily extended
/// moment cache, which is write-once per index.
class HankelOperator {
public:
    explicit HankelOperator(RadialMeasure mu)
        : mu_(std::make_shared<RadialMeasure>(std::move(mu))), moments_(mu_) {}

    const RadialMeasure& measure() const { return *mu_; }
    const MomentSequence& moments() const { return moments_; }

    struct CoeffAction {
        TaylorSeries series;
        double tail_bound;  // bound on what the truncation of f left out of any b_n
        bool converged;
    };

    /// Truncated coefficient action. Exact (tail_bound 0) for polynomial
    /// inputs; for truncated inputs the dropped part is bounded through the
    /// input tail law and the measure support, and the result is flagged
    /// non-converged when that bound exceeds tol.
    CoeffAction apply_coefficients(const TaylorSeries& f, std::size_t out_degree,
                                   double tol = 1e-9) const;

    /// Kernel-integral form at a point, |z| < 1.
    complex_t apply_integral(const TaylorSeries& f, complex_t z, double rel_tol = 1e-12) const;

    /// First or second derivative of the integral form:
    ///   order 1: Int t f(t) / (1-tz)^2 dmu
    ///   order 2: Int 2 t^2 f(t) / (1-tz)^3 dmu
    complex_t derivative_kernel(const TaylorSeries& f, complex_t z, int order,
                                double rel_tol = 1e-12) const;

private:
    std::shared_ptr<RadialMeasure> mu_;
    MomentSequence moments_;
};

/// Derivative of the Lebesgue-measure operator through the rotated contour
/// psi_t(z) = t / (1 - (1-t) z):  (1/(1-z)) Int psi_t(z) f(psi_t(z)) dt.
/// Agrees with derivative_kernel(order 1) for the Lebesgue measure.
complex_t contour_derivative(const TaylorSeries& f, complex_t z, double rel_tol = 1e-12);

/// Coefficient averaging c_n = (a_0 + ... + a_n) / (n+1), truncated at
/// out_degree. The result is an infinite series whenever the coefficient sum
/// is nonzero, so it always carries a tail law.
TaylorSeries cesaro_coefficients(const TaylorSeries& f, std::size_t out_degree);

/// Integral form Int f(tz) / (1 - tz) dt of the same averaging operator.
complex_t cesaro_point(const TaylorSeries& f, complex_t z, double rel_tol = 1e-12);

}  // namespace hilmat

#endif  // HILMAT_HANKEL_HPP
