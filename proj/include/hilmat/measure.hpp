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

#ifndef HILMAT_MEASURE_HPP
#define HILMAT_MEASURE_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "hilmat/grid.hpp"
#include "hilmat/numeric.hpp"

namespace hilmat {

/// Finite positive Borel measure on [0, 1). Four families:
///   lebesgue            dt
///   power_weight(a)     a (1-t)^(a-1) dt, normalized so the total mass is 1
///   atomic({(t_j,w_j)}) point masses, t_j < 1, w_j > 0
///   density(w)          w(t) dt for a user weight with integrable mass
/// Instances are immutable; all operations are pure and re-entrant.
class RadialMeasure {
public:
    enum class Kind { Lebesgue, PowerWeight, Atomic, Density };

    static RadialMeasure lebesgue();
    static RadialMeasure power_weight(double alpha);
    static RadialMeasure atomic(std::vector<std::pair<double, double>> atoms);
    static RadialMeasure density(std::function<double(double)> weight);

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double total_mass() const { return total_mass_; }
    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

    /// mu([t, 1)). Closed form except for Density measures.
    double tail(double t) const;

    /// mu_n = Int t^n dmu(t). Closed form for Lebesgue and Atomic; graded
    /// quadrature for PowerWeight and Density.
    double moment(std::size_t n) const;

    /// Int g dmu with the continuous part on dyadic cells graded toward t = 1
    /// (a substitution u = (1-t)^alpha flattens the power weight first).
    /// Throws ConvergenceError when refinement stalls.
    complex_t integrate(const std::function<complex_t(double)>& g, double rel_tol) const;
    double integrate_real(const std::function<double(double)>& g, double rel_tol) const;

    /// Same integral but reporting instead of throwing on non-convergence.
    GradedIntegral integrate_reported(const std::function<complex_t(double)>& g,
                                      double rel_tol) const;

    /// Supremum of the support: 1 for the continuous families, the largest
    /// atom position otherwise.
    double support_sup() const;

    /// One-line descriptor round-trips with parse_measure.
    std::string describe() const;

private:
    RadialMeasure() = default;
    Kind kind_ = Kind::Lebesgue;
    double alpha_ = 1.0;
    double total_mass_ = 1.0;
    std::vector<std::pair<double, double>> atoms_;
    std::function<double(double)> weight_;
};

/// Parses `lebesgue`, `power:alpha=<a>`, `atomic:t=<t>,w=<w>;t=...,w=...`.
RadialMeasure parse_measure(std::string_view descriptor);

/// Cached moment table mu_0..mu_M, extended on demand. Thread-safe: readers
/// see either a fully computed prefix or trigger the (idempotent) extension.
class MomentSequence {
public:
    explicit MomentSequence(std::shared_ptr<const RadialMeasure> measure)
        : measure_(std::move(measure)) {}

    double at(std::size_t n) const;
    void ensure(std::size_t count) const;
    std::size_t size() const;
    const RadialMeasure& measure() const { return *measure_; }

    /// Copies the first `count` moments (extending if needed).
    std::vector<double> prefix(std::size_t count) const;

private:
    std::shared_ptr<const RadialMeasure> measure_;
    mutable std::vector<double> values_;
    mutable std::mutex mutex_;
};

enum class SupFlag { Stable, Diverging, Inconclusive };

/// Stability verdict for a running-sup trace over successive grid
/// refinements: Stable when the last three refinements moved the sup by less
/// than 1%, Diverging when each of them grew it by more than 10%.
SupFlag classify_sup_trace(std::span<const double> trace);

struct CarlesonResult {
    double constant = 0.0;
    SupFlag flag = SupFlag::Inconclusive;
    std::vector<double> trace;  // running sup per grid refinement
};

/// sup over {0} u {1 - 2^-j : j <= max_level} of tail(t) / (1-t)^s, with a
/// stability verdict: Stable once the running sup moves < 1% across the last
/// three refinements, Diverging when it grows > 10% per refinement.
CarlesonResult carleson_constant(const RadialMeasure& mu, double s, const GridConfig& grid);

enum class CarlesonTestVariant { S1, S2 };

struct CarlesonIntegral {
    double value = 0.0;
    bool converged = false;
};

/// Int (1-|w|)^beta / ((1-t)^q K^{s+beta-q}) dmu(t) with K = 1-|w|t for S1 and
/// K = |1-wt| for S2. Requires 0 <= q < s and |w| < 1. Non-convergence is
/// reported, not thrown: near |w| -> 1 the integral blows up exactly when mu
/// fails the s-Carleson condition.
CarlesonIntegral carleson_integral(const RadialMeasure& mu, complex_t w, double beta, double q,
                                   double s, CarlesonTestVariant variant, double rel_tol = 1e-9);

}  // namespace hilmat

#endif  // HILMAT_MEASURE_HPP
