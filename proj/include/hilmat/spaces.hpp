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

#ifndef HILMAT_SPACES_HPP
#define HILMAT_SPACES_HPP

#include <string>
#include <string_view>

#include "hilmat/grid.hpp"
#include "hilmat/measure.hpp"
#include "hilmat/series.hpp"

namespace hilmat {

enum class SpaceFamily {
    Bloch,            // |f(0)| + sup (1-r^2) M_inf(r, f')
    Zygmund1,         // |f(0)| + |f'(0)| + sup (1-r^2) M_1(r, f'')
    MeanLipschitz,    // |f(0)| + sup (1-r^2)^(1-alpha) M_p(r, f')
    Hardy,            // sup M_q(r, f)
    Dirichlet,        // (|f(0)|^q + Int |f'|^q (1-|z|)^(q-1) dA)^(1/q), dA = r dr dtheta
    HardyLittlewood,  // (sum (n+1)^(q-2) |a_n|^q)^(1/q)
    Bq,               // Int_0^1 (1-r)^(1/q-2) M_1(r, f) dr, 0 < q < 1
};

struct SpaceSpec {
    SpaceFamily family = SpaceFamily::Bloch;
    double p = 2.0;       // MeanLipschitz circle exponent, p in (1, inf)
    double alpha = 0.5;   // MeanLipschitz smoothness, defaults to 1/p
    double q = 2.0;       // Hardy / Dirichlet / HardyLittlewood / Bq exponent
    GridConfig grid;

    void validate() const;
    std::string name() const;

    /// bloch | zygmund1 | meanlip:p=<p>[,alpha=<a>] | hardy:q=<q> |
    /// dirichlet:q=<q> | hl:q=<q> | bq:q=<q>
    static SpaceSpec parse(std::string_view descriptor, GridConfig grid = GridConfig{});
};

/// Outcome of a norm evaluation on the dyadic grid. Sup-type families report
/// the grid sup (a lower estimate of the true norm) with the running sup as
/// trace; integral and sum families report refinement estimates. A trace that
/// keeps growing past the divergence threshold sets `unbounded` instead of
/// raising.
struct NormResult {
    double value = 0.0;
    double attained_at = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    bool unbounded = false;
    std::vector<double> trace;
};

NormResult space_norm(const TaylorSeries& f, const SpaceSpec& spec);

/// I_c(z) = (1/2pi) Int |1 - z e^{-i theta}|^{-(1+c)} dtheta, by symmetric
/// uniform quadrature with node doubling. Depends on |z| only.
struct KernelMean {
    double value = 0.0;
    bool converged = false;
};
KernelMean circle_kernel_mean(complex_t z, double c, double rel_tol = 1e-9,
                              std::size_t start_nodes = 64);

enum class SummabilityVerdict { Finite, Divergent, Inconclusive };

/// Partial sum of s_n = (n+1)^(q-2) mu_n^q with an extrapolated remainder.
/// `value` = partial + tail_model; `tail_uncertainty` is the width of the
/// integral-comparison bracket around the model (about the last summand), and
/// the verdict is Finite when it drops below 1e-12, Divergent when the
/// partial sums still grow by more than 1% per dyadic block at the cutoff.
struct LqCriterion {
    double value = 0.0;
    double partial = 0.0;
    double tail_model = 0.0;
    double tail_uncertainty = 0.0;
    SummabilityVerdict verdict = SummabilityVerdict::Inconclusive;
    std::vector<double> block_trace;
    std::size_t cutoff_used = 0;
};
LqCriterion lq_moment_criterion(const MomentSequence& moments, double q, std::size_t cutoff);

/// Both sides of the dyadic-block comparison for power series with
/// nonnegative coefficients:
///   lhs = Int_0^1 (1-r)^(p*beta-1) (sum lambda_n r^n)^p dr
///   rhs = sum_n 2^(-n p beta) (sum_{k in I_n} lambda_k)^p,
/// I_0 = {0}, I_n = [2^(n-1), 2^n). The two are computed independently.
struct BlockEquivalence {
    double lhs = 0.0;
    double rhs = 0.0;
};
BlockEquivalence block_equivalence(std::span<const double> lambda, double p, double beta,
                                   double rel_tol = 1e-10);

}  // namespace hilmat

#endif  // HILMAT_SPACES_HPP
