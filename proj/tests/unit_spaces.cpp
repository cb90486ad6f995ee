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

#include <doctest.h>

#include <cmath>
#include <memory>

#include "hilmat/spaces.hpp"

using hilmat::complex_t;
using hilmat::GridConfig;
using hilmat::MomentSequence;
using hilmat::NormResult;
using hilmat::RadialMeasure;
using hilmat::SpaceFamily;
using hilmat::SpaceSpec;
using hilmat::SummabilityVerdict;
using hilmat::TaylorSeries;

namespace {

TaylorSeries poly(std::initializer_list<double> cs) {
    std::vector<complex_t> v;
    for (double c : cs) v.push_back(complex_t{c, 0.0});
    return TaylorSeries(std::move(v));
}

SpaceSpec spec_of(SpaceFamily fam, double q = 2.0, int levels = 16) {
    SpaceSpec s;
    s.family = fam;
    s.q = q;
    s.grid.max_level = levels;
    return s;
}

// Gauss series sum_n ((a)_n / n!)^2 u^n; all terms have one sign, so plain
// term recursion is a safe independent oracle for the circle kernel means.
double hyp_equal_params(double a, double u) {
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t n = 0; n < 20000000; ++n) {
        double factor = (a + static_cast<double>(n)) / (static_cast<double>(n) + 1.0);
        term *= factor * factor * u;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// I_c(r) through the transformed series that converges up to r = 1:
// (1-r^2)^(-c) * 2F1((1-c)/2, (1-c)/2; 1; r^2).
double kernel_mean_oracle(double c, double r) {
    double u = r * r;
    return std::pow(1.0 - u, -c) * hyp_equal_params((1.0 - c) / 2.0, u);
}

}  // namespace

TEST_CASE("trivial norm values") {
    CHECK(space_norm(poly({0.0, 1.0}), spec_of(SpaceFamily::Bloch)).value ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(space_norm(poly({0.0, 0.0, 1.0}), spec_of(SpaceFamily::Zygmund1)).value ==
          doctest::Approx(2.0).epsilon(1e-9));
    NormResult hardy = space_norm(poly({0.0, 1.0}), spec_of(SpaceFamily::Hardy, 2.0, 20));
    CHECK(hardy.value == doctest::Approx(1.0).epsilon(1e-5));  // grid sup from below
    CHECK(hardy.converged);

    SpaceSpec ml;
    ml.family = SpaceFamily::MeanLipschitz;
    ml.p = 2.0;
    ml.alpha = 0.5;
    CHECK(space_norm(poly({0.0, 1.0}), ml).value == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(space_norm(poly({1.0}), spec_of(SpaceFamily::Bq, 0.5)).value ==
          doctest::Approx(1.0).epsilon(1e-9));

    CHECK(space_norm(poly({0.0, 1.0}), spec_of(SpaceFamily::HardyLittlewood, 2.0)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dirichlet norm of z under the r dr dtheta convention") {
    // |z|': f' = 1, Int (1-|w|) dA = 2 pi Int r(1-r) dr = pi/3.
    NormResult d = space_norm(poly({0.0, 1.0}), spec_of(SpaceFamily::Dirichlet, 2.0));
    CHECK(d.converged);
    CHECK(d.value == doctest::Approx(std::sqrt(M_PI / 3.0)).epsilon(1e-6));
}

TEST_CASE("hardy littlewood norm of the log series matches the partial-sum oracle") {
    TaylorSeries h = hilmat::make_function("hlog:N=10000");
    double oracle = 0.0;
    for (std::size_t n = 0; n <= 10000; ++n) oracle += 1.0 / ((n + 1.0) * (n + 1.0));
    NormResult res = space_norm(h, spec_of(SpaceFamily::HardyLittlewood, 2.0));
    CHECK(res.value == doctest::Approx(std::sqrt(oracle)).epsilon(1e-12));
    CHECK(std::abs(res.value - std::sqrt(M_PI * M_PI / 6.0)) < 1e-4);
    CHECK(res.converged);
}

TEST_CASE("zygmund norm of the log series lands in the operator-norm bracket") {
    SpaceSpec zyg = spec_of(SpaceFamily::Zygmund1, 2.0, 14);
    zyg.grid.truncation = 10000;
    NormResult res = space_norm(hilmat::make_function("hlog:N=10000"), zyg);
    CHECK(res.converged);
    CHECK(res.value >= 1.5 + 2.0 / M_PI - 0.01);
    CHECK(res.value <= 1.5 + 4.0 / M_PI + 0.01);
    // sup-type traces are running sups, hence nondecreasing
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i] >= res.trace[i - 1]);
    }
}

TEST_CASE("hardy norm flags growth for the truncated geometric series") {
    NormResult res = space_norm(hilmat::make_function("geom:N=4000"),
                                spec_of(SpaceFamily::Hardy, 2.0, 16));
    CHECK(res.unbounded);
}

TEST_CASE("norm homogeneity and triangle inequality") {
    TaylorSeries f = poly({1.0, -0.5, 0.25, 0.125});
    TaylorSeries g = poly({0.3, 0.7, -0.2, 0.1});
    std::vector<complex_t> sum_coeffs(4);
    for (std::size_t i = 0; i < 4; ++i) sum_coeffs[i] = f.coeff(i) + g.coeff(i);
    TaylorSeries fg{sum_coeffs};
    std::vector<complex_t> scaled(4);
    const complex_t c{-2.5, 1.0};
    for (std::size_t i = 0; i < 4; ++i) scaled[i] = c * f.coeff(i);
    TaylorSeries cf{scaled};

    std::vector<SpaceSpec> specs;
    specs.push_back(spec_of(SpaceFamily::Bloch));
    specs.push_back(spec_of(SpaceFamily::Zygmund1));
    SpaceSpec ml;
    ml.family = SpaceFamily::MeanLipschitz;
    ml.p = 2.0;
    ml.alpha = 0.5;
    specs.push_back(ml);
    specs.push_back(spec_of(SpaceFamily::Hardy, 2.0));
    specs.push_back(spec_of(SpaceFamily::Dirichlet, 2.0));
    specs.push_back(spec_of(SpaceFamily::HardyLittlewood, 2.0));
    specs.push_back(spec_of(SpaceFamily::Bq, 0.5));

    for (const SpaceSpec& s : specs) {
        double nf = space_norm(f, s).value;
        double ng = space_norm(g, s).value;
        double nfg = space_norm(fg, s).value;
        double ncf = space_norm(cf, s).value;
        CHECK(ncf == doctest::Approx(std::abs(c) * nf).epsilon(1e-10));
        if (s.family != SpaceFamily::Bq) {  // quasi-norm for q < 1: skip triangle
            CHECK(nfg <= nf + ng + 1e-10);
        }
    }
}

TEST_CASE("kernel means: exact cases and the hypergeometric oracle") {
    // z = 0: integrand is 1 for every c.
    for (double c : {-0.5, 0.0, 1.0, 2.0}) {
        auto m = hilmat::circle_kernel_mean(complex_t{0.0, 0.0}, c);
        CHECK(m.converged);
        CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
    }
    // c = 1: I_1(r) = 1/(1-r^2) exactly.
    for (double r : {0.3, 0.7, 0.9}) {
        auto m = hilmat::circle_kernel_mean(complex_t{r, 0.0}, 1.0, 1e-11);
        CHECK(m.value == doctest::Approx(1.0 / (1.0 - r * r)).epsilon(1e-9));
    }
    // c = 3: (1-r^2)^3 I_3(r) = 1 + r^2 exactly.
    for (double r : {0.5, 0.9}) {
        auto m = hilmat::circle_kernel_mean(complex_t{r, 0.0}, 3.0, 1e-11);
        CHECK(std::pow(1.0 - r * r, 3.0) * m.value ==
              doctest::Approx(1.0 + r * r).epsilon(1e-9));
    }
    // c = 2 and c = -1/2 against the series oracle, off-axis arguments too.
    for (double r : {0.2, 0.6, 0.95}) {
        auto m2 = hilmat::circle_kernel_mean(r * complex_t{std::cos(1.1), std::sin(1.1)}, 2.0, 1e-11);
        CHECK(m2.value == doctest::Approx(kernel_mean_oracle(2.0, r)).epsilon(1e-8));
        auto mh = hilmat::circle_kernel_mean(complex_t{r, 0.0}, -0.5, 1e-11);
        CHECK(mh.value == doctest::Approx(kernel_mean_oracle(-0.5, r)).epsilon(1e-8));
    }
}

TEST_CASE("kernel mean bracket and sharpness for c = 2") {
    const double bound = hilmat::kernel_mean_sharp_bound(2.0);  // 4/pi
    double prev = 0.0;
    for (int j = 0; j <= 16; ++j) {
        double r = j == 0 ? 0.0 : hilmat::dyadic_radius(j);
        auto m = hilmat::circle_kernel_mean(complex_t{r, 0.0}, 2.0, 1e-10);
        REQUIRE(m.converged);
        double v = std::pow(1.0 - r * r, 2.0) * m.value;
        CHECK(v >= 1.0 - 1e-9);
        CHECK(v <= bound + 1e-6);
        CHECK(v >= prev - 1e-12);  // increases toward the sharp constant
        prev = v;
        if (j == 16) CHECK(v >= 0.995 * bound);
    }
}

TEST_CASE("kernel mean c = 0 bracket") {
    for (int j = 1; j <= 12; ++j) {
        double r = hilmat::dyadic_radius(j);
        auto m = hilmat::circle_kernel_mean(complex_t{r, 0.0}, 0.0, 1e-10);
        double ratio = r * r * m.value / (-std::log1p(-(r * r)));
        CHECK(ratio >= 1.0 / M_PI - 1e-9);
        CHECK(ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("lq moment criterion: oracles and verdicts") {
    auto leb = std::make_shared<const RadialMeasure>(RadialMeasure::lebesgue());
    MomentSequence leb_moments(leb);
    auto crit = lq_moment_criterion(leb_moments, 2.0, std::size_t{1} << 21);
    CHECK(crit.verdict == SummabilityVerdict::Finite);
    CHECK(crit.value == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-9));

    // the q-exponents collapse to the same series for the Lebesgue moments
    for (double q : {1.0, 1.5, 3.0}) {
        auto c = lq_moment_criterion(leb_moments, q, std::size_t{1} << 21);
        CHECK(c.verdict == SummabilityVerdict::Finite);
        CHECK(c.value == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-8));
    }

    auto atom = std::make_shared<const RadialMeasure>(RadialMeasure::atomic({{0.5, 1.0}}));
    MomentSequence atom_moments(atom);
    auto ac = lq_moment_criterion(atom_moments, 2.0, std::size_t{1} << 21);
    CHECK(ac.verdict == SummabilityVerdict::Finite);
    CHECK(ac.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(ac.value - 4.0 / 3.0) <= 1e-10);

    auto pwh = std::make_shared<const RadialMeasure>(RadialMeasure::power_weight(0.5));
    MomentSequence pwh_moments(pwh);
    auto dc = lq_moment_criterion(pwh_moments, 2.0, std::size_t{1} << 14);
    CHECK(dc.verdict == SummabilityVerdict::Divergent);
}

TEST_CASE("block equivalence: unit sequence and stability under doubling") {
    std::vector<double> e0{1.0};
    auto be = hilmat::block_equivalence(e0, 2.0, 0.5);
    CHECK(be.lhs == doctest::Approx(1.0).epsilon(1e-9));  // 1/(p beta) = 1
    CHECK(be.rhs == doctest::Approx(1.0));

    auto be2 = hilmat::block_equivalence(e0, 1.0, 0.25);
    CHECK(be2.lhs == doctest::Approx(4.0).epsilon(1e-9));  // 1/(p beta) = 4

    std::vector<double> zero{0.0, 0.0, 0.0};
    auto bz = hilmat::block_equivalence(zero, 2.0, 0.5);
    CHECK(bz.lhs == doctest::Approx(0.0));
    CHECK(bz.rhs == doctest::Approx(0.0));

    // ones up to 2^12: the lhs/rhs ratio moves < 5% when the truncation doubles
    std::vector<double> ones(std::size_t{1} << 12, 1.0);
    std::vector<double> ones2(std::size_t{1} << 13, 1.0);
    auto a = hilmat::block_equivalence(ones, 2.0, 0.5);
    auto b = hilmat::block_equivalence(ones2, 2.0, 0.5);
    double ra = a.lhs / a.rhs;
    double rb = b.lhs / b.rhs;
    CHECK(std::abs(ra - rb) / ra < 0.05);
}

TEST_CASE("space descriptors parse and validate") {
    GridConfig grid;
    CHECK(SpaceSpec::parse("bloch", grid).family == SpaceFamily::Bloch);
    CHECK(SpaceSpec::parse("zygmund1", grid).family == SpaceFamily::Zygmund1);
    SpaceSpec ml = SpaceSpec::parse("meanlip:p=4", grid);
    CHECK(ml.alpha == doctest::Approx(0.25));  // defaults to 1/p
    CHECK(SpaceSpec::parse("hardy:q=2", grid).q == doctest::Approx(2.0));
    CHECK(SpaceSpec::parse("hl:q=1", grid).q == doctest::Approx(1.0));
    CHECK(SpaceSpec::parse("bq:q=0.5", grid).q == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)SpaceSpec::parse("bq:q=2", grid), std::invalid_argument);
    CHECK_THROWS_AS((void)SpaceSpec::parse("hl:q=0.5", grid), std::invalid_argument);
    CHECK_THROWS_AS((void)SpaceSpec::parse("meanlip:p=1", grid), std::invalid_argument);
    CHECK_THROWS_AS((void)SpaceSpec::parse("sobolev:s=1", grid), std::invalid_argument);
}

TEST_CASE("mean Lipschitz norms of the log series are finite for p = 2 and 4") {
    TaylorSeries h = hilmat::make_function("hlog:N=10000");
    SpaceSpec zyg = spec_of(SpaceFamily::Zygmund1, 2.0, 12);
    NormResult nz = space_norm(h, zyg);
    CHECK(nz.converged);
    for (double p : {2.0, 4.0}) {
        SpaceSpec ml;
        ml.family = SpaceFamily::MeanLipschitz;
        ml.p = p;
        ml.alpha = 1.0 / p;
        ml.grid.max_level = 12;
        NormResult res = space_norm(h, ml);
        CHECK_FALSE(res.unbounded);  // finite grid estimate
        CHECK(res.value > 0.0);
        CHECK(res.value < 10.0);
    }
}
