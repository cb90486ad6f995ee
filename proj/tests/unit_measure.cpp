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

#include "hilmat/measure.hpp"

using hilmat::CarlesonTestVariant;
using hilmat::complex_t;
using hilmat::GridConfig;
using hilmat::MomentSequence;
using hilmat::RadialMeasure;
using hilmat::SupFlag;

namespace {

// Beta-function closed form for the power-weight moments, the independent
// oracle for the quadrature path: mu_n = n! Gamma(a+1) / Gamma(n+a+1).
double power_moment_oracle(double alpha, std::size_t n) {
    return std::exp(std::lgamma(static_cast<double>(n) + 1.0) + std::lgamma(alpha + 1.0) -
                    std::lgamma(static_cast<double>(n) + alpha + 1.0));
}

}  // namespace

TEST_CASE("moments: closed forms and quadrature against the Beta oracle") {
    RadialMeasure leb = RadialMeasure::lebesgue();
    CHECK(leb.moment(3) == doctest::Approx(0.25).epsilon(1e-14));

    RadialMeasure atom = RadialMeasure::atomic({{0.5, 1.0}});
    CHECK(atom.moment(2) == doctest::Approx(0.25).epsilon(1e-14));

    RadialMeasure pw2 = RadialMeasure::power_weight(2.0);
    CHECK(pw2.moment(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    for (std::size_t n : {0u, 1u, 5u, 40u, 333u}) {
        CHECK(pw2.moment(n) == doctest::Approx(power_moment_oracle(2.0, n)).epsilon(1e-10));
    }
    RadialMeasure pwh = RadialMeasure::power_weight(0.5);
    for (std::size_t n : {0u, 2u, 17u, 128u}) {
        CHECK(pwh.moment(n) == doctest::Approx(power_moment_oracle(0.5, n)).epsilon(1e-10));
    }
}

TEST_CASE("tails: closed forms") {
    CHECK(RadialMeasure::lebesgue().tail(0.75) == doctest::Approx(0.25));
    CHECK(RadialMeasure::power_weight(2.0).tail(0.9) == doctest::Approx(0.01));
    RadialMeasure atoms = RadialMeasure::atomic({{0.3, 2.0}, {0.8, 1.0}});
    CHECK(atoms.tail(0.5) == doctest::Approx(1.0));
    CHECK(atoms.tail(0.0) == doctest::Approx(3.0));
    CHECK(atoms.tail(0.81) == doctest::Approx(0.0));
}

TEST_CASE("tail is nonincreasing and starts at the total mass") {
    for (const RadialMeasure& mu :
         {RadialMeasure::lebesgue(), RadialMeasure::power_weight(0.5),
          RadialMeasure::power_weight(2.0), RadialMeasure::atomic({{0.3, 2.0}, {0.8, 1.0}})}) {
        CHECK(mu.tail(0.0) == doctest::Approx(mu.total_mass()).epsilon(1e-12));
        double prev = mu.total_mass();
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            double cur = mu.tail(t);
            CHECK(cur <= prev + 1e-14);
            prev = cur;
        }
    }
}

TEST_CASE("moment(0) equals the total mass") {
    for (const RadialMeasure& mu :
         {RadialMeasure::lebesgue(), RadialMeasure::power_weight(0.5),
          RadialMeasure::power_weight(2.0), RadialMeasure::atomic({{0.5, 1.0}})}) {
        CHECK(mu.moment(0) == doctest::Approx(mu.total_mass()).epsilon(1e-11));
    }
}

TEST_CASE("atoms at or past 1 and nonpositive weights are rejected") {
    CHECK_THROWS_AS(RadialMeasure::atomic({{1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RadialMeasure::atomic({{0.5, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RadialMeasure::atomic({{-0.1, 1.0}}), std::invalid_argument);
}

TEST_CASE("lebesgue and power_weight(1) agree on everything") {
    RadialMeasure a = RadialMeasure::lebesgue();
    RadialMeasure b = RadialMeasure::power_weight(1.0);
    for (std::size_t n : {0u, 1u, 7u, 100u}) {
        CHECK(a.moment(n) == doctest::Approx(b.moment(n)).epsilon(1e-12));
    }
    for (double t : {0.1, 0.6, 0.99}) {
        CHECK(a.tail(t) == doctest::Approx(b.tail(t)).epsilon(1e-12));
    }
    auto g = [](double t) { return complex_t{t / ((1.0 - 0.5 * t) * (1.0 - 0.5 * t)), 0.0}; };
    CHECK(a.integrate(g, 1e-12).real() == doctest::Approx(b.integrate(g, 1e-12).real())
                                               .epsilon(1e-12));
}

TEST_CASE("integrate: closed-form oracles") {
    RadialMeasure leb = RadialMeasure::lebesgue();
    CHECK(leb.integrate_real([](double) { return 1.0; }, 1e-12) == doctest::Approx(1.0));
    // antiderivative oracles: Int_0^1 t (1 - t/2)^-1 dt = 4 ln 2 - 2 and
    // Int_0^1 t (1 - t/2)^-2 dt = 4 - 4 ln 2.
    double v1 = leb.integrate_real([](double t) { return t / (1.0 - 0.5 * t); }, 1e-12);
    CHECK(v1 == doctest::Approx(4.0 * std::log(2.0) - 2.0).epsilon(1e-11));
    double v2 = leb.integrate_real(
        [](double t) { return t / ((1.0 - 0.5 * t) * (1.0 - 0.5 * t)); }, 1e-12);
    CHECK(v2 == doctest::Approx(4.0 - 4.0 * std::log(2.0)).epsilon(1e-11));

    RadialMeasure atom = RadialMeasure::atomic({{0.5, 1.0}});
    CHECK(atom.integrate_real([](double t) { return t * t * t; }, 1e-12) ==
          doctest::Approx(0.125));
}

TEST_CASE("density measures integrate through quadrature") {
    // weight 2(1-t): same as power_weight(2)
    RadialMeasure dens = RadialMeasure::density([](double t) { return 2.0 * (1.0 - t); });
    CHECK(dens.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(dens.moment(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(dens.tail(0.9) == doctest::Approx(0.01).epsilon(1e-8));
}

TEST_CASE("moment sequence caching and invariants") {
    auto mu = std::make_shared<const RadialMeasure>(RadialMeasure::power_weight(0.5));
    MomentSequence seq(mu);
    seq.ensure(512);
    CHECK(seq.size() >= 512);
    double prev = seq.at(0);
    for (std::size_t n = 1; n < 512; ++n) {
        double cur = seq.at(n);
        CHECK(cur <= prev + 1e-12);  // nonincreasing
        prev = cur;
    }
    // second differences of a moment sequence are nonnegative
    for (std::size_t n = 0; n + 2 < 512; ++n) {
        CHECK(seq.at(n) - 2.0 * seq.at(n + 1) + seq.at(n + 2) >= -1e-12);
    }
}

TEST_CASE("carleson constant: flags and values") {
    GridConfig grid;
    grid.max_level = 20;

    auto leb = carleson_constant(RadialMeasure::lebesgue(), 1.0, grid);
    CHECK(leb.constant == doctest::Approx(1.0));
    CHECK(leb.flag == SupFlag::Stable);

    auto pw2 = carleson_constant(RadialMeasure::power_weight(2.0), 1.0, grid);
    CHECK(pw2.constant == doctest::Approx(1.0));  // attained at t = 0
    CHECK(pw2.flag == SupFlag::Stable);

    auto pwh = carleson_constant(RadialMeasure::power_weight(0.5), 1.0, grid);
    CHECK(pwh.flag == SupFlag::Diverging);
    // the value at level 20 dwarfs the level-4 value
    GridConfig coarse;
    coarse.max_level = 4;
    auto pwh4 = carleson_constant(RadialMeasure::power_weight(0.5), 1.0, coarse);
    CHECK(pwh.constant >= 100.0 * pwh4.constant);

    auto atom = carleson_constant(RadialMeasure::atomic({{0.5, 1.0}}), 1.0, grid);
    CHECK(atom.flag == SupFlag::Stable);
    CHECK(atom.constant == doctest::Approx(2.0));
}

TEST_CASE("carleson integral: trivial and closed-form cases") {
    RadialMeasure leb = RadialMeasure::lebesgue();
    // w = 0: kernel is 1, the integral is the total mass.
    auto at0 = carleson_integral(leb, complex_t{0.0, 0.0}, 1.0, 0.0, 1.0,
                                 CarlesonTestVariant::S1);
    CHECK(at0.converged);
    CHECK(at0.value == doctest::Approx(1.0).epsilon(1e-10));

    // Int (1-0.9)/(1-0.9 t)^2 dt = 1
    auto at9 = carleson_integral(leb, complex_t{0.9, 0.0}, 1.0, 0.0, 1.0,
                                 CarlesonTestVariant::S1);
    CHECK(at9.converged);
    CHECK(at9.value == doctest::Approx(1.0).epsilon(1e-10));

    // bounded for the 2-Carleson weight even at |w| near 1
    auto pw = carleson_integral(RadialMeasure::power_weight(2.0), complex_t{0.99, 0.0}, 1.0, 0.0,
                                1.0, CarlesonTestVariant::S1);
    CHECK(pw.converged);
    CHECK(pw.value <= 1.0 + 0.1);

    // S2 with a complex w is bounded by S1 at the same |w|
    auto s2 = carleson_integral(leb, complex_t{0.6, 0.6}, 1.0, 0.0, 1.0,
                                CarlesonTestVariant::S2);
    auto s1 = carleson_integral(leb, complex_t{std::abs(complex_t{0.6, 0.6}), 0.0}, 1.0, 0.0,
                                1.0, CarlesonTestVariant::S1);
    CHECK(s2.converged);
    CHECK(s2.value <= s1.value + 1e-9);
}

TEST_CASE("carleson flag agreement between tail sup and kernel sup") {
    // For each bundled family the S1/S2 sups over a w-grid diverge exactly
    // when the tail-quotient sup does.
    GridConfig grid;
    grid.max_level = 16;
    for (const RadialMeasure& mu :
         {RadialMeasure::lebesgue(), RadialMeasure::power_weight(2.0),
          RadialMeasure::power_weight(0.5), RadialMeasure::atomic({{0.5, 1.0}})}) {
        auto tail_flag = carleson_constant(mu, 1.0, grid).flag;
        std::vector<double> s1_trace, s2_trace;
        double s1_sup = 0.0, s2_sup = 0.0;
        for (int j = 0; j <= grid.max_level; ++j) {
            double w = j == 0 ? 0.0 : hilmat::dyadic_radius(j);
            s1_sup = std::max(s1_sup, carleson_integral(mu, complex_t{w, 0.0}, 1.0, 0.0, 1.0,
                                                        CarlesonTestVariant::S1)
                                          .value);
            // the S2 sup ranges over the disk: sample several rays per radius
            for (double th : {0.0, 0.7, M_PI / 2.0}) {
                s2_sup = std::max(
                    s2_sup, carleson_integral(mu, w * complex_t{std::cos(th), std::sin(th)},
                                              1.0, 0.0, 1.0, CarlesonTestVariant::S2)
                                .value);
            }
            s1_trace.push_back(s1_sup);
            s2_trace.push_back(s2_sup);
        }
        CHECK(hilmat::classify_sup_trace(s1_trace) == tail_flag);
        CHECK(hilmat::classify_sup_trace(s2_trace) == tail_flag);
    }
}

TEST_CASE("measure mini-language round trip") {
    CHECK(hilmat::parse_measure("lebesgue").kind() == RadialMeasure::Kind::Lebesgue);
    RadialMeasure pw = hilmat::parse_measure("power:alpha=0.5");
    CHECK(pw.kind() == RadialMeasure::Kind::PowerWeight);
    CHECK(pw.alpha() == doctest::Approx(0.5));
    RadialMeasure at = hilmat::parse_measure("atomic:t=0.3,w=2;t=0.8,w=1");
    CHECK(at.atoms().size() == 2);
    CHECK(at.total_mass() == doctest::Approx(3.0));
    CHECK_THROWS_AS((void)hilmat::parse_measure("power:beta=1"), std::invalid_argument);
    CHECK_THROWS_AS((void)hilmat::parse_measure("gaussian"), std::invalid_argument);
}
