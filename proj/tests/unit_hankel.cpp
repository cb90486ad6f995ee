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
#include <random>

#include "hilmat/hankel.hpp"

using hilmat::complex_t;
using hilmat::HankelOperator;
using hilmat::RadialMeasure;
using hilmat::TaylorSeries;

namespace {

TaylorSeries poly(std::initializer_list<double> cs) {
    std::vector<complex_t> v;
    for (double c : cs) v.push_back(complex_t{c, 0.0});
    return TaylorSeries(std::move(v));
}

}  // namespace

TEST_CASE("coefficient action basics") {
    HankelOperator leb(RadialMeasure::lebesgue());
    auto act = leb.apply_coefficients(poly({1.0}), 16);
    CHECK(act.converged);
    CHECK(act.tail_bound == 0.0);
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(act.series.coeff(n).real() == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-14));
    }

    auto zero = leb.apply_coefficients(poly({0.0}), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(std::abs(zero.series.coeff(n)) == 0.0);

    HankelOperator atom(RadialMeasure::atomic({{0.5, 1.0}}));
    auto act2 = atom.apply_coefficients(poly({1.0}), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(act2.series.coeff(n).real() ==
              doctest::Approx(std::pow(0.5, static_cast<double>(n))).epsilon(1e-13));
    }
}

TEST_CASE("coefficient action flags unbounded truncation tails") {
    HankelOperator leb(RadialMeasure::lebesgue());
    TaylorSeries geo = hilmat::make_function("geom:N=50");
    auto act = leb.apply_coefficients(geo, 10);
    CHECK_FALSE(act.converged);  // full-support measure, coefficient tail uncontrolled

    HankelOperator atom(RadialMeasure::atomic({{0.5, 1.0}}));
    auto act2 = atom.apply_coefficients(geo, 10, 1e-9);
    CHECK(act2.converged);  // support sup 1/2 tames the tail
    CHECK(act2.tail_bound < 1e-9);
}

TEST_CASE("integral action: trivial and closed-form values") {
    HankelOperator leb(RadialMeasure::lebesgue());
    complex_t v0 = leb.apply_integral(poly({1.0}), complex_t{0.0, 0.0});
    CHECK(v0.real() == doctest::Approx(1.0).epsilon(1e-11));

    complex_t vh = leb.apply_integral(poly({1.0}), complex_t{0.5, 0.0});
    CHECK(vh.real() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-11));

    // linearity in the measure weights
    HankelOperator small(RadialMeasure::atomic({{0.5, 1e-3}}));
    HankelOperator unit(RadialMeasure::atomic({{0.5, 1.0}}));
    complex_t a = small.apply_integral(poly({1.0}), complex_t{0.3, 0.2});
    complex_t b = unit.apply_integral(poly({1.0}), complex_t{0.3, 0.2});
    CHECK(std::abs(a - 1e-3 * b) < 1e-15);
    CHECK_THROWS_AS(RadialMeasure::atomic({{0.5, 0.0}}), std::invalid_argument);
}

TEST_CASE("derivative kernels at the origin") {
    HankelOperator leb(RadialMeasure::lebesgue());
    CHECK(leb.derivative_kernel(poly({1.0}), complex_t{0.0, 0.0}, 1).real() ==
          doctest::Approx(0.5).epsilon(1e-11));
    CHECK(leb.derivative_kernel(poly({1.0}), complex_t{0.0, 0.0}, 2).real() ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-11));
    CHECK(std::abs(leb.derivative_kernel(poly({0.0}), complex_t{0.4, 0.1}, 2)) == 0.0);
}

TEST_CASE("derivative kernels match finite differences of the integral action") {
    HankelOperator leb(RadialMeasure::lebesgue());
    TaylorSeries f = poly({1.0, -0.5, 0.25});
    const double h = 1e-5;
    for (complex_t z : {complex_t{0.2, 0.1}, complex_t{0.5, -0.3}}) {
        complex_t fd =
            (leb.apply_integral(f, z + h) - leb.apply_integral(f, z - h)) / (2.0 * h);
        complex_t d1 = leb.derivative_kernel(f, z, 1);
        CHECK(std::abs(fd - d1) / std::abs(d1) < 1e-5);
        complex_t fd2 =
            (leb.derivative_kernel(f, z + h, 1) - leb.derivative_kernel(f, z - h, 1)) /
            (2.0 * h);
        complex_t d2 = leb.derivative_kernel(f, z, 2);
        CHECK(std::abs(fd2 - d2) / std::abs(d2) < 1e-5);
    }
}

TEST_CASE("contour form agrees with the derivative kernel for Lebesgue") {
    HankelOperator leb(RadialMeasure::lebesgue());
    CHECK(hilmat::contour_derivative(poly({1.0}), complex_t{0.0, 0.0}).real() ==
          doctest::Approx(0.5).epsilon(1e-11));
    CHECK(std::abs(hilmat::contour_derivative(poly({0.0}), complex_t{0.5, 0.0})) == 0.0);
    for (complex_t z : {complex_t{0.5, 0.0}, complex_t{0.3, 0.4}, complex_t{-0.7, 0.1}}) {
        for (const TaylorSeries& f : {poly({1.0}), poly({1.0, 1.0, 1.0}), poly({0.5, -2.0})}) {
            complex_t a = hilmat::contour_derivative(f, z);
            complex_t b = leb.derivative_kernel(f, z, 1);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("dual representation: coefficient and integral actions coincide") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<RadialMeasure> measures{RadialMeasure::lebesgue(),
                                        RadialMeasure::power_weight(2.0),
                                        RadialMeasure::atomic({{0.3, 2.0}, {0.8, 1.0}})};
    for (const RadialMeasure& mu : measures) {
        HankelOperator op(mu);
        std::vector<complex_t> cs(31);
        for (auto& c : cs) c = complex_t{dist(rng), dist(rng)};
        TaylorSeries f(cs);
        auto act = op.apply_coefficients(f, 400);
        for (complex_t z : {complex_t{0.0, 0.0}, complex_t{0.5, 0.5}, complex_t{-0.9, 0.0},
                            complex_t{0.6, -0.6}}) {
            complex_t via_coeff = hilmat::eval(act.series, z);
            complex_t via_integral = op.apply_integral(f, z, 1e-12);
            CHECK(std::abs(via_coeff - via_integral) < 1e-9);
        }
    }
}

TEST_CASE("linearity of both actions") {
    HankelOperator op(RadialMeasure::power_weight(2.0));
    TaylorSeries f = poly({1.0, 2.0, -1.0});
    TaylorSeries g = poly({0.5, 0.0, 3.0});
    std::vector<complex_t> combo(3);
    for (std::size_t i = 0; i < 3; ++i) combo[i] = 2.0 * f.coeff(i) - 0.5 * g.coeff(i);
    TaylorSeries h_combo{combo};
    complex_t z{0.4, 0.3};
    complex_t lhs = op.apply_integral(h_combo, z, 1e-12);
    complex_t rhs = 2.0 * op.apply_integral(f, z, 1e-12) - 0.5 * op.apply_integral(g, z, 1e-12);
    CHECK(std::abs(lhs - rhs) < 1e-11);

    auto c_combo = op.apply_coefficients(h_combo, 20).series;
    auto cf = op.apply_coefficients(f, 20).series;
    auto cg = op.apply_coefficients(g, 20).series;
    for (std::size_t n = 0; n <= 20; ++n) {
        complex_t want = 2.0 * cf.coeff(n) - 0.5 * cg.coeff(n);
        CHECK(std::abs(c_combo.coeff(n) - want) < 1e-12);
    }
}

TEST_CASE("image of 1 under the Lebesgue operator has the log closed form") {
    HankelOperator leb(RadialMeasure::lebesgue());
    auto act = leb.apply_coefficients(poly({1.0}), 2000);
    for (double r : {0.1, 0.5, 0.8}) {
        double expect = -std::log1p(-r) / r;
        double tail = hilmat::eval_tail_bound(act.series, r);
        CHECK(std::abs(hilmat::eval(act.series, complex_t{r, 0.0}).real() - expect) <=
              tail + 1e-12);
    }
}

TEST_CASE("derivative bound (1 - |z|^2) |H(f)'(z)| <= 2 sup|f|") {
    HankelOperator leb(RadialMeasure::lebesgue());
    for (const char* desc : {"const:1", "poly:0.25,0.25,0.25", "monomial:k=3"}) {
        TaylorSeries f = hilmat::make_function(desc);
        double bound = 2.0 * f.sup_bound().value();
        for (int j = 0; j <= 12; ++j) {
            double r = j == 0 ? 0.0 : hilmat::dyadic_radius(j);
            for (double theta : {0.0, 1.0, 2.5, 3.14}) {
                complex_t z = r * complex_t{std::cos(theta), std::sin(theta)};
                complex_t d = leb.derivative_kernel(f, z, 1, 1e-10);
                CHECK((1.0 - r * r) * std::abs(d) <= bound + 1e-8);
            }
        }
    }
}

TEST_CASE("cesaro averaging: coefficients and integral form") {
    TaylorSeries one = poly({1.0});
    TaylorSeries c1 = hilmat::cesaro_coefficients(one, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(c1.coeff(n).real() == doctest::Approx(1.0 / (n + 1.0)));
    }
    TaylorSeries z = poly({0.0, 1.0});
    TaylorSeries cz = hilmat::cesaro_coefficients(z, 6);
    CHECK(cz.coeff(0).real() == doctest::Approx(0.0));
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(cz.coeff(n).real() == doctest::Approx(1.0 / (n + 1.0)));
    }

    // integral form against the coefficient form inside |z| <= 0.9
    for (const TaylorSeries& f : {poly({1.0}), poly({0.0, 1.0}), poly({1.0, -2.0, 0.5})}) {
        TaylorSeries cf = hilmat::cesaro_coefficients(f, 600);
        for (complex_t zz : {complex_t{0.5, 0.0}, complex_t{0.0, 0.9}, complex_t{-0.6, 0.3}}) {
            complex_t via_series = hilmat::eval(cf, zz);
            complex_t via_integral = hilmat::cesaro_point(f, zz);
            CHECK(std::abs(via_series - via_integral) < 1e-8);
        }
    }
}

TEST_CASE("cesaro image of 1 fills the Bloch bound 3") {
    // 1 + sup (1-r^2) |C(1)'(r)| approaches 3 on the dyadic grid.
    TaylorSeries c1 = hilmat::cesaro_coefficients(poly({1.0}), 200000);
    TaylorSeries d = hilmat::differentiate(c1, 1);
    double sup = 0.0;
    for (int j = 1; j <= 13; ++j) {
        double r = hilmat::dyadic_radius(j);
        sup = std::max(sup, (1.0 - r * r) * std::abs(hilmat::eval(d, complex_t{r, 0.0})));
    }
    CHECK(1.0 + sup >= 2.99);
    CHECK(1.0 + sup <= 3.0 + 1e-9);
}
