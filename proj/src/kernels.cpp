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

#include "hilmat/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilmat::kernels {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

int worker_count() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

void fft_pow2(std::vector<complex_t>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft_pow2 requires a power-of-two size");
    }
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * M_PI / static_cast<double>(len);
        const complex_t wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            complex_t w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                complex_t u = data[i + k];
                complex_t v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

namespace {

std::vector<complex_t> scale_by_radius_impl(std::span<const complex_t> coeffs, double radius,
                                            bool parallel) {
    std::vector<complex_t> scaled(coeffs.size());
    auto fill = [&](std::size_t n) {
        scaled[n] = coeffs[n] * std::pow(radius, static_cast<double>(n));
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long n = 0; n < static_cast<long long>(coeffs.size()); ++n) {
            fill(static_cast<std::size_t>(n));
        }
#else
        for (std::size_t n = 0; n < coeffs.size(); ++n) fill(n);
#endif
    } else {
        for (std::size_t n = 0; n < coeffs.size(); ++n) fill(n);
    }
    return scaled;
}

// Folds pre-scaled coefficients into residue classes mod M: on the M-point
// circle grid, z^n = z^(n mod M) once the r^n part has been absorbed.
std::vector<complex_t> fold_scaled(std::span<const complex_t> scaled, std::size_t nodes) {
    std::vector<complex_t> folded(nodes, complex_t{0.0, 0.0});
    for (std::size_t n = 0; n < scaled.size(); ++n) {
        folded[n & (nodes - 1)] += scaled[n];
    }
    return folded;
}

}  // namespace

std::vector<complex_t> scale_by_radius(std::span<const complex_t> coeffs, double radius) {
    return scale_by_radius_impl(coeffs, radius, parallel_enabled());
}

std::vector<complex_t> circle_values_scaled(std::span<const complex_t> scaled,
                                            std::size_t nodes) {
    if (nodes == 0 || (nodes & (nodes - 1)) != 0) {
        throw std::invalid_argument("circle_values requires a power-of-two node count");
    }
    std::vector<complex_t> folded = fold_scaled(scaled, nodes);
    fft_pow2(folded);
    return folded;
}

std::vector<complex_t> circle_values(std::span<const complex_t> coeffs, double radius,
                                     std::size_t nodes) {
    std::vector<complex_t> scaled = scale_by_radius_impl(coeffs, radius, parallel_enabled());
    return circle_values_scaled(scaled, nodes);
}

std::vector<complex_t> circle_values_serial(std::span<const complex_t> coeffs, double radius,
                                            std::size_t nodes) {
    std::vector<complex_t> scaled = scale_by_radius_impl(coeffs, radius, false);
    if (nodes == 0 || (nodes & (nodes - 1)) != 0) {
        throw std::invalid_argument("circle_values requires a power-of-two node count");
    }
    std::vector<complex_t> folded = fold_scaled(scaled, nodes);
    fft_pow2(folded);
    return folded;
}

double mean_abs_pow(std::span<const complex_t> values, double p) {
    // Compensated sum: node counts reach 2^22 and the peaked integrands would
    // otherwise hit a plain-summation roundoff floor above the doubling
    // tolerance.
    double s = 0.0, carry = 0.0;
    for (const complex_t& v : values) {
        double term = std::pow(std::abs(v), p) - carry;
        double next = s + term;
        carry = (next - s) - term;
        s = next;
    }
    return s / static_cast<double>(values.size());
}

double max_abs(std::span<const complex_t> values) {
    double m = 0.0;
    for (const complex_t& v : values) m = std::max(m, std::abs(v));
    return m;
}

void hankel_apply_serial(std::span<const double> moments, std::span<const complex_t> coeffs,
                         std::span<complex_t> out) {
    if (moments.size() + 1 < out.size() + coeffs.size()) {
        throw std::invalid_argument("hankel_apply: moment table too short");
    }
    for (std::size_t n = 0; n < out.size(); ++n) {
        complex_t acc{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            acc += moments[n + k] * coeffs[k];
        }
        out[n] = acc;
    }
}

void hankel_apply(std::span<const double> moments, std::span<const complex_t> coeffs,
                  std::span<complex_t> out) {
    if (!parallel_enabled()) {
        hankel_apply_serial(moments, coeffs, out);
        return;
    }
    if (moments.size() + 1 < out.size() + coeffs.size()) {
        throw std::invalid_argument("hankel_apply: moment table too short");
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long n = 0; n < static_cast<long long>(out.size()); ++n) {
        complex_t acc{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            acc += moments[static_cast<std::size_t>(n) + k] * coeffs[k];
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
#else
    hankel_apply_serial(moments, coeffs, out);
#endif
}

void batch_fill_serial(std::size_t begin, std::size_t count,
                       const std::function<double(std::size_t)>& fn, std::span<double> out) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(begin + i);
}

void batch_fill(std::size_t begin, std::size_t count,
                const std::function<double(std::size_t)>& fn, std::span<double> out) {
    if (!parallel_enabled()) {
        batch_fill_serial(begin, count, fn, out);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        out[static_cast<std::size_t>(i)] = fn(begin + static_cast<std::size_t>(i));
    }
#else
    batch_fill_serial(begin, count, fn, out);
#endif
}

void batch_fill_complex_serial(std::size_t count,
                               const std::function<complex_t(std::size_t)>& fn,
                               std::span<complex_t> out) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
}

void batch_fill_complex(std::size_t count, const std::function<complex_t(std::size_t)>& fn,
                        std::span<complex_t> out) {
    if (!parallel_enabled()) {
        batch_fill_complex_serial(count, fn, out);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
#else
    batch_fill_complex_serial(count, fn, out);
#endif
}

}  // namespace hilmat::kernels
