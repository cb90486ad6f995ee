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

#ifndef HILMAT_KERNELS_HPP
#define HILMAT_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hilmat/numeric.hpp"

// Data-parallel inner loops. Each kernel has a serial reference implementation
// and an OpenMP variant that fills disjoint slots of a preallocated buffer;
// reductions always run as a fixed-order sequential pass afterwards. The two
// variants therefore produce bit-identical results for any thread count.

namespace hilmat::kernels {

/// Process-wide switch between the serial reference and the OpenMP variants.
/// Defaults to parallel when compiled with OpenMP.
void set_parallel(bool enabled);
bool parallel_enabled();
int worker_count();

/// In-place radix-2 FFT with kernel exp(+2*pi*i*j*k/M); size must be a power
/// of two. Always serial: callers parallelize across transforms instead.
void fft_pow2(std::vector<complex_t>& data);

/// a_n * r^n for every stored coefficient; the radius-dependent half of a
/// circle evaluation, reusable across node-doubling levels.
std::vector<complex_t> scale_by_radius(std::span<const complex_t> coeffs, double radius);

/// Values of sum_n a_n (r e^{i*theta_k})^n at theta_k = 2*pi*k/M for k < M,
/// M a power of two, given the pre-scaled coefficients a_n r^n. Coefficients
/// beyond M are folded modulo M first, which evaluates the full polynomial
/// exactly on the node set.
std::vector<complex_t> circle_values_scaled(std::span<const complex_t> scaled,
                                            std::size_t nodes);

/// Convenience composition of the two steps above.
std::vector<complex_t> circle_values(std::span<const complex_t> coeffs, double radius,
                                     std::size_t nodes);
std::vector<complex_t> circle_values_serial(std::span<const complex_t> coeffs, double radius,
                                            std::size_t nodes);

/// (1/M) * sum |v_k|^p, fixed evaluation order.
double mean_abs_pow(std::span<const complex_t> values, double p);
double max_abs(std::span<const complex_t> values);

/// out[n] = sum_k moments[n + k] * coeffs[k] for n < out.size(). Requires
/// moments.size() >= out.size() + coeffs.size() - 1.
void hankel_apply(std::span<const double> moments, std::span<const complex_t> coeffs,
                  std::span<complex_t> out);
void hankel_apply_serial(std::span<const double> moments, std::span<const complex_t> coeffs,
                         std::span<complex_t> out);

/// out[i] = fn(begin + i); the elements are independent.
void batch_fill(std::size_t begin, std::size_t count,
                const std::function<double(std::size_t)>& fn, std::span<double> out);
void batch_fill_serial(std::size_t begin, std::size_t count,
                       const std::function<double(std::size_t)>& fn, std::span<double> out);

void batch_fill_complex(std::size_t count, const std::function<complex_t(std::size_t)>& fn,
                        std::span<complex_t> out);
void batch_fill_complex_serial(std::size_t count,
                               const std::function<complex_t(std::size_t)>& fn,
                               std::span<complex_t> out);

}  // namespace hilmat::kernels

#endif  // HILMAT_KERNELS_HPP
