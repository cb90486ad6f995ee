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

// Compares the serial reference kernels against the OpenMP variants and
// verifies they produce identical bits while timing both.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hilmat/kernels.hpp"
#include "hilmat/measure.hpp"

using hilmat::complex_t;
namespace kernels = hilmat::kernels;

namespace {

double time_seconds(const std::function<void()>& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() /
           reps;
}

void row(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s serial %9.4f ms   parallel %9.4f ms   speedup %5.2fx   %s\n", name,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
                identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("kernel benchmark, %d worker(s)\n", kernels::worker_count());

    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    {
        std::vector<complex_t> coeffs(200000);
        for (auto& c : coeffs) c = complex_t{dist(rng), dist(rng)};
        const std::size_t nodes = 1 << 16;
        std::vector<complex_t> serial_out, parallel_out;
        double ts = time_seconds(
            [&] { serial_out = kernels::circle_values_serial(coeffs, 0.97, nodes); }, 5);
        kernels::set_parallel(true);
        double tp = time_seconds(
            [&] { parallel_out = kernels::circle_values(coeffs, 0.97, nodes); }, 5);
        bool same = serial_out == parallel_out;
        row("circle_values 2e5 -> 65k", ts, tp, same);
    }

    {
        std::vector<double> moments(60000);
        for (std::size_t i = 0; i < moments.size(); ++i) moments[i] = 1.0 / (i + 1.0);
        std::vector<complex_t> coeffs(10000);
        for (auto& c : coeffs) c = complex_t{dist(rng), dist(rng)};
        std::vector<complex_t> serial_out(50000), parallel_out(50000);
        double ts = time_seconds(
            [&] { kernels::hankel_apply_serial(moments, coeffs, serial_out); }, 3);
        kernels::set_parallel(true);
        double tp = time_seconds([&] { kernels::hankel_apply(moments, coeffs, parallel_out); },
                                 3);
        bool same = serial_out == parallel_out;
        row("hankel_apply 50k x 10k", ts, tp, same);
    }

    {
        hilmat::RadialMeasure mu = hilmat::RadialMeasure::power_weight(0.5);
        const std::size_t count = 2000;
        std::vector<double> serial_out(count), parallel_out(count);
        auto fn = [&mu](std::size_t n) { return mu.moment(n); };
        double ts =
            time_seconds([&] { kernels::batch_fill_serial(0, count, fn, serial_out); }, 1);
        kernels::set_parallel(true);
        double tp = time_seconds([&] { kernels::batch_fill(0, count, fn, parallel_out); }, 1);
        bool same = serial_out == parallel_out;
        row("moment batch 2000 (quad)", ts, tp, same);
    }

    return 0;
}
