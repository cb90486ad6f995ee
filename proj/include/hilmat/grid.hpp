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

#ifndef HILMAT_GRID_HPP
#define HILMAT_GRID_HPP

#include <stdexcept>
#include <vector>

#include "hilmat/numeric.hpp"

namespace hilmat {

/// Discretization used by every sup / limit estimate: the dyadic radial grid
/// r_j = 1 - 2^-j for j = 1..max_level, an angular starting node count, a
/// default truncation degree and the relative tolerance of adaptive rules.
struct GridConfig {
    int max_level = 16;
    std::size_t angular_nodes = 64;
    std::size_t truncation = 10000;
    double rel_tol = 1e-9;

    void validate() const {
        if (max_level < 4) throw std::invalid_argument("grid level must be >= 4");
        if (angular_nodes < 64 || angular_nodes % 2 != 0) {
            throw std::invalid_argument("angular node count must be even and >= 64");
        }
        if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
            throw std::invalid_argument("rel_tol must lie in (0, 1e-3]");
        }
    }

    std::vector<double> radii() const {
        std::vector<double> r(static_cast<std::size_t>(max_level));
        for (int j = 1; j <= max_level; ++j) r[static_cast<std::size_t>(j - 1)] = dyadic_radius(j);
        return r;
    }
};

}  // namespace hilmat

#endif  // HILMAT_GRID_HPP
