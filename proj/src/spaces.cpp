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

#include "hilmat/spaces.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hilmat/kernels.hpp"

namespace hilmat {

void SpaceSpec::validate() const {
    grid.validate();
    switch (family) {
        case SpaceFamily::Bloch:
        case SpaceFamily::Zygmund1:
            return;
        case SpaceFamily::MeanLipschitz:
            if (!(p > 1.0) || !std::isfinite(p)) {
                throw std::invalid_argument("mean Lipschitz needs p in (1, inf)");
            }
            if (!(alpha > 0.0) || alpha > 1.0) {
                throw std::invalid_argument("mean Lipschitz needs alpha in (0, 1]");
            }
            return;
        case SpaceFamily::Hardy:
        case SpaceFamily::Dirichlet:
            if (!(q > 0.0)) throw std::invalid_argument("exponent q must be positive");
            return;
        case SpaceFamily::HardyLittlewood:
            if (!(q >= 1.0)) throw std::invalid_argument("coefficient space needs q >= 1");
            return;
        case SpaceFamily::Bq:
            if (!(q > 0.0) || !(q < 1.0)) throw std::invalid_argument("Bq needs 0 < q < 1");
            return;
    }
}

std::string SpaceSpec::name() const {
    std::ostringstream os;
    switch (family) {
        case SpaceFamily::Bloch: return "bloch";
        case SpaceFamily::Zygmund1: return "zygmund1";
        case SpaceFamily::MeanLipschitz:
            os << "meanlip(p=" << p << ",alpha=" << alpha << ")";
            return os.str();
        case SpaceFamily::Hardy: os << "hardy(q=" << q << ")"; return os.str();
        case SpaceFamily::Dirichlet: os << "dirichlet(q=" << q << ")"; return os.str();
        case SpaceFamily::HardyLittlewood: os << "hl(q=" << q << ")"; return os.str();
        case SpaceFamily::Bq: os << "bq(q=" << q << ")"; return os.str();
    }
    return "";
}

namespace {

double parse_param(std::string_view body, std::string_view key) {
    std::size_t pos = body.find(key);
    if (pos == std::string_view::npos) {
        throw std::invalid_argument("space descriptor missing '" + std::string(key) + "'");
    }
    std::string token(body.substr(pos + key.size()));
    if (std::size_t comma = token.find(','); comma != std::string::npos) token.resize(comma);
    try {
        return std::stod(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("space descriptor: bad number '" + token + "'");
    }
}

}  // namespace

SpaceSpec SpaceSpec::parse(std::string_view d, GridConfig grid) {
    SpaceSpec spec;
    spec.grid = grid;
    if (d == "bloch") {
        spec.family = SpaceFamily::Bloch;
    } else if (d == "zygmund1") {
        spec.family = SpaceFamily::Zygmund1;
    } else if (d.starts_with("meanlip:")) {
        spec.family = SpaceFamily::MeanLipschitz;
        std::string_view body = d.substr(8);
        spec.p = parse_param(body, "p=");
        spec.alpha = body.find("alpha=") != std::string_view::npos ? parse_param(body, "alpha=")
                                                                   : 1.0 / spec.p;
    } else if (d.starts_with("hardy:")) {
        spec.family = SpaceFamily::Hardy;
        spec.q = parse_param(d.substr(6), "q=");
    } else if (d.starts_with("dirichlet:")) {
        spec.family = SpaceFamily::Dirichlet;
        spec.q = parse_param(d.substr(10), "q=");
    } else if (d.starts_with("hl:")) {
        spec.family = SpaceFamily::HardyLittlewood;
        spec.q = parse_param(d.substr(3), "q=");
    } else if (d.starts_with("bq:")) {
        spec.family = SpaceFamily::Bq;
        spec.q = parse_param(d.substr(3), "q=");
    } else {
        throw std::invalid_argument("unknown space '" + std::string(d) + "'");
    }
    spec.validate();
    return spec;
}

namespace {

// A weighted circle mean is trusted only while the truncation tail stays
// below 1% of the computed mean; deeper grid levels are strictly worse.
constexpr double kReliableFraction = 1e-2;

struct SupSweep {
    double sup = 0.0;
    double attained = 0.0;
    std::vector<double> trace;
    bool converged = false;
    bool unbounded = false;
};

void classify_sweep(SupSweep& s) {
    const std::size_t n = s.trace.size();
    if (n >= 4) {
        bool growing = true;
        for (std::size_t j = n - 3; j < n; ++j) {
            if (!(s.trace[j] > 1.10 * s.trace[j - 1])) growing = false;
        }
        if (growing) {
            s.unbounded = true;
            return;
        }
    }
    // converged once the deepest refinement moved the sup by < 1%
    if (n >= 4 && s.trace[n - 1] <= 1.01 * s.trace[n - 2] + 1e-300) {
        s.converged = true;
    }
}

SupSweep weighted_sup_sweep(const TaylorSeries& g, double p, const GridConfig& grid,
                            const std::function<double(double)>& weight) {
    SupSweep out;
    CircleMeanSpec spec{p, grid.angular_nodes};
    for (int j = 0; j <= grid.max_level; ++j) {
        double r = j == 0 ? 0.0 : dyadic_radius(j);
        double mean = integral_mean(g, r, spec, grid.rel_tol);
        if (j > 0 &&
            !(mean_tail_bound(g, r, p) <= kReliableFraction * std::max(mean, 1e-300))) {
            break;
        }
        double term = weight(r) * mean;
        if (term >= out.sup) {
            out.sup = term;
            out.attained = r;
        }
        out.trace.push_back(out.sup);
    }
    classify_sweep(out);
    return out;
}

NormResult sup_norm_result(double base, const SupSweep& sweep) {
    NormResult res;
    res.value = base + sweep.sup;
    res.attained_at = sweep.attained;
    res.converged = sweep.converged;
    res.unbounded = sweep.unbounded;
    res.trace = sweep.trace;
    return res;
}

// Cumulative radial integral over dyadic cells with a convergence verdict
// from the increment decay: converged once the geometric projection of the
// remaining increments is negligible, unbounded when increments stop decaying.
struct RadialIntegral {
    double total = 0.0;
    bool converged = false;
    bool unbounded = false;
    std::vector<double> trace;
};

RadialIntegral dirichlet_area_integral(const TaylorSeries& df, double q,
                                       const GridConfig& grid) {
    RadialIntegral acc;
    const GaussRule& rule = gauss_rule_16();
    CircleMeanSpec spec{q, grid.angular_nodes};

    double mean_scale = 0.0;
    auto gauss_cell = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        double cell = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double r = mid + half * rule.nodes[i];
            double m = integral_mean(df, r, spec, grid.rel_tol);
            mean_scale = std::max(mean_scale, m);
            cell += rule.weights[i] * 2.0 * M_PI * r * std::pow(1.0 - r, q - 1.0) *
                    std::pow(m, q);
        }
        return cell * half;
    };

    std::vector<double> increments;
    bool trimmed = false;
    int completed = 0;
    for (int j = 0; j < grid.max_level; ++j) {
        double lo = j == 0 ? 0.0 : dyadic_radius(j);
        double hi = dyadic_radius(j + 1);
        if (j > 0 &&
            !(mean_tail_bound(df, hi, q) <= kReliableFraction * std::max(mean_scale, 1e-300))) {
            trimmed = true;
            break;
        }
        double cell = gauss_cell(lo, hi);
        acc.total += cell;
        increments.push_back(cell);
        acc.trace.push_back(acc.total);
        ++completed;
        if (increments.size() >= 2) {
            double prev = increments[increments.size() - 2];
            double rho = increments.back() / std::max(prev, 1e-300);
            bool growing = increments.back() >= prev &&
                           increments.back() >= 0.01 * std::max(acc.total, 1e-300);
            if (growing && increments.size() >= 3 &&
                increments[increments.size() - 2] >= increments[increments.size() - 3]) {
                acc.unbounded = true;
                return acc;
            }
            if (rho < 0.9 &&
                increments.back() * rho / (1.0 - rho) <=
                    grid.rel_tol * std::max(acc.total, 1e-300)) {
                acc.converged = true;
                return acc;
            }
        }
    }
    bool closed = false;
    if (!trimmed && completed == grid.max_level && df.tail().exact()) {
        // Closing cell [r_max, 1): interior Gauss nodes only, valid because an
        // exact polynomial stays trustworthy up to the boundary. It completes
        // the tail, so it does not count as a refinement increment.
        double cell = gauss_cell(dyadic_radius(grid.max_level), 1.0);
        acc.total += cell;
        acc.trace.push_back(acc.total);
        closed = true;
    }
    // Finiteness-grade verdict from the decay of the regular increments.
    if (increments.size() >= 2) {
        double prev = increments[increments.size() - 2];
        double rho = increments.back() / std::max(prev, 1e-300);
        if (increments.back() == 0.0) {
            acc.converged = true;
        } else if (rho < 0.9) {
            double projected = increments.back() * rho / (1.0 - rho);
            acc.converged = closed || projected <= 1e-3 * std::max(acc.total, 1e-300);
        }
    } else if (acc.total == 0.0) {
        acc.converged = true;
    }
    return acc;
}

// Bq radial integral: exact integration of the weight (1-r)^c against a
// piecewise-linear interpolant of M_1 on the (subdivided) dyadic grid. This
// keeps the endpoint weight singularity out of the numerical error budget.
double bq_weight_cell(double r_lo, double r_hi, double m_lo, double m_hi, double c) {
    double u_lo = 1.0 - r_hi;  // orientation flips: u = 1 - r
    double u_hi = 1.0 - r_lo;
    double slope = (m_lo - m_hi) / (u_hi - u_lo);  // M as a linear function of u
    double intercept = m_hi - slope * u_lo;
    double p1 = (std::pow(u_hi, c + 1.0) - std::pow(u_lo, c + 1.0)) / (c + 1.0);
    double p2 = (std::pow(u_hi, c + 2.0) - std::pow(u_lo, c + 2.0)) / (c + 2.0);
    return intercept * p1 + slope * p2;
}

RadialIntegral bq_radial_integral(const TaylorSeries& f, double q, const GridConfig& grid) {
    const double c = 1.0 / q - 2.0;
    CircleMeanSpec spec{1.0, grid.angular_nodes};
    RadialIntegral acc;

    // The subdivision grids are nested, so memoize M_1 by radius.
    std::map<double, double> mean_cache;
    auto mean_at = [&](double r) {
        auto it = mean_cache.find(r);
        if (it != mean_cache.end()) return it->second;
        double m = integral_mean(f, r, spec, grid.rel_tol);
        mean_cache.emplace(r, m);
        return m;
    };

    // Reliability-trimmed dyadic levels.
    std::vector<double> levels{0.0};
    for (int j = 1; j <= grid.max_level; ++j) {
        double r = dyadic_radius(j);
        double m = mean_at(r);
        if (!(mean_tail_bound(f, r, 1.0) <= kReliableFraction * std::max(m, 1e-300))) break;
        levels.push_back(r);
    }

    const double refine_tol = std::max(grid.rel_tol, 1e-10);
    double prev_total = -1.0;
    for (int subdiv = 1; subdiv <= 16; subdiv <<= 1) {
        std::vector<double> pts;
        for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
            for (int s = 0; s < subdiv; ++s) {
                pts.push_back(levels[i] +
                              (levels[i + 1] - levels[i]) * static_cast<double>(s) / subdiv);
            }
        }
        pts.push_back(levels.back());
        double total = 0.0;
        double m_prev = mean_at(pts[0]);
        double m_last = m_prev;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double m_cur = mean_at(pts[i]);
            total += bq_weight_cell(pts[i - 1], pts[i], m_prev, m_cur, c);
            m_prev = m_cur;
            m_last = m_cur;
        }
        // Remaining fragment [r_max, 1) with M_1 frozen at the last level.
        double u_last = 1.0 - pts.back();
        total += m_last * std::pow(u_last, c + 1.0) / (c + 1.0);
        acc.trace.push_back(total);
        if (prev_total >= 0.0 &&
            std::abs(total - prev_total) <= refine_tol * std::max(std::abs(total), 1e-300)) {
            acc.total = total;
            acc.converged = true;
            return acc;
        }
        prev_total = total;
        acc.total = total;
    }
    // Subdivision alone stalled; report the last estimate as converged only if
    // the trailing fragment is already negligible.
    double frag = acc.trace.size() >= 2
                      ? std::abs(acc.trace.back() - acc.trace[acc.trace.size() - 2])
                      : acc.total;
    acc.converged = frag <= 1e-3 * std::max(acc.total, 1e-300);
    return acc;
}

NormResult hardy_littlewood_norm(const TaylorSeries& f, double q) {
    NormResult res;
    auto coeffs = f.coeffs();
    double total = 0.0;
    double block = 0.0;
    std::vector<double> complete_blocks;  // trailing partial block excluded
    std::size_t block_end = 1;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n == block_end) {
            complete_blocks.push_back(block);
            res.trace.push_back(std::pow(total, 1.0 / q));
            block = 0.0;
            block_end <<= 1;
        }
        double s = std::pow(static_cast<double>(n + 1), q - 2.0) * std::pow(std::abs(coeffs[n]), q);
        block += s;
        total += s;
    }
    if (coeffs.size() == block_end) complete_blocks.push_back(block);
    res.value = std::pow(total, 1.0 / q);
    res.trace.push_back(res.value);

    // Verdict from the decay of whole dyadic blocks of the coefficient sums.
    std::size_t nb = complete_blocks.size();
    if (nb >= 3) {
        double last = complete_blocks[nb - 1];
        double prev = complete_blocks[nb - 2];
        if (last == 0.0) {
            res.converged = true;
        } else if (prev > 0.0 && last / prev < 0.9 &&
                   last * (last / prev) / (1.0 - last / prev) <=
                       1e-3 * std::max(total, 1e-300)) {
            res.converged = true;
        } else if (last >= 0.01 * std::max(total, 1e-300) && last >= 0.99 * prev) {
            res.unbounded = true;
        }
    } else {
        res.converged = true;  // a short exact sum
    }
    return res;
}

}  // namespace

NormResult space_norm(const TaylorSeries& f, const SpaceSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case SpaceFamily::Bloch: {
            TaylorSeries df = differentiate(f, 1);
            auto sweep = weighted_sup_sweep(
                df, std::numeric_limits<double>::infinity(), spec.grid,
                [](double r) { return 1.0 - r * r; });
            return sup_norm_result(std::abs(f.coeff(0)), sweep);
        }
        case SpaceFamily::Zygmund1: {
            TaylorSeries ddf = differentiate(f, 2);
            auto sweep = weighted_sup_sweep(ddf, 1.0, spec.grid,
                                            [](double r) { return 1.0 - r * r; });
            return sup_norm_result(std::abs(f.coeff(0)) + std::abs(f.coeff(1)), sweep);
        }
        case SpaceFamily::MeanLipschitz: {
            TaylorSeries df = differentiate(f, 1);
            double expo = 1.0 - spec.alpha;
            auto sweep = weighted_sup_sweep(df, spec.p, spec.grid, [expo](double r) {
                return std::pow(1.0 - r * r, expo);
            });
            return sup_norm_result(std::abs(f.coeff(0)), sweep);
        }
        case SpaceFamily::Hardy: {
            auto sweep = weighted_sup_sweep(f, spec.q, spec.grid, [](double) { return 1.0; });
            return sup_norm_result(0.0, sweep);
        }
        case SpaceFamily::Dirichlet: {
            TaylorSeries df = differentiate(f, 1);
            RadialIntegral area = dirichlet_area_integral(df, spec.q, spec.grid);
            NormResult res;
            res.value = std::pow(std::pow(std::abs(f.coeff(0)), spec.q) + area.total,
                                 1.0 / spec.q);
            res.converged = area.converged;
            res.unbounded = area.unbounded;
            res.trace = area.trace;
            return res;
        }
        case SpaceFamily::HardyLittlewood:
            return hardy_littlewood_norm(f, spec.q);
        case SpaceFamily::Bq: {
            RadialIntegral radial = bq_radial_integral(f, spec.q, spec.grid);
            NormResult res;
            res.value = radial.total;
            res.converged = radial.converged;
            res.unbounded = radial.unbounded;
            res.trace = radial.trace;
            return res;
        }
    }
    throw std::logic_error("unreachable space family");
}

KernelMean circle_kernel_mean(complex_t z, double c, double rel_tol, std::size_t start_nodes) {
    double r = std::abs(z);  // rotation invariant
    if (!(r < 1.0)) throw std::domain_error("circle_kernel_mean needs |z| < 1");
    const double expo = -(1.0 + c) / 2.0;
    // |1 - r e^{i theta}|^2 = (1-r)^2 + 4 r sin^2(theta/2), the cancellation-
    // free form near the peak. The integrand is even in theta, so sample half
    // the circle with doubled interior weights.
    auto level_sum = [r, expo](std::size_t nodes) {
        const std::size_t half = nodes / 2;
        const double base = (1.0 - r) * (1.0 - r);
        double acc = 0.0, carry = 0.0;  // compensated: the peak spans 2^48
        for (std::size_t k = 0; k <= half; ++k) {
            double s = std::sin(M_PI * static_cast<double>(k) / static_cast<double>(nodes));
            double sq = base + 4.0 * r * s * s;
            double term = std::pow(sq, expo);
            if (k != 0 && k != half) term *= 2.0;
            term -= carry;
            double next = acc + term;
            carry = (next - acc) - term;
            acc = next;
        }
        return acc / static_cast<double>(nodes);
    };
    std::size_t nodes = 64;
    while (nodes < start_nodes) nodes <<= 1;
    double prev = std::numeric_limits<double>::quiet_NaN();
    const std::size_t cap = std::size_t{1} << 24;
    while (nodes <= cap) {
        double est = level_sum(nodes);
        if (!std::isnan(prev) && std::abs(est - prev) <= rel_tol * std::max(est, 1e-300)) {
            return {est, true};
        }
        prev = est;
        nodes <<= 1;
    }
    return {prev, false};
}

LqCriterion lq_moment_criterion(const MomentSequence& moments, double q, std::size_t cutoff) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_moment_criterion needs q >= 1");
    LqCriterion out;

    // Sum whole dyadic blocks [2^(m-1), 2^m) so the tail model always looks at
    // two complete blocks; the effective cutoff rounds down to a boundary.
    std::size_t end = 1;
    while (end * 2 <= cutoff + 1) end *= 2;

    auto summand = [&moments, q](std::size_t n) {
        return std::pow(static_cast<double>(n + 1), q - 2.0) * std::pow(moments.at(n), q);
    };

    double total = 0.0;
    std::vector<double> block_sums;
    std::size_t block_begin = 0;
    std::size_t block_stop = 1;
    std::size_t ensured = 0;
    while (block_stop <= end) {
        if (block_stop > ensured) {
            // Extend the cache in doubling chunks so the batch fill can run in
            // parallel while early stopping still pays off.
            ensured = std::max<std::size_t>(std::min(end, 2 * block_stop), 1024);
            moments.ensure(std::min(ensured, end) + 1);
        }
        double block = 0.0;
        for (std::size_t n = block_begin; n < block_stop; ++n) block += summand(n);
        total += block;
        block_sums.push_back(block);
        out.block_trace.push_back(total);
        out.cutoff_used = block_stop - 1;
        block_begin = block_stop;
        block_stop *= 2;
        // Deterministic early stop once a whole block cannot move the total.
        if (block < 1e-18 * std::max(total, 1e-300) && total > 0.0) break;
    }
    out.partial = total;
    out.tail_uncertainty = summand(out.cutoff_used + 1);

    // Geometric extrapolation of the dyadic block sums.
    if (block_sums.size() >= 2) {
        double last = block_sums[block_sums.size() - 1];
        double prev = block_sums[block_sums.size() - 2];
        if (prev > 0.0 && last > 0.0 && last / prev < 0.95) {
            double rho = last / prev;
            out.tail_model = last * rho / (1.0 - rho);
        }
    }
    out.value = out.partial + out.tail_model;

    if (out.tail_uncertainty < 1e-12) {
        out.verdict = SummabilityVerdict::Finite;
    } else if (block_sums.size() >= 2) {
        double last = block_sums.back();
        double before = total - last;
        if (before > 0.0 && last > 0.01 * before) {
            out.verdict = SummabilityVerdict::Divergent;
        }
    }
    return out;
}

BlockEquivalence block_equivalence(std::span<const double> lambda, double p, double beta,
                                   double rel_tol) {
    if (!(p > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("block_equivalence needs p, beta > 0");
    }
    for (double v : lambda) {
        if (!(v >= 0.0)) throw std::invalid_argument("block_equivalence needs lambda_n >= 0");
    }
    BlockEquivalence out;
    const double pb = p * beta;

    // lhs with the weight substituted away: u = 1-r, v = u^(p beta).
    auto poly_at = [&lambda](double r) {
        double acc = 0.0;
        for (std::size_t i = lambda.size(); i-- > 0;) acc = acc * r + lambda[i];
        return acc;
    };
    out.lhs = (1.0 / pb) *
              integrate_graded_toward_zero_real(
                  [&poly_at, p, pb](double v) {
                      double r = 1.0 - std::pow(v, 1.0 / pb);
                      return std::pow(poly_at(r), p);
                  },
                  rel_tol);

    double rhs = 0.0;
    std::size_t block_start = 0;
    std::size_t block_end = 1;
    int block_index = 0;
    while (block_start < lambda.size()) {
        double s = 0.0;
        for (std::size_t k = block_start; k < std::min(block_end, lambda.size()); ++k) {
            s += lambda[k];
        }
        rhs += std::pow(2.0, -static_cast<double>(block_index) * pb) * std::pow(s, p);
        block_start = block_end;
        block_end <<= 1;
        ++block_index;
    }
    out.rhs = rhs;
    return out;
}

}  // namespace hilmat
