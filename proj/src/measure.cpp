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

#include "hilmat/measure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "hilmat/kernels.hpp"

namespace hilmat {

RadialMeasure RadialMeasure::lebesgue() {
    RadialMeasure m;
    m.kind_ = Kind::Lebesgue;
    m.alpha_ = 1.0;
    m.total_mass_ = 1.0;
    return m;
}

RadialMeasure RadialMeasure::power_weight(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("power weight needs alpha > 0");
    }
    RadialMeasure m;
    m.kind_ = Kind::PowerWeight;
    m.alpha_ = alpha;
    m.total_mass_ = 1.0;
    return m;
}

RadialMeasure RadialMeasure::atomic(std::vector<std::pair<double, double>> atoms) {
    if (atoms.empty()) throw std::invalid_argument("atomic measure needs at least one atom");
    double mass = 0.0;
    for (auto& [t, w] : atoms) {
        if (!(t >= 0.0) || t >= 1.0) throw std::invalid_argument("atoms must lie in [0, 1)");
        if (!(w > 0.0)) throw std::invalid_argument("atom weights must be positive");
        mass += w;
    }
    std::sort(atoms.begin(), atoms.end());
    RadialMeasure m;
    m.kind_ = Kind::Atomic;
    m.atoms_ = std::move(atoms);
    m.total_mass_ = mass;
    return m;
}

RadialMeasure RadialMeasure::density(std::function<double(double)> weight) {
    RadialMeasure m;
    m.kind_ = Kind::Density;
    m.weight_ = std::move(weight);
    m.total_mass_ = 0.0;  // placeholder until measured below
    auto w = m.weight_;
    GradedIntegral mass = integrate_graded_toward_zero(
        [&w](double u) { return complex_t{w(1.0 - u), 0.0}; }, 1e-12);
    if (!mass.converged || !(mass.value.real() > 0.0) || !std::isfinite(mass.value.real())) {
        throw std::invalid_argument("density weight must have finite positive mass");
    }
    m.total_mass_ = mass.value.real();
    return m;
}

double RadialMeasure::support_sup() const {
    if (kind_ == Kind::Atomic) return atoms_.back().first;
    return 1.0;
}

double RadialMeasure::tail(double t) const {
    if (t <= 0.0) return total_mass_;
    if (t >= 1.0) return 0.0;
    switch (kind_) {
        case Kind::Lebesgue:
            return 1.0 - t;
        case Kind::PowerWeight:
            return std::pow(1.0 - t, alpha_);
        case Kind::Atomic: {
            double s = 0.0;
            for (const auto& [pos, w] : atoms_) {
                if (pos >= t) s += w;
            }
            return s;
        }
        case Kind::Density: {
            auto& w = weight_;
            double span = 1.0 - t;
            return span * integrate_graded_toward_zero_real(
                              [&w, t, span](double v) { return w(t + span * (1.0 - v)); }, 1e-12);
        }
    }
    return 0.0;
}

double RadialMeasure::moment(std::size_t n) const {
    switch (kind_) {
        case Kind::Lebesgue:
            return 1.0 / static_cast<double>(n + 1);
        case Kind::Atomic: {
            double s = 0.0;
            for (const auto& [pos, w] : atoms_) {
                s += w * std::pow(pos, static_cast<double>(n));
            }
            return s;
        }
        case Kind::PowerWeight:
        case Kind::Density: {
            double nn = static_cast<double>(n);
            return integrate_real([nn](double t) { return std::pow(t, nn); }, 1e-12);
        }
    }
    return 0.0;
}

GradedIntegral RadialMeasure::integrate_reported(const std::function<complex_t(double)>& g,
                                                 double rel_tol) const {
    switch (kind_) {
        case Kind::Atomic: {
            complex_t s{0.0, 0.0};
            for (const auto& [pos, w] : atoms_) s += w * g(pos);
            return {s, true, 0};
        }
        case Kind::Lebesgue:
            return integrate_graded_toward_zero([&g](double u) { return g(1.0 - u); }, rel_tol);
        case Kind::PowerWeight: {
            if (alpha_ < 1.0) {
                // u = (1-t)^alpha flattens the singular weight; u^(1/alpha) is
                // smooth at 0 because 1/alpha > 1.
                double inv_alpha = 1.0 / alpha_;
                return integrate_graded_toward_zero(
                    [&g, inv_alpha](double u) { return g(1.0 - std::pow(u, inv_alpha)); },
                    rel_tol);
            }
            // alpha >= 1: the weight alpha (1-t)^(alpha-1) is already smooth.
            double a = alpha_;
            return integrate_graded_toward_zero(
                [&g, a](double u) { return a * std::pow(u, a - 1.0) * g(1.0 - u); }, rel_tol);
        }
        case Kind::Density: {
            auto& w = weight_;
            return integrate_graded_toward_zero(
                [&g, &w](double u) { return w(1.0 - u) * g(1.0 - u); }, rel_tol);
        }
    }
    return {complex_t{0.0, 0.0}, false, 0};
}

complex_t RadialMeasure::integrate(const std::function<complex_t(double)>& g,
                                   double rel_tol) const {
    GradedIntegral res = integrate_reported(g, rel_tol);
    if (!res.converged) {
        throw ConvergenceError("measure integral did not converge", std::abs(res.value),
                               std::abs(res.value));
    }
    return res.value;
}

double RadialMeasure::integrate_real(const std::function<double(double)>& g,
                                     double rel_tol) const {
    return integrate([&g](double t) { return complex_t{g(t), 0.0}; }, rel_tol).real();
}

std::string RadialMeasure::describe() const {
    switch (kind_) {
        case Kind::Lebesgue:
            return "lebesgue";
        case Kind::PowerWeight: {
            std::ostringstream os;
            os << "power:alpha=" << alpha_;
            return os.str();
        }
        case Kind::Atomic: {
            std::ostringstream os;
            os << "atomic:";
            for (std::size_t i = 0; i < atoms_.size(); ++i) {
                if (i) os << ';';
                os << "t=" << atoms_[i].first << ",w=" << atoms_[i].second;
            }
            return os.str();
        }
        case Kind::Density:
            return "density";
    }
    return "";
}

namespace {

double parse_double_token(std::string_view token, std::string_view what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("parse_measure: bad " + std::string(what) + " '" +
                                    std::string(token) + "'");
    }
    return v;
}

}  // namespace

RadialMeasure parse_measure(std::string_view d) {
    if (d == "lebesgue") return RadialMeasure::lebesgue();
    if (d.starts_with("power:")) {
        std::string_view body = d.substr(6);
        if (!body.starts_with("alpha=")) {
            throw std::invalid_argument("parse_measure: expected power:alpha=<a>");
        }
        return RadialMeasure::power_weight(parse_double_token(body.substr(6), "alpha"));
    }
    if (d.starts_with("atomic:")) {
        std::vector<std::pair<double, double>> atoms;
        std::string_view body = d.substr(7);
        while (!body.empty()) {
            std::size_t semi = body.find(';');
            std::string_view item = semi == std::string_view::npos ? body : body.substr(0, semi);
            std::size_t comma = item.find(',');
            if (!item.starts_with("t=") || comma == std::string_view::npos ||
                item.substr(comma + 1).substr(0, 2) != "w=") {
                throw std::invalid_argument("parse_measure: expected t=<t>,w=<w> atom");
            }
            double t = parse_double_token(item.substr(2, comma - 2), "atom position");
            double w = parse_double_token(item.substr(comma + 3), "atom weight");
            atoms.emplace_back(t, w);
            if (semi == std::string_view::npos) break;
            body = body.substr(semi + 1);
        }
        return RadialMeasure::atomic(std::move(atoms));
    }
    throw std::invalid_argument("parse_measure: unknown measure '" + std::string(d) + "'");
}

double MomentSequence::at(std::size_t n) const {
    ensure(n + 1);
    std::lock_guard lock(mutex_);
    return values_[n];
}

void MomentSequence::ensure(std::size_t count) const {
    {
        std::lock_guard lock(mutex_);
        if (values_.size() >= count) return;
    }
    // Compute outside the lock; duplicated work on a race is fine, the values
    // are deterministic so late writers store identical bits.
    std::size_t begin;
    {
        std::lock_guard lock(mutex_);
        begin = values_.size();
    }
    if (begin >= count) return;
    std::vector<double> fresh(count - begin);
    const RadialMeasure& mu = *measure_;
    kernels::batch_fill(begin, fresh.size(), [&mu](std::size_t n) { return mu.moment(n); },
                        fresh);
    std::lock_guard lock(mutex_);
    if (values_.size() < count) {
        std::size_t skip = values_.size() - begin;
        values_.insert(values_.end(), fresh.begin() + static_cast<std::ptrdiff_t>(skip),
                       fresh.end());
    }
}

std::size_t MomentSequence::size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
}

std::vector<double> MomentSequence::prefix(std::size_t count) const {
    ensure(count);
    std::lock_guard lock(mutex_);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
}

SupFlag classify_sup_trace(std::span<const double> trace) {
    const std::size_t n = trace.size();
    if (n < 4) return SupFlag::Inconclusive;
    bool diverging = true;
    for (std::size_t j = n - 3; j < n; ++j) {
        if (!(trace[j] > 1.10 * trace[j - 1])) diverging = false;
    }
    if (diverging) return SupFlag::Diverging;
    if (trace[n - 1] <= 1.01 * trace[n - 4] + 1e-300) return SupFlag::Stable;
    return SupFlag::Inconclusive;
}

CarlesonResult carleson_constant(const RadialMeasure& mu, double s, const GridConfig& grid) {
    if (!(s > 0.0)) throw std::invalid_argument("carleson_constant needs s > 0");
    grid.validate();
    CarlesonResult res;
    double sup = mu.total_mass();  // t = 0 term: tail(0) / 1
    res.trace.push_back(sup);
    for (int j = 1; j <= grid.max_level; ++j) {
        double t = dyadic_radius(j);
        double value = mu.tail(t) / std::pow(1.0 - t, s);
        sup = std::max(sup, value);
        res.trace.push_back(sup);
    }
    res.constant = sup;
    res.flag = classify_sup_trace(res.trace);
    return res;
}

CarlesonIntegral carleson_integral(const RadialMeasure& mu, complex_t w, double beta, double q,
                                   double s, CarlesonTestVariant variant, double rel_tol) {
    if (!(beta > 0.0)) throw std::invalid_argument("carleson_integral needs beta > 0");
    if (!(q >= 0.0) || !(q < s)) throw std::invalid_argument("carleson_integral needs 0 <= q < s");
    double aw = std::abs(w);
    if (!(aw < 1.0)) throw std::invalid_argument("carleson_integral needs |w| < 1");
    double top = std::pow(1.0 - aw, beta);
    double expo = s + beta - q;
    auto integrand = [&](double t) -> complex_t {
        double denom_q = q == 0.0 ? 1.0 : std::pow(1.0 - t, q);
        double core = variant == CarlesonTestVariant::S1 ? 1.0 - aw * t : std::abs(1.0 - w * t);
        return complex_t{top / (denom_q * std::pow(core, expo)), 0.0};
    };
    GradedIntegral res = mu.integrate_reported(integrand, rel_tol);
    return {res.value.real(), res.converged};
}

}  // namespace hilmat
