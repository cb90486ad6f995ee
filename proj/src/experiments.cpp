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

#include "hilmat/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hilmat/hankel.hpp"
#include "hilmat/kernels.hpp"
#include "hilmat/series.hpp"

namespace hilmat {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kLowerNormBound = 1.5 + 2.0 / M_PI;  // 2.13661977...
constexpr double kUpperNormBound = 1.5 + 4.0 / M_PI;  // 2.77323954...

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "";
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void add_verdict(Report& rep, std::string name, bool ok, std::string detail = "") {
    rep.verdicts.push_back(
        {std::move(name), ok ? VerdictStatus::Pass : VerdictStatus::Fail, std::move(detail)});
}

void add_ternary_verdict(Report& rep, std::string name, VerdictStatus status,
                         std::string detail = "") {
    rep.verdicts.push_back({std::move(name), status, std::move(detail)});
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// Closed-form curves behind the norm brackets.
// ---------------------------------------------------------------------------

// F(r) = 1 - ((1-r)/r^3) (log(1/(1-r)) - r - r^2/2); (1+r)F(r) increases to 2.
double lower_curve(double r) {
    double log_term = -std::log1p(-r);
    return (1.0 + r) * (1.0 - (1.0 - r) / (r * r * r) * (log_term - r - 0.5 * r * r));
}

// psi(r) = r^2/2 - 3r + (3 - 2r) log(1/(1-r)), positive on (0, 1).
double psi_curve(double r) {
    double log_term = -std::log1p(-r);
    return 0.5 * r * r - 3.0 * r + (3.0 - 2.0 * r) * log_term;
}

// G(x) = (1+x) Int_0^1 (1-s)/(1-xs) ds, in the cancellation-free form
// (1+x)(x - (1-x) log(1/(1-x))) / x^2; series fallback near 0.
double bloch_curve(double x) {
    if (x < 0.25) {
        double sum = 0.0;
        double pw = 1.0;
        for (int n = 0; n < 64; ++n) {
            sum += pw / ((n + 1.0) * (n + 2.0));
            pw *= x;
            if (pw < 1e-20) break;
        }
        return (1.0 + x) * sum;
    }
    double log_term = -std::log1p(-x);
    return (1.0 + x) * (x - (1.0 - x) * log_term) / (x * x);
}

// sum (n+2)/(n+3) r^n = 1/(1-r) - (log(1/(1-r)) - r - r^2/2) / r^3.
double fejer_series_closed(double r) {
    double log_term = -std::log1p(-r);
    return 1.0 / (1.0 - r) - (log_term - r - 0.5 * r * r) / (r * r * r);
}

// sum (n+1)/(n+3/2) r^(2n) = 1/(1-r^2) - (atanh(r) - r) / r^3.
double upper_series_closed(double r) {
    return 1.0 / (1.0 - r * r) - (std::atanh(r) - r) / (r * r * r);
}

// Mean of |1 - x e^{i theta}|^{-3} through the complete elliptic integral:
// the angular direction of the disk integral is integrated exactly. The
// quadrature route circle_kernel_mean stays the cross-check.
double kernel_mean_3_elliptic(double x) {
    if (x == 0.0) return 1.0;
    double a2 = (1.0 - x) * (1.0 - x);
    double b = 1.0 + x;
    double k = std::sqrt(4.0 * x) / b;
    return (2.0 / M_PI) * std::comp_ellint_2(k) / (a2 * b);
}

// ---------------------------------------------------------------------------
// Operator images as coefficient series with honest tail laws.
// ---------------------------------------------------------------------------

bool cheap_moments(const RadialMeasure& mu) {
    return mu.kind() == RadialMeasure::Kind::Lebesgue ||
           mu.kind() == RadialMeasure::Kind::Atomic;
}

// H_mu(z^k) truncated at `degree`; moments are nonincreasing, which gives the
// dropped coefficients the bound mu_{degree+k+1}.
TaylorSeries monomial_image(const MomentSequence& moments, std::size_t k, std::size_t degree) {
    std::vector<double> mom = moments.prefix(degree + k + 2);
    std::vector<complex_t> coeffs(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
        coeffs[n] = complex_t{mom[n + k], 0.0};
    }
    return TaylorSeries(std::move(coeffs), std::nullopt, TailLaw{mom[degree + k + 1], 0});
}

struct AdaptiveMean {
    double value = 0.0;
    bool reliable = false;
    std::size_t degree = 0;
};

// M_p(r, d^order/dz^order H_mu(1)) with the truncation degree grown until the
// tail bound falls under 1% of the computed mean.
AdaptiveMean image_mean(const MomentSequence& moments, unsigned order, double p, double r,
                        std::size_t max_degree, const GridConfig& grid) {
    std::size_t start = std::max<std::size_t>(
        1024, static_cast<std::size_t>(48.0 / std::max(1.0 - r, 1e-9)));
    std::size_t degree = std::min(start, max_degree);
    while (true) {
        TaylorSeries g = differentiate(monomial_image(moments, 0, degree), order);
        double mean = integral_mean(g, r, {p, grid.angular_nodes}, grid.rel_tol);
        double tail = mean_tail_bound(g, r, p);
        if (tail <= 1e-2 * std::max(mean, 1e-300)) return {mean, true, degree};
        if (degree >= max_degree) return {mean, false, degree};
        degree = std::min(max_degree, degree * 4);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing.
// ---------------------------------------------------------------------------

bool Report::passed() const {
    for (const Verdict& v : verdicts) {
        if (v.status != VerdictStatus::Pass) return false;
    }
    for (const Computed& c : computed) {
        if (!c.converged) return false;
    }
    return true;
}

namespace {

ordered_json report_to_json_obj(const Report& rep) {
    ordered_json j;
    j["id"] = rep.id;
    j["targets"] = ordered_json::array();
    for (const Target& t : rep.targets) {
        j["targets"].push_back({{"name", t.name},
                                {"value", t.value},
                                {"provenance", t.provenance},
                                {"tolerance", t.tolerance}});
    }
    j["computed"] = ordered_json::array();
    for (const Computed& c : rep.computed) {
        j["computed"].push_back({{"name", c.name},
                                 {"value", c.value},
                                 {"trace", c.trace},
                                 {"converged", c.converged}});
    }
    j["verdicts"] = ordered_json::array();
    for (const Verdict& v : rep.verdicts) {
        j["verdicts"].push_back(
            {{"name", v.name}, {"status", status_name(v.status)}, {"detail", v.detail}});
    }
    j["pass"] = rep.passed();
    j["wall_time_s"] = rep.wall_time_s;
    return j;
}

}  // namespace

std::string Report::to_json(int indent) const { return report_to_json_obj(*this).dump(indent); }

std::string Report::to_csv() const {
    std::ostringstream os;
    os.precision(15);
    for (const Target& t : targets) {
        os << id << ",target," << t.name << ",0," << t.value << "," << t.provenance << "\n";
    }
    for (const Computed& c : computed) {
        os << id << ",computed," << c.name << ",0," << c.value << ","
           << (c.converged ? "converged" : "unconverged") << "\n";
        for (std::size_t i = 0; i < c.trace.size(); ++i) {
            os << id << ",trace," << c.name << "," << i << "," << c.trace[i] << ",\n";
        }
    }
    for (const Verdict& v : verdicts) {
        os << id << ",verdict," << v.name << ",0,"
           << (v.status == VerdictStatus::Pass ? 1 : 0) << "," << status_name(v.status) << "\n";
    }
    return os.str();
}

std::string reports_to_json(const std::vector<Report>& reports, int indent) {
    ordered_json j;
    j["reports"] = ordered_json::array();
    bool verdicts_ok = true;
    bool converged_ok = true;
    for (const Report& r : reports) {
        j["reports"].push_back(report_to_json_obj(r));
        for (const Verdict& v : r.verdicts) {
            verdicts_ok = verdicts_ok && v.status == VerdictStatus::Pass;
        }
        converged_ok = converged_ok && r.passed();
    }
    // Exit-code contract: every verdict passes. Divergence witnesses keep
    // their reports honest about non-stabilizing traces via "all_converged".
    j["all_pass"] = verdicts_ok;
    j["all_converged"] = converged_ok;
    return j.dump(indent);
}

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::string out = "id,kind,name,index,value,extra\n";
    for (const Report& r : reports) out += r.to_csv();
    return out;
}

std::vector<RadialMeasure> bundled_measures() {
    std::vector<RadialMeasure> family;
    family.push_back(RadialMeasure::lebesgue());
    family.push_back(RadialMeasure::power_weight(0.5));
    family.push_back(RadialMeasure::power_weight(2.0));
    family.push_back(RadialMeasure::atomic({{0.5, 1.0}}));
    family.push_back(RadialMeasure::atomic({{0.3, 2.0}, {0.8, 1.0}}));
    return family;
}

// ---------------------------------------------------------------------------
// thm1.1 - Carleson dichotomy.
// ---------------------------------------------------------------------------

Report run_carleson_dichotomy(const std::vector<RadialMeasure>& family, const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "thm1.1";
    GridConfig tail_grid = grid;
    tail_grid.max_level = std::max(grid.max_level, 20);

    for (const RadialMeasure& mu : family) {
        const std::string tag = mu.describe();
        CarlesonResult carleson = carleson_constant(mu, 1.0, tail_grid);
        rep.computed.push_back({"carleson_sup[" + tag + "]", carleson.constant, carleson.trace,
                                carleson.flag != SupFlag::Inconclusive});

        HankelOperator op(mu);
        // Weighted circle means of the second derivative of the image of 1.
        const int sweep_levels =
            std::min(grid.max_level, cheap_moments(mu) ? grid.max_level : 10);
        const std::size_t max_degree = cheap_moments(mu) ? (std::size_t{1} << 22)
                                                         : (std::size_t{1} << 17);
        std::vector<double> sup_trace;
        std::vector<double> means;
        std::vector<double> radii;
        double sup = 0.0;
        for (int j = 0; j <= sweep_levels; ++j) {
            double r = j == 0 ? 0.0 : dyadic_radius(j);
            AdaptiveMean m = image_mean(op.moments(), 2, 1.0, r, max_degree, grid);
            if (!m.reliable) break;
            sup = std::max(sup, (1.0 - r * r) * m.value);
            sup_trace.push_back(sup);
            means.push_back(m.value);
            radii.push_back(r);
        }
        SupFlag mean_flag = classify_sup_trace(sup_trace);
        rep.computed.push_back({"zygmund_sup[" + tag + "]", sup, sup_trace,
                                mean_flag != SupFlag::Inconclusive});

        // The sweep evaluates the second derivative of the image of 1 through
        // its coefficient series; pin that to the kernel-integral route at a
        // few points so the substitution is checked per measure, not assumed.
        {
            TaylorSeries d2 = differentiate(monomial_image(op.moments(), 0, 4096), 2);
            TaylorSeries one({complex_t{1.0, 0.0}});
            bool routes_agree = true;
            for (double theta : {0.0, 2.0}) {
                complex_t z = 0.75 * complex_t{std::cos(theta), std::sin(theta)};
                complex_t a = eval(d2, z);
                complex_t b = op.derivative_kernel(one, z, 2, 1e-12);
                if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(b))) routes_agree = false;
            }
            add_verdict(rep, "derivative_route_agreement[" + tag + "]", routes_agree);
        }

        bool agree = (carleson.flag == SupFlag::Stable && mean_flag == SupFlag::Stable) ||
                     (carleson.flag == SupFlag::Diverging && mean_flag == SupFlag::Diverging);
        VerdictStatus status =
            (carleson.flag == SupFlag::Inconclusive || mean_flag == SupFlag::Inconclusive)
                ? VerdictStatus::Inconclusive
                : (agree ? VerdictStatus::Pass : VerdictStatus::Fail);
        add_ternary_verdict(rep, "dichotomy[" + tag + "]", status,
                            "carleson=" + std::to_string(static_cast<int>(carleson.flag)) +
                                " mean=" + std::to_string(static_cast<int>(mean_flag)));

        // Lower-bound chain: M_1(r, ...) >= (1/pi) Int (t/r)((1-tr)^-2 - 1) dmu.
        bool chain_ok = true;
        for (std::size_t i = 1; i < radii.size(); ++i) {
            double r = radii[i];
            double bound =
                (1.0 / M_PI) *
                mu.integrate_real(
                    [r](double t) {
                        double d = 1.0 - t * r;
                        return (t / r) * (1.0 / (d * d) - 1.0);
                    },
                    1e-9);
            if (!(means[i] >= bound * (1.0 - 1e-7) - 1e-6)) chain_ok = false;
        }
        add_verdict(rep, "lower_chain[" + tag + "]", chain_ok);
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// thm1.2 - the Zygmund-type norm bracket.
// ---------------------------------------------------------------------------

Report run_zygmund_bracket(const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "thm1.2";
    rep.targets.push_back({"norm_lower", kLowerNormBound, "literature", 1e-2});
    rep.targets.push_back({"norm_upper", kUpperNormBound, "literature", 1e-2});
    rep.targets.push_back({"lower_curve_limit", 2.0, "literature", 1e-3});

    // Norm of the image of 1 in the Zygmund-type space, from the truncated
    // coefficient series 1/(n+1).
    std::ostringstream hd;
    hd << "hlog:N=" << grid.truncation;
    TaylorSeries h1 = make_function(hd.str());
    SpaceSpec zyg;
    zyg.family = SpaceFamily::Zygmund1;
    zyg.grid = grid;
    NormResult norm = space_norm(h1, zyg);
    rep.computed.push_back({"zygmund_norm_image_of_1", norm.value, norm.trace, norm.converged});
    {
        bool in_bracket =
            norm.value >= kLowerNormBound - 1e-2 && norm.value <= kUpperNormBound + 1e-2;
        VerdictStatus status = !norm.converged
                                   ? (in_bracket ? VerdictStatus::Pass
                                                 : VerdictStatus::Inconclusive)
                                   : (in_bracket ? VerdictStatus::Pass : VerdictStatus::Fail);
        add_ternary_verdict(rep, "norm_in_bracket", status, fmt(norm.value));
    }

    // Closed-form lower-bound curve: monotone on the grid, >= 1.999 at j=20.
    bool monotone = true;
    std::vector<double> curve;
    for (int j = 1; j <= 20; ++j) {
        curve.push_back(lower_curve(dyadic_radius(j)));
        if (j > 1 && !(curve.back() > curve[curve.size() - 2])) monotone = false;
    }
    rep.computed.push_back({"lower_curve_at_j20", curve.back(), curve, true});
    add_verdict(rep, "lower_curve_monotone", monotone);
    add_verdict(rep, "lower_curve_at_j20_ge_1.999", curve.back() >= 1.999, fmt(curve.back()));

    // psi > 0 on the grid (the derivative-sign argument behind monotonicity).
    bool psi_ok = true;
    for (int j = 1; j <= 20; ++j) {
        if (!(psi_curve(dyadic_radius(j)) > 0.0)) psi_ok = false;
    }
    add_verdict(rep, "psi_positive_on_grid", psi_ok);

    // Fejer-Riesz lower bound at every grid radius up to level 16.
    HankelOperator op(RadialMeasure::lebesgue());
    const int fr_levels = std::min(grid.max_level, 16);
    bool fr_ok = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<double> margins;
    for (int j = 1; j <= fr_levels; ++j) {
        double r = dyadic_radius(j);
        AdaptiveMean m = image_mean(op.moments(), 2, 1.0, r, std::size_t{1} << 22, grid);
        if (!m.reliable) {
            fr_ok = false;
            break;
        }
        double bound = fejer_series_closed(r) / M_PI;
        double margin = m.value - bound;
        margins.push_back(margin);
        worst_margin = std::min(worst_margin, margin);
        if (!(m.value >= bound - 1e-6)) fr_ok = false;
    }
    rep.computed.push_back({"fejer_riesz_worst_margin", worst_margin, margins, true});
    add_verdict(rep, "fejer_riesz_lower_bound", fr_ok, fmt(worst_margin));

    // Series identity behind the upper bound, asserted numerically.
    bool series_ok = true;
    double worst_dev = 0.0;
    for (int j = 1; j <= 12; ++j) {
        double r = dyadic_radius(j);
        double closed = upper_series_closed(r);
        double direct = 0.0;
        double r2n = 1.0;
        const double r2 = r * r;
        for (std::size_t n = 0; n < (std::size_t{1} << 24); ++n) {
            double term = (n + 1.0) / (n + 1.5) * r2n;
            direct += term;
            r2n *= r2;
            if (term < 1e-17 * direct) break;
        }
        double dev = std::abs(direct - closed) / closed;
        worst_dev = std::max(worst_dev, dev);
        if (dev > 1e-9) series_ok = false;
    }
    add_verdict(rep, "upper_series_identity", series_ok, fmt(worst_dev));

    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// thm1.3 - the exact Bloch norm 3.
// ---------------------------------------------------------------------------

Report run_bloch_norm(const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "thm1.3";
    rep.targets.push_back({"operator_norm", 3.0, "literature", 0.005});
    rep.targets.push_back({"curve_limit", 2.0, "literature", 0.005});

    // 1 + G on the dyadic grid up to level 24; the sup approaches 3.
    std::vector<double> curve;
    bool monotone = true;
    for (int j = 1; j <= 24; ++j) {
        curve.push_back(1.0 + bloch_curve(dyadic_radius(j)));
        if (j > 1 && !(curve.back() > curve[curve.size() - 2])) monotone = false;
    }
    rep.computed.push_back({"one_plus_G_at_j24", curve.back(), curve, true});
    add_verdict(rep, "curve_monotone_on_grid", monotone);
    add_verdict(rep, "one_plus_G_at_j24_ge_2.995", curve.back() >= 2.995, fmt(curve.back()));

    // Closed form against direct graded quadrature of (1+x) Int (1-s)/(1-xs) ds.
    bool quad_ok = true;
    double worst = 0.0;
    for (int j : {2, 8, 14, 20, 24}) {
        double x = dyadic_radius(j);
        double quad =
            (1.0 + x) *
            integrate_graded_toward_zero_real(
                [x](double u) { return u / (1.0 - x * (1.0 - u)); }, 1e-12, 44);
        double dev = std::abs(quad - bloch_curve(x)) / bloch_curve(x);
        worst = std::max(worst, dev);
        if (dev > 1e-9) quad_ok = false;
    }
    add_verdict(rep, "curve_quadrature_crosscheck", quad_ok, fmt(worst));

    // Bloch norm of the truncated image of 1 approaches 3 from below.
    std::ostringstream hd;
    hd << "hlog:N=" << std::max<std::size_t>(grid.truncation, 100000);
    TaylorSeries h1 = make_function(hd.str());
    SpaceSpec bloch;
    bloch.family = SpaceFamily::Bloch;
    bloch.grid = grid;
    NormResult norm = space_norm(h1, bloch);
    rep.computed.push_back({"bloch_norm_image_of_1", norm.value, norm.trace, norm.converged});
    bool nondecreasing = true;
    for (std::size_t i = 1; i < norm.trace.size(); ++i) {
        if (norm.trace[i] + 1e-12 < norm.trace[i - 1]) nondecreasing = false;
    }
    add_verdict(rep, "bloch_trace_approaches_3",
                nondecreasing && norm.value >= 2.98 && norm.value <= 3.0 + 1e-6,
                fmt(norm.value));

    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// thm1.4 - the coefficient criterion.
// ---------------------------------------------------------------------------

Report run_coefficient_criterion(const RadialMeasure& mu, double q, const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "thm1.4";
    const std::string tag = mu.describe();
    const bool cheap = cheap_moments(mu);
    const std::size_t cutoff = cheap ? (std::size_t{1} << 21) : (std::size_t{1} << 16);

    auto mu_ptr = std::make_shared<const RadialMeasure>(mu);
    MomentSequence moments(mu_ptr);

    LqCriterion crit = lq_moment_criterion(moments, q, cutoff);
    rep.computed.push_back({"lq_criterion[" + tag + "]", crit.value, crit.block_trace,
                            crit.verdict != SummabilityVerdict::Inconclusive});

    if (mu.kind() == RadialMeasure::Kind::Lebesgue && q == 2.0) {
        rep.targets.push_back({"lq_criterion_value", M_PI * M_PI / 6.0, "derived", 1e-6});
        add_verdict(rep, "criterion_matches_target",
                    std::abs(crit.value - M_PI * M_PI / 6.0) <= 1e-6, fmt(crit.value));
    }
    if (mu.kind() == RadialMeasure::Kind::Atomic && mu.atoms().size() == 1 &&
        mu.atoms()[0].first == 0.5 && mu.atoms()[0].second == 1.0 && q == 2.0) {
        rep.targets.push_back({"lq_criterion_value", 4.0 / 3.0, "derived", 1e-10});
        add_verdict(rep, "criterion_matches_target", std::abs(crit.value - 4.0 / 3.0) <= 1e-10,
                    fmt(crit.value));
    }

    // Image of 1 as a coefficient series, long enough for the norm verdicts.
    const std::size_t image_degree = cheap ? (std::size_t{1} << 17) : (std::size_t{1} << 15);
    TaylorSeries image = monomial_image(moments, 0, image_degree);

    const bool crit_finite = crit.verdict == SummabilityVerdict::Finite;
    // Agreement semantics: a converged norm estimate attests finiteness, an
    // unbounded or non-stabilizing one is consistent with divergence.
    auto agreement = [&](const NormResult& n) {
        if (crit.verdict == SummabilityVerdict::Inconclusive) {
            return VerdictStatus::Inconclusive;
        }
        if (crit_finite) {
            if (n.converged && !n.unbounded) return VerdictStatus::Pass;
            return n.unbounded ? VerdictStatus::Fail : VerdictStatus::Inconclusive;
        }
        return n.converged ? VerdictStatus::Fail : VerdictStatus::Pass;
    };

    // For these rows "converged" means the trace reached a decision: either it
    // stabilized or it was flagged unbounded (the expected outcome for a
    // divergent measure).
    auto decisive = [](const NormResult& n) { return n.converged || n.unbounded; };

    SpaceSpec hl;
    hl.family = SpaceFamily::HardyLittlewood;
    hl.q = q;
    hl.grid = grid;
    NormResult hl_norm = space_norm(image, hl);
    rep.computed.push_back(
        {"hl_norm_image_of_1[" + tag + "]", hl_norm.value, hl_norm.trace, decisive(hl_norm)});
    add_ternary_verdict(rep, "finiteness_agreement_hl[" + tag + "]", agreement(hl_norm));
    if (mu.kind() == RadialMeasure::Kind::Lebesgue && q == 2.0) {
        rep.targets.push_back(
            {"hl2_norm_image_of_1", std::sqrt(M_PI * M_PI / 6.0), "derived", 2e-4});
        add_verdict(rep, "hl2_norm_matches_target",
                    std::abs(hl_norm.value - std::sqrt(M_PI * M_PI / 6.0)) <= 2e-4,
                    fmt(hl_norm.value));
    }

    if (q == 2.0) {
        SpaceSpec hardy;
        hardy.family = SpaceFamily::Hardy;
        hardy.q = 2.0;
        hardy.grid = grid;
        NormResult h_norm = space_norm(image, hardy);
        rep.computed.push_back({"hardy2_norm_image_of_1[" + tag + "]", h_norm.value,
                                h_norm.trace, decisive(h_norm)});
        add_ternary_verdict(rep, "finiteness_agreement_hardy[" + tag + "]", agreement(h_norm));

        SpaceSpec dir;
        dir.family = SpaceFamily::Dirichlet;
        dir.q = 2.0;
        dir.grid = grid;
        NormResult d_norm = space_norm(image, dir);
        rep.computed.push_back({"dirichlet2_norm_image_of_1[" + tag + "]", d_norm.value,
                                d_norm.trace, decisive(d_norm)});
        add_ternary_verdict(rep, "finiteness_agreement_dirichlet[" + tag + "]",
                            agreement(d_norm));
    }

    // Compactness proxy: coefficient norms of the monomial images decrease.
    if (crit_finite) {
        std::vector<double> values;
        for (std::size_t k : {std::size_t{4}, std::size_t{16}, std::size_t{64},
                              std::size_t{256}}) {
            TaylorSeries img = monomial_image(moments, k, image_degree);
            values.push_back(space_norm(img, hl).value);
        }
        bool decreasing = values[0] > values[1] && values[1] > values[2] && values[2] > values[3];
        rep.computed.push_back(
            {"monomial_hl_norms[" + tag + "]", values.back(), values, true});
        add_verdict(rep, "monomial_norms_decrease[" + tag + "]", decreasing);
    }

    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// thm1.5 - compactness into Bq.
// ---------------------------------------------------------------------------

Report run_bq_compactness(const RadialMeasure& mu, double q, const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "thm1.5";
    const std::string tag = mu.describe();
    if (!(q > 0.0) || !(q < 1.0)) throw std::invalid_argument("thm1.5 needs 0 < q < 1");

    auto mu_ptr = std::make_shared<const RadialMeasure>(mu);
    MomentSequence moments(mu_ptr);

    GridConfig bq_grid = grid;
    bq_grid.max_level = std::min(grid.max_level, 12);
    bq_grid.rel_tol = std::max(grid.rel_tol, 1e-7);
    const std::size_t degree =
        std::max<std::size_t>(grid.truncation, std::size_t{40} << bq_grid.max_level);

    SpaceSpec bq;
    bq.family = SpaceFamily::Bq;
    bq.q = q;
    bq.grid = bq_grid;

    std::vector<double> values;
    bool all_converged = true;
    for (std::size_t k : {std::size_t{4}, std::size_t{16}, std::size_t{64}, std::size_t{256}}) {
        TaylorSeries img = monomial_image(moments, k, degree);
        NormResult n = space_norm(img, bq);
        values.push_back(n.value);
        all_converged = all_converged && n.converged;
        rep.computed.push_back({"bq_norm_monomial_image[k=" + std::to_string(k) + "]", n.value,
                                n.trace, n.converged});
    }
    bool strict = values[0] > values[1] && values[1] > values[2] && values[2] > values[3];
    add_verdict(rep, "norms_strictly_decreasing[" + tag + "]", strict && all_converged,
                fmt(values[0]) + " -> " + fmt(values[3]));
    add_verdict(rep, "final_le_quarter_initial[" + tag + "]", values[3] <= 0.25 * values[0],
                fmt(values[3] / values[0]));

    // The weight integral the compactness argument needs to be finite:
    // Int (1-r)^(1/q-2) log(e/(1-r)) dr = 1/a + 1/a^2 with a = 1/q - 1.
    double a = 1.0 / q - 1.0;
    double closed = 1.0 / a + 1.0 / (a * a);
    double quad = integrate_graded_toward_zero_real(
        [a](double u) { return std::pow(u, a - 1.0) * (1.0 - std::log(u)); }, 1e-12, 44);
    rep.targets.push_back({"weight_log_integral", closed, "derived", 1e-9});
    rep.computed.push_back({"weight_log_integral_quadrature", quad, {}, true});
    add_verdict(rep, "weight_integral_matches", std::abs(quad - closed) <= 1e-9 * closed,
                fmt(quad));

    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// lem2.2 - kernel mean brackets and sharpness.
// ---------------------------------------------------------------------------

Report run_kernel_mean_sharpness(const std::vector<double>& c_list, const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "lem2.2";
    const int levels = std::min(grid.max_level, 16);
    const double slack = std::max(1e-8, 10.0 * grid.rel_tol);

    for (double c : c_list) {
        std::ostringstream key;
        key << "c=" << c;
        const std::string tag = key.str();

        if (c == 0.0) {
            // Bracket [1/pi, 1] for r^2 I_0(r) / log(1/(1-r^2)). The lower
            // constant is approached only logarithmically, so the grid checks
            // the bracket and the monotone descent, not a 1% sharpness.
            bool ok = true;
            std::vector<double> ratios;
            for (int j = 1; j <= levels; ++j) {
                double r = dyadic_radius(j);
                KernelMean m = circle_kernel_mean(complex_t{r, 0.0}, 0.0, grid.rel_tol,
                                                  grid.angular_nodes);
                double ratio = r * r * m.value / (-std::log1p(-r * r));
                ratios.push_back(ratio);
                if (!m.converged || ratio < 1.0 / M_PI - slack || ratio > 1.0 + slack) ok = false;
            }
            bool descending = true;
            for (std::size_t i = 1; i < ratios.size(); ++i) {
                if (!(ratios[i] <= ratios[i - 1] + slack)) descending = false;
            }
            rep.targets.push_back({"bracket_lower[" + tag + "]", 1.0 / M_PI, "literature", slack});
            rep.computed.push_back({"ratio_at_max_level[" + tag + "]", ratios.back(), ratios, true});
            add_verdict(rep, "bracket[" + tag + "]", ok);
            add_verdict(rep, "ratio_descends[" + tag + "]", descending);
            continue;
        }

        const double bound = kernel_mean_sharp_bound(c);
        rep.targets.push_back({"sharp_bound[" + tag + "]", bound, "derived", 0.01});
        bool bracket_ok = true;
        std::vector<double> values;
        for (int j = 0; j <= levels; ++j) {
            double r = j == 0 ? 0.0 : dyadic_radius(j);
            KernelMean m =
                circle_kernel_mean(complex_t{r, 0.0}, c, grid.rel_tol, grid.angular_nodes);
            double v = c > 0.0 ? std::pow(1.0 - r * r, c) * m.value : m.value;
            values.push_back(v);
            if (!m.converged || v < 1.0 - slack || v > bound + std::max(1e-6, slack)) {
                bracket_ok = false;
            }
        }
        rep.computed.push_back(
            {"weighted_mean_at_max_level[" + tag + "]", values.back(), values, true});
        add_verdict(rep, "bracket[" + tag + "]", bracket_ok);
        if (c > 0.0) {
            // Approach to the sharp constant is certified at grid level 16; a
            // coarser grid that has not reached it is inconclusive, not wrong.
            bool within = values.back() >= bound * 0.99 && values.back() <= bound + slack;
            VerdictStatus status = within ? VerdictStatus::Pass
                                          : (levels < 16 ? VerdictStatus::Inconclusive
                                                         : VerdictStatus::Fail);
            add_ternary_verdict(rep, "sharpness_within_1pct[" + tag + "]", status,
                                fmt(values.back() / bound));
        }
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// rem2.1 - the normalized disk integral sup 8/pi.
// ---------------------------------------------------------------------------

Report run_disk_integral_sup(const GridConfig& grid) {
    Stopwatch timer;
    Report rep;
    rep.id = "rem2.1";
    const double target = 8.0 / M_PI;
    rep.targets.push_back({"disk_integral_sup", target, "literature", 0.01});
    rep.targets.push_back({"value_at_r0", 4.0 / 3.0, "derived", 1e-9});

    const int levels = std::min(grid.max_level, 14);
    auto disk_integral = [&](double r) {
        // (1/pi) Int_D 2 (1-r^2) |w| / |1 - r conj(w)|^3 dA(w)
        //   = 4 (1-r^2) Int_0^1 rho^2 I_2(r rho) drho,
        // angular direction integrated exactly (elliptic form), radial
        // direction on the graded grid.
        double radial = integrate_graded_toward_zero_real(
            [r](double u) {
                double rho = 1.0 - u;
                return rho * rho * kernel_mean_3_elliptic(r * rho);
            },
            std::min(grid.rel_tol * 10.0, 1e-8), 44);
        return 4.0 * (1.0 - r * r) * radial;
    };

    std::vector<double> values;
    bool monotone = true;
    double sup = 0.0;
    for (int j = 0; j <= levels; ++j) {
        double r = j == 0 ? 0.0 : dyadic_radius(j);
        double v = disk_integral(r);
        if (!values.empty() && !(v > values.back())) monotone = false;
        values.push_back(v);
        sup = std::max(sup, v);
    }
    rep.computed.push_back({"disk_integral_sup", sup, values, true});
    rep.computed.push_back({"value_at_r0", values.front(), {}, true});
    {
        bool within = std::abs(sup - target) <= 0.01 * target;
        VerdictStatus status = within ? VerdictStatus::Pass
                                      : (levels < 14 ? VerdictStatus::Inconclusive
                                                     : VerdictStatus::Fail);
        add_ternary_verdict(rep, "sup_within_1pct_of_target", status, fmt(sup));
    }
    add_verdict(rep, "monotone_in_r", monotone);
    add_verdict(rep, "r0_matches_area_convention",
                std::abs(values.front() - 4.0 / 3.0) <= 1e-9, fmt(values.front()));

    rep.wall_time_s = timer.seconds();
    return rep;
}

std::vector<Report> run_all(const GridConfig& grid) {
    std::vector<Report> reports;
    std::vector<RadialMeasure> family = bundled_measures();
    auto guarded = [&reports](const std::string& id, auto&& fn) {
        try {
            reports.push_back(fn());
        } catch (const std::exception& e) {
            Report rep;
            rep.id = id;
            rep.verdicts.push_back({"experiment_ran", VerdictStatus::Fail, e.what()});
            reports.push_back(std::move(rep));
        }
    };
    guarded("thm1.1", [&] { return run_carleson_dichotomy(family, grid); });
    guarded("thm1.2", [&] { return run_zygmund_bracket(grid); });
    guarded("thm1.3", [&] { return run_bloch_norm(grid); });
    for (const RadialMeasure& mu : family) {
        guarded("thm1.4", [&] { return run_coefficient_criterion(mu, 2.0, grid); });
        guarded("thm1.5", [&] { return run_bq_compactness(mu, 0.5, grid); });
    }
    guarded("lem2.2", [&] {
        return run_kernel_mean_sharpness({-0.5, 0.0, 0.5, 1.0, 2.0, 3.0}, grid);
    });
    guarded("rem2.1", [&] { return run_disk_integral_sup(grid); });
    return reports;
}

}  // namespace hilmat
