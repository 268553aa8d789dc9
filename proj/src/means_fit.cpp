#include "discgrowth/means_fit.hpp"

#include <algorithm>
#include <cmath>

namespace discgrowth {

std::vector<double> DyadicGrid::radii() const {
    std::vector<double> out;
    for (int j = j0; j <= j1; ++j) out.push_back(1.0 - std::ldexp(1.0, -j));
    return out;
}

std::vector<double> DyadicGrid::deltas() const {
    std::vector<double> out;
    for (int j = j0; j <= j1; ++j) out.push_back(std::ldexp(1.0, -j));
    return out;
}

double circle_mean_mp(const SubharmonicSpec& u, double r, double p, double rel_tol,
                      std::int64_t eval_budget) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("circle_mean_mp: r must be in [0,1)");
    if (!(p >= 1.0)) throw std::domain_error("circle_mean_mp: p must be >= 1");
    if (!(rel_tol > 1e-12 && rel_tol < 1e-2))
        throw std::domain_error("circle_mean_mp: rel_tol out of (1e-12, 1e-2)");

    // Panel edges: singular angles of u on this circle, then filled so no
    // panel spans more than pi/4.  Singularities end up at panel endpoints,
    // which Gauss-Kronrod nodes never touch.
    std::vector<double> edges = u.singular_args(r);
    for (double& e : edges)
        if (e == pi) e = -pi;  // sweep works on [-pi, pi)
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<double> full;
    full.push_back(-pi);
    for (double e : edges)
        if (e > -pi && e < pi) full.push_back(e);
    full.push_back(pi);
    std::vector<double> refined;
    for (size_t i = 0; i + 1 < full.size(); ++i) {
        refined.push_back(full[i]);
        const double len = full[i + 1] - full[i];
        const int extra = static_cast<int>(std::floor(len / (pi / 4)));
        for (int k = 1; k <= extra; ++k)
            refined.push_back(full[i] + len * k / (extra + 1));
    }
    refined.push_back(pi);

    auto integrand = [&](double theta) {
        const double v = u.eval_floored(DiscPoint(r * std::cos(theta), r * std::sin(theta)));
        if (!std::isfinite(v)) return v;  // marker: guarded retry perturbs theta
        return std::pow(std::abs(v), p);
    };
    const double integral = detail::integrate_adaptive(integrand, refined, rel_tol, eval_budget);
    return std::pow(std::max(integral, 0.0) / two_pi, 1.0 / p);
}

double max_on_circle(const SubharmonicSpec& u, double r, int n_grid) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("max_on_circle: r must be in [0,1)");
    if (n_grid < 4) throw std::domain_error("max_on_circle: n_grid too small");
    auto value = [&](double theta) {
        return u.eval(DiscPoint(r * std::cos(theta), r * std::sin(theta)));
    };
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < n_grid; ++i) {
        const double v = value(two_pi * i / n_grid);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // golden-section refinement on the bracket around the best sample
    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    double lo = two_pi * (best_i - 1) / n_grid;
    double hi = two_pi * (best_i + 1) / n_grid;
    double x1 = lo + golden * (hi - lo), x2 = hi - golden * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int iter = 0; iter < 30; ++iter) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + golden * (hi - lo);
            f1 = value(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - golden * (hi - lo);
            f2 = value(x2);
        }
    }
    return std::max({best, f1, f2});
}

GrowthFit fit_exponent(std::span<const std::pair<double, double>> samples, double floor_eps) {
    GrowthFit fit;
    std::vector<std::pair<double, double>> valid;
    for (const auto& [x, F] : samples) {
        if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(F) || F < 0.0) continue;
        valid.emplace_back(x, F);
    }
    std::sort(valid.begin(), valid.end());
    valid.erase(std::unique(valid.begin(), valid.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                valid.end());
    if (valid.size() < 4)
        throw std::invalid_argument("fit_exponent: need >= 4 samples with distinct x");
    fit.grid = valid;

    bool all_floored = true;
    for (const auto& [x, F] : valid)
        if (F > floor_eps) all_floored = false;
    if (all_floored) {
        fit.exponent = 0.0;
        fit.amplitude = floor_eps;
        fit.r_squared = 1.0;
        fit.degenerate = true;
        return fit;
    }

    const size_t n = valid.size();
    double sx = 0, sy = 0;
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = std::log(valid[i].first);
        ys[i] = std::log(std::max(valid[i].second, floor_eps));
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (slope * xs[i] + intercept);
        ss_res += e * e;
    }
    fit.exponent = slope;
    fit.amplitude = std::exp(intercept);
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
    return fit;
}

GrowthFit rho_estimate(const SubharmonicSpec& u, double p, DyadicGrid grid, double rel_tol) {
    if (grid.j1 < grid.j0 + 3)
        throw std::invalid_argument("rho_estimate: need j1 >= j0 + 3");
    std::vector<std::pair<double, double>> samples;
    for (int j = grid.j0; j <= grid.j1; ++j) {
        const double x = std::ldexp(1.0, -j);
        samples.emplace_back(x, circle_mean_mp(u, 1.0 - x, p, rel_tol));
    }
    GrowthFit fit = fit_exponent(samples);
    fit.exponent = -fit.exponent;  // m_p ~ (1-r)^{-rho} reported as rho >= 0
    return fit;
}

}  // namespace discgrowth
