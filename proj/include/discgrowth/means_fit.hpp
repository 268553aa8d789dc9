#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "discgrowth/evaluators.hpp"
#include "discgrowth/quadrature.hpp"

namespace discgrowth {

/// Fitted power-law exponent with residual diagnostics over the grid used.
struct GrowthFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    double r_squared = 0.0;
    std::vector<std::pair<double, double>> grid;  // (x, F(x)) samples
    bool degenerate = false;                      // all samples hit the floor
};

/// Dyadic grid j0..j1: radii r = 1 - 2^-j, box sizes delta = 2^-j.
struct DyadicGrid {
    int j0;
    int j1;
    std::vector<double> radii() const;
    std::vector<double> deltas() const;
};

/// m_p(r, u) = ( (1/2pi) int |u(r e^{i theta})|^p dtheta )^{1/p} by adaptive
/// panel quadrature.  Initial panel boundaries are seeded at the singular
/// angles of u near the circle, so singular nodes are never sampled; panels
/// split (worst first) until the two-level estimate agrees to rel_tol.
/// Throws QuadratureError carrying the achieved estimate when the evaluation
/// budget is exhausted.
double circle_mean_mp(const SubharmonicSpec& u, double r, double p, double rel_tol = 1e-6,
                      std::int64_t eval_budget = std::int64_t{1} << 22);

/// Max of u over n_grid uniform samples of the circle |z| = r, refined by
/// golden-section search around the best sample (30 iterations).
double max_on_circle(const SubharmonicSpec& u, double r, int n_grid);

/// Least-squares line through (log x, log max(F, floor_eps)); exponent is the
/// slope, amplitude is exp(intercept).  Needs >= 4 samples with distinct
/// positive x.  A fit over all-floored values reports exponent 0, r^2 = 1 and
/// the degenerate flag.
GrowthFit fit_exponent(std::span<const std::pair<double, double>> samples,
                       double floor_eps = 1e-300);

/// Growth order of m_p(r, u) on the dyadic grid: fits F = m_p against
/// x = 1 - r and reports the exponent with the sign convention
/// m_p ~ (1-r)^{-rho}, rho >= 0 for growing means.
GrowthFit rho_estimate(const SubharmonicSpec& u, double p, DyadicGrid grid,
                       double rel_tol = 1e-6);

}  // namespace discgrowth
