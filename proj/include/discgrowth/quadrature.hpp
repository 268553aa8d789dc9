#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "discgrowth/common.hpp"

namespace discgrowth {

/// Raised when the adaptive panel budget is exhausted; carries the estimate
/// reached so the caller can report a diagnostic.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved_estimate)
        : std::runtime_error(what), achieved(achieved_estimate) {}
    double achieved;
};

namespace detail {

// Gauss7 / Kronrod15 nodes and weights on [-1, 1].  All nodes are strictly
// interior, so integrable endpoint singularities are never sampled.
inline constexpr double gk_nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double gauss_w[8] = {
    0.417959183673469, 0.0,               0.381830050505119, 0.0,
    0.279705391489277, 0.0,               0.129484966168870, 0.0};
inline constexpr double kronrod_w[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};

struct Panel {
    double a, b;
    double value;  // K15 estimate
    double error;  // |K15 - G7|
    bool operator<(const Panel& other) const { return error < other.error; }
};

// Evaluates f at x; a non-finite sample is retried at slightly perturbed
// abscissae (panel seeding keeps singular points at panel ends, so a
// collision with an interior node is a measure-zero accident).
template <class F>
double eval_guarded(F& f, double x, double h) {
    double v = f(x);
    if (std::isfinite(v)) return v;
    v = f(x + 1e-7 * h);
    if (std::isfinite(v)) return v;
    v = f(x - 1e-7 * h);
    if (std::isfinite(v)) return v;
    throw QuadratureError("integrand not finite after perturbation", 0.0);
}

template <class F>
Panel gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = eval_guarded(f, mid, half);
    double gauss = gauss_w[0] * f0;
    double kron = kronrod_w[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk_nodes[i];
        const double fi = eval_guarded(f, mid + dx, half) + eval_guarded(f, mid - dx, half);
        gauss += gauss_w[i] * fi;
        kron += kronrod_w[i] * fi;
    }
    gauss *= half;
    kron *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

/// Adaptive integration over the panels delimited by `edges` (sorted).
/// Globally refines the worst panel until sum(err) <= rel_tol * |sum(value)|
/// or the evaluation budget runs out.
template <class F>
double integrate_adaptive(F&& f, const std::vector<double>& edges, double rel_tol,
                          std::int64_t eval_budget) {
    if (edges.size() < 2) throw std::invalid_argument("integrate_adaptive: need >= 2 edges");
    std::priority_queue<Panel> panels;
    double total = 0.0, total_err = 0.0;
    std::int64_t evals = 0;
    auto push = [&](double a, double b) {
        Panel p = gk15(f, a, b);
        evals += 15;
        total += p.value;
        total_err += p.error;
        panels.push(p);
    };
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] > edges[i]) push(edges[i], edges[i + 1]);
    while (total_err > rel_tol * std::max(std::abs(total), 1e-300)) {
        if (panels.empty()) break;
        if (evals + 30 > eval_budget)
            throw QuadratureError("adaptive quadrature: panel budget exhausted", total);
        const Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // panel collapsed to rounding width; accept its estimate as is
            total += worst.value;
            continue;
        }
        push(worst.a, mid);
        push(mid, worst.b);
    }
    return total;
}

}  // namespace detail
}  // namespace discgrowth
