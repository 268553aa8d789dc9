#pragma once

#include "discgrowth/means_fit.hpp"

namespace discgrowth {

/// I(r) = (1/2pi) int (log|B(re^{i theta})|)^2 dtheta, i.e. the squared
/// 2-mean.  If r collides with some |a_n| exactly, r is nudged by 1e-14.
double i_mean(const ZeroSequence& zeros, double r);

/// J(r) = sum_k (1/k^2) | (r^k - r^{-k}) sum_{|a|<=r} conj(a)^k
///                        + r^k sum_{|a|>r} (conj(a)^k - a^{-k}) |^2.
/// Partial sums run until ten consecutive terms fall below tol*(sum+1) and
/// k >= 50, with a hard cap of 10^6 terms.  Zeros exactly on |a| = r join the
/// "<= r" group.  Zeros at the origin are rejected (a^{-k} undefined).
double j_sum(const ZeroSequence& zeros, double r, double tol = 1e-10);

/// psi_r(zeta) = sum_{r <= |a_n| < 1} (1 - |a_n|)^2 / |zeta - a_n|^2,
/// multiplicity-weighted; |zeta| = 1.
double psi_r(const ZeroSequence& zeros, const DiscPoint& zeta, double r);

/// Number of zeros (with multiplicity) in the Stolz angle with vertex zeta:
/// strict inequality |1 - a conj(zeta)| < 2 (1 - |a|).
double stolz_count_Phi(const ZeroSequence& zeros, const DiscPoint& zeta);

/// int_0^{2pi} ( int_0^{2pi} (1-r^2)/|re^{i theta} - e^{i phi}|^2
///               psi_r(e^{i theta}) dtheta )^p dphi
/// by nested uniform-grid quadrature on n_grid points each.
double vm_smoothed_condition(const ZeroSequence& zeros, double r, double p, int n_grid);

/// Multiplicity-weighted count of zeros in the annulus sector
/// {r <= |a| <= (1+r)/2, |arg a - phi| <= kappa (1-r)^gamma}.
double linden_region_count(const ZeroSequence& zeros, double r, double phi, double kappa,
                           double gamma);

/// A boundary function sampled on the uniform grid theta_i = 2 pi i / n,
/// n a power of two >= 256 (to allow dyadic refinement oracles).
struct BoundaryFunctionSample {
    std::vector<double> values;
    explicit BoundaryFunctionSample(std::vector<double> v);
    int size() const { return static_cast<int>(values.size()); }
    double theta(int i) const { return two_pi * i / size(); }
};

/// ((1/2pi) int |g|^p)^{1/p} on the grid, or (1/2pi) int g log+ g when xlogx
/// is set (p is then ignored).
double boundary_lp_norm(const BoundaryFunctionSample& sample, double p, bool xlogx = false);

BoundaryFunctionSample sample_psi_r(const ZeroSequence& zeros, double r, int n);
BoundaryFunctionSample sample_Phi(const ZeroSequence& zeros, int n);

}  // namespace discgrowth
