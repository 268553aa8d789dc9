#pragma once

#include <complex>

#include "discgrowth/disc_geometry.hpp"

namespace discgrowth {

// Kernel values are extended reals: +/-infinity marks singular points that
// quadrature callers must exclude.  Evaluation within pseudohyperbolic
// distance 1e-8 of the singularity returns the marker instead of a
// catastrophically cancelled float.
inline constexpr double singular_pseudo_distance = 1e-8;

/// log|E(w,s)| for the Weierstrass primary factor
/// E(w,s) = (1-w) exp(w + w^2/2 + ... + w^s/s); -infinity iff w = 1.
double log_primary_factor(std::complex<double> w, int s);

/// K(z,zeta) = G(z,zeta)/(1-|zeta|), the Green function of the disc scaled by
/// the boundary distance.  For |zeta| = 1 extends continuously to the Poisson
/// kernel (1-|z|^2)/|zeta-z|^2.  +infinity iff z = zeta.
double kernel_K(const DiscPoint& z, const DiscPoint& zeta);

/// K_s(z,zeta) = -log|E(A(z,zeta),s)| / (1-|zeta|)^{s+1} for s >= 1; K_0 is
/// kernel_K.  At the diagonal the value is the conventional -infinity marker.
/// On the boundary (s >= 1) returns the uniform limit
/// (2^{s+1}/(s+1)) Re 1/(1 - z e^{-i theta})^{s+1}.
double kernel_Ks(const DiscPoint& z, const DiscPoint& zeta, int s);

struct SchwarzPoisson {
    std::complex<double> S;
    double P;
};

/// S_q(z) = Gamma(1+q) (2/(1-z)^{q+1} - 1) and P_q = Re S_q, principal power.
/// S_0, P_0 are the classical Schwarz and Poisson kernels.
SchwarzPoisson kernel_PqSq(const DiscPoint& z, double q);

/// Poisson kernel P_0(z e^{-i theta}) = (1-|z|^2)/|e^{i theta}-z|^2, |z| < 1.
double poisson_kernel(std::complex<double> z, double theta);

/// Boundary kernel of the genus-s representation:
/// 2^s P_s(z e^{-i theta}) / (s+1)!.  Reduces to the Poisson kernel at s = 0;
/// pairing it with the stored boundary part of a CompleteMeasure reproduces
/// the representation's boundary term with no extra factor.
double representation_boundary_kernel(std::complex<double> z, double theta, int s);

}  // namespace discgrowth
