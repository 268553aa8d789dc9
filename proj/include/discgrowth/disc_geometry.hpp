#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "discgrowth/common.hpp"

namespace discgrowth {

// Construction tolerance: absorbs rounding when ingesting points computed as
// 1 - 2^-k and unit-circle points computed through exp(i*theta).
inline constexpr double eps_geom = 1e-12;

/// A point of the closed unit disc.  Points with |z|^2 > 1 + eps_geom are
/// rejected at construction.  Points within eps_geom of the unit circle are
/// treated as boundary points by every operation that distinguishes the two.
class DiscPoint {
  public:
    DiscPoint() : re_(0.0), im_(0.0) {}
    DiscPoint(double re, double im) : re_(re), im_(im) { check(); }
    explicit DiscPoint(std::complex<double> z) : re_(z.real()), im_(z.imag()) { check(); }

    double re() const { return re_; }
    double im() const { return im_; }
    std::complex<double> value() const { return {re_, im_}; }
    double abs2() const { return re_ * re_ + im_ * im_; }
    double abs() const { return std::hypot(re_, im_); }
    double arg() const { return std::atan2(im_, re_); }

    bool on_boundary() const { return abs2() >= 1.0 - eps_geom; }
    bool interior() const { return !on_boundary(); }

    friend bool operator==(const DiscPoint& a, const DiscPoint& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    void check() const {
        if (!(re_ * re_ + im_ * im_ <= 1.0 + eps_geom))
            throw std::domain_error("DiscPoint: |z| > 1");
    }
    double re_, im_;
};

// Region kinds.  All memberships are closed (non-strict inequalities) and all
// angular comparisons reduce differences to (-pi, pi], so a box straddling
// theta = pi behaves identically to one near 0.

/// Carleson box {|zeta| >= 1-delta, |arg zeta - phi| <= pi*delta}.
struct CarlesonBox {
    double phi;
    double delta;  // in (0, 1]
    CarlesonBox(double phi_, double delta_) : phi(phi_), delta(delta_) {
        if (!(delta > 0.0 && delta <= 1.0))
            throw std::domain_error("CarlesonBox: delta must be in (0,1]");
    }
};

/// Annulus sector {r <= |zeta| <= (1+r)/2, |arg zeta - phi| <= sigma}.
struct AnnulusSector {
    double r;
    double phi;
    double sigma;
    AnnulusSector(double r_, double phi_, double sigma_) : r(r_), phi(phi_), sigma(sigma_) {
        if (!(sigma > 0.0)) throw std::domain_error("AnnulusSector: sigma must be positive");
        if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("AnnulusSector: r must be in [0,1]");
    }
};

/// Polar square {| |zeta| - |c| | <= sigma, |arg zeta - arg c| <= sigma}.
struct SquareBox {
    DiscPoint center;
    double sigma;
    SquareBox(DiscPoint center_, double sigma_) : center(center_), sigma(sigma_) {
        if (!(sigma > 0.0)) throw std::domain_error("SquareBox: sigma must be positive");
    }
};

/// Pseudohyperbolic disc {|(c - zeta)/(1 - conj(c) zeta)| <= sigma}.
struct PseudoDisc {
    DiscPoint center;
    double sigma;  // in (0, 1]
    PseudoDisc(DiscPoint center_, double sigma_) : center(center_), sigma(sigma_) {
        if (!(sigma > 0.0 && sigma <= 1.0))
            throw std::domain_error("PseudoDisc: sigma must be in (0,1]");
        if (center.on_boundary())
            throw std::domain_error("PseudoDisc: center must be interior");
    }
};

/// Closed disc {|zeta| <= radius} about the origin.
struct ClosedDisc {
    double radius;
    explicit ClosedDisc(double radius_) : radius(radius_) {
        if (!(radius > 0.0)) throw std::domain_error("ClosedDisc: radius must be positive");
    }
};

using RegionSpec = std::variant<CarlesonBox, AnnulusSector, SquareBox, PseudoDisc, ClosedDisc>;

/// A(z, zeta) = (1 - |zeta|^2) / (1 - z conj(zeta)).  Requires |z| < 1; zeta
/// may lie on the boundary.  |A| <= 2 for all admissible inputs.
std::complex<double> mobius_A(const DiscPoint& z, const DiscPoint& zeta);

/// |(z - w)/(1 - z conj(w))| in [0, 1).  Both arguments must be interior.
double pseudo_distance(const DiscPoint& z, const DiscPoint& w);

/// Closed-boundary membership test; total on valid regions.
bool region_contains(const RegionSpec& region, const DiscPoint& zeta);

/// Arc {theta : e^{i theta} in region} as a circular interval [first, second]
/// (second may exceed first by up to 2*pi; full circle is [-pi, pi]).
/// nullopt when the region does not meet the unit circle.
std::optional<std::pair<double, double>> boundary_arc(const RegionSpec& region);

}  // namespace discgrowth
