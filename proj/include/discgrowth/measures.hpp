#pragma once

#include <cstdint>
#include <vector>

#include "discgrowth/disc_geometry.hpp"

namespace discgrowth {

/// One zero with its multiplicity.  Multiplicities are stored as positive
/// reals so that huge counts like floor(2^(alpha k)) stay exact in a double
/// without integer overflow.
struct ZeroEntry {
    DiscPoint point;       // strictly interior
    double multiplicity;   // > 0
};
using ZeroSequence = std::vector<ZeroEntry>;

struct DiscAtom {
    DiscPoint point;  // strictly interior
    double weight;    // > 0
};

struct BoundaryAtom {
    double theta;  // radians; reduced to (-pi, pi] at construction
    double mass;   // may be signed
};

/// Piecewise-constant boundary density on [theta_start, theta_end), value per
/// radian, may be signed.
struct DensityPiece {
    double theta_start;
    double theta_end;
    double value;
};

/// Atomic measure inside the disc plus a boundary part (atoms and a
/// piecewise-constant density).  Houses Riesz measures of subharmonic
/// functions and boundary measures psi/psi*.
class DiscMeasure {
  public:
    DiscMeasure() = default;
    DiscMeasure(std::vector<DiscAtom> disc_atoms, std::vector<BoundaryAtom> boundary_atoms,
                std::vector<DensityPiece> boundary_density);

    static DiscMeasure from_zeros(const ZeroSequence& zeros);

    const std::vector<DiscAtom>& disc_atoms() const { return disc_atoms_; }
    const std::vector<BoundaryAtom>& boundary_atoms() const { return boundary_atoms_; }
    const std::vector<DensityPiece>& boundary_density() const { return boundary_density_; }

    bool disc_only() const { return boundary_atoms_.empty() && boundary_density_.empty(); }
    double total_variation() const;

  private:
    std::vector<DiscAtom> disc_atoms_;
    std::vector<BoundaryAtom> boundary_atoms_;
    std::vector<DensityPiece> boundary_density_;
};

/// The complete measure of a subharmonic function at genus level s: disc
/// atoms carry mass weight*(1-|point|)^(s+1); the boundary part of the source
/// measure (psi* units) is stored scaled by (s+1)!/(2^s * 2*pi), the one
/// normalization that lets the kernel representation u = -int K_s dlambda + C
/// be evaluated with no extra factors.  For s = 0 this is psi/(2*pi).
class CompleteMeasure {
  public:
    CompleteMeasure() : s_(0) {}
    CompleteMeasure(int s, std::vector<DiscAtom> disc_atoms,
                    std::vector<BoundaryAtom> boundary_atoms,
                    std::vector<DensityPiece> boundary_density);

    int s() const { return s_; }
    const std::vector<DiscAtom>& disc_atoms() const { return disc_atoms_; }
    const std::vector<BoundaryAtom>& boundary_atoms() const { return boundary_atoms_; }
    const std::vector<DensityPiece>& boundary_density() const { return boundary_density_; }

    bool purely_atomic() const { return boundary_density_.empty(); }
    bool boundary_only() const { return disc_atoms_.empty(); }
    bool has_signed_part() const;
    double total() const;            // signed total lambda(closed disc)
    double total_variation() const;  // |lambda|(closed disc)

  private:
    int s_;
    std::vector<DiscAtom> disc_atoms_;
    std::vector<BoundaryAtom> boundary_atoms_;
    std::vector<DensityPiece> boundary_density_;
};

/// Builds the complete measure at level s >= 0.  Disc atom masses become
/// weight*(1-|point|)^(s+1); the boundary part is rescaled as described on
/// CompleteMeasure.
CompleteMeasure build_complete_measure(const DiscMeasure& mu, int s);

struct BoxMass {
    double value;
    double total_variation;
};

/// Mass of the region: atoms selected by region_contains plus the exact
/// integral of the boundary density over the region's boundary arc.
BoxMass box_mass(const CompleteMeasure& lambda, const RegionSpec& region);

enum class BoxIntegralMode { exact_breakpoints, grid };

/// ( int_0^{2pi} lambda(C(phi,delta))^p dphi )^(1/p).  Exact-breakpoint mode
/// requires a purely atomic measure: phi -> lambda(C(phi,delta)) is then
/// piecewise constant with breakpoints at arg(atom) +- pi*delta and the
/// integral is a finite sum.  Grid mode uses the midpoint rule on n_phi
/// uniform points (0 selects the default max(4096, 64 * #atoms)).  With
/// total_variation set, |lambda| replaces lambda.
double box_mass_integral(const CompleteMeasure& lambda, double delta, double p,
                         BoxIntegralMode mode = BoxIntegralMode::exact_breakpoints,
                         int n_phi = 0, bool total_variation = false);

/// Total weight of disc atoms in the closed disc |zeta| <= r.
double counting_n(const DiscMeasure& mu, double r);

/// Total weight of disc atoms in the annulus sector
/// {r <= |zeta| <= (1+r)/2, |arg zeta - phi| <= (1-r)/2}.
double counting_nu(const DiscMeasure& mu, double r, double phi);

/// A 2*pi-periodic positive Borel measure: atoms plus a non-negative
/// piecewise-constant density.
class PeriodicMeasure {
  public:
    PeriodicMeasure() = default;
    PeriodicMeasure(std::vector<BoundaryAtom> atoms, std::vector<DensityPiece> density);

    const std::vector<BoundaryAtom>& atoms() const { return atoms_; }
    const std::vector<DensityPiece>& density() const { return density_; }

    double total() const;
    /// nu((center-delta, center+delta)) with open endpoints, periodic.
    double open_interval_mass(double center, double delta) const;

  private:
    std::vector<BoundaryAtom> atoms_;
    std::vector<DensityPiece> density_;
};

struct Lemma1Result {
    double lhs;
    double rhs;
    bool holds;
};

/// Tests the measure inequality
///   int nu^{p-1}((t-delta, t+delta)) dnu(t)
///     <= (2^{p+1}/delta) int nu^p((t-delta, t+delta)) dt
/// for p >= 1 and delta in (0, pi).  Intervals are open: atoms sitting
/// exactly at distance delta are excluded.
Lemma1Result lemma1_check(const PeriodicMeasure& nu, double p, double delta);

}  // namespace discgrowth
