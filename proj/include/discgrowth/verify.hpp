#pragma once

#include <string>

#include "discgrowth/classical.hpp"
#include "discgrowth/means_fit.hpp"

namespace discgrowth {

/// Outcome of one growth-equivalence experiment.  gamma_box is the fitted
/// exponent of L(delta, p) = (int lambda^p(C(phi,delta)) dphi)^{1/p};
/// gamma_means the fitted exponent rho of m_p against (1-r)^{-1}.  For
/// counting-based harnesses gamma_box holds the counting-function fit
/// instead (relation_checked says which).
struct VerificationReport {
    GrowthFit gamma_box;
    GrowthFit gamma_means;
    std::string relation_checked;
    bool consistent = false;
    double tolerance = 0.0;
    std::string direction;  // "iff" or "sufficiency"
};

struct Example1 {
    ZeroSequence zeros;
    int s;
};

/// The test sequence a_{k,m} = (1 - 2^-k) e^{i m 2^-k}, m = 1..floor(2^{k
/// beta}), k = 1..k_max, each point weighted floor(2^{alpha k}); for beta = 0
/// the single real point 1 - 2^-k per level.  s = min{q in N : q > alpha +
/// beta - 1}.  k_max is capped at 40 so the weights stay exact in a double.
Example1 gen_example1(double alpha, double beta, int k_max);

/// log|f(z)| for f = exp((1/(1-z))^{q+1}): Re (1/(1-z))^{q+1}, principal
/// power.
double example2_logmod(double q, const DiscPoint& z);

/// Boundary-atom complete measure representing example2_logmod together with
/// the constant C of the representation.  The atom mass is calibrated so
/// eval_representation(lambda, C, .) reproduces example2_logmod exactly for
/// integer q (and matches it at z = 0 in general); the mass comes out
/// negative because the function is unbounded above.
struct Example2Measure {
    CompleteMeasure lambda;
    double C;
};
Example2Measure example2_measure(double q);

/// Checks gamma_means ~ s + 1 - gamma_box on dyadic grids (both >= 5
/// points).  Total-variation box masses are used for s >= 1 or signed
/// measures; the report direction is "sufficiency" in those cases since only
/// that implication is established.
VerificationReport verify_box_vs_means(const CompleteMeasure& lambda, const SubharmonicSpec& u,
                                       double p, DyadicGrid delta_grid, DyadicGrid r_grid,
                                       double tolerance);

/// For zero sequences supported in finitely many Stolz angles: fits a_n from
/// n(r) and a_m from m_p(r, log|B|) and checks a_m ~ a_n - 1/p.
VerificationReport verify_stolz(const ZeroSequence& zeros, double p, double tolerance,
                                DyadicGrid r_grid = {4, 11});

/// One-sided growth bound for canonical integrals: requires alpha + 1/p <
/// s + 1, asserts the fitted n(r) exponent stays below alpha + 1/p + 0.05 and
/// checks the fitted m_p exponent of U(.; mu, s) is <= alpha + tolerance.
VerificationReport verify_growth_sufficiency(const DiscMeasure& mu, int s, double p, double alpha,
                                             double tolerance, DyadicGrid r_grid = {4, 11});

/// Builds the level-s complete measure of gen_example1 and fits the exponent
/// of L(delta, p) over the dyadic delta grid (clipped to delta >= 2^-(k_max-2)
/// so the truncated tail cannot bend the fit).
GrowthFit example1_lower_bound_check(double alpha, double beta, double p, int k_max,
                                     DyadicGrid delta_grid);

/// sup over phi of counting_nu(mu, r, phi); the sup is attained with a window
/// edge at an atom, so candidate phis are atom args and args +- (1-r)/2.
double sup_counting_nu(const DiscMeasure& mu, double r);

}  // namespace discgrowth
