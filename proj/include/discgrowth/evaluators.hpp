#pragma once

#include <variant>
#include <vector>

#include "discgrowth/kernels.hpp"
#include "discgrowth/measures.hpp"

namespace discgrowth {

/// log|B(z)| for the Blaschke product with the given zeros.  Zeros at the
/// origin contribute multiplicity * log|z| (the plain z^m factor).  -infinity
/// iff z hits a zero.  Atoms are summed compensated in a fixed order sorted
/// by (|a|, arg a), so the result does not depend on input ordering.
double log_mod_blaschke(const ZeroSequence& zeros, const DiscPoint& z);

/// Canonical integral U(z; mu, s) = sum weight * log|E(A(z,zeta), s)| over
/// the disc atoms of mu; -infinity at atoms.
double canonical_integral(const DiscMeasure& mu, int s, const DiscPoint& z);

/// Boundary term of the genus-s representation,
/// -int representation_boundary_kernel d(lambda|boundary); with the
/// normalization applied at build time this equals the representation's
/// boundary integral exactly.
double boundary_term(const CompleteMeasure& lambda, const DiscPoint& z);

/// u(z) = -int K_s(z, .) dlambda + C; -infinity at disc atoms.
double eval_representation(const CompleteMeasure& lambda, double C, const DiscPoint& z);

// Subharmonic function specifications accepted by the means machinery.

struct BlaschkeLogModSpec {
    ZeroSequence zeros;
};
struct CanonicalIntegralSpec {
    DiscMeasure mu;
    int s;
};
struct RepresentationSpec {
    CompleteMeasure lambda;
    double C;
};
/// log|f| for f = exp((1/(1-z))^{q+1}): evaluates Re (1/(1-z))^{q+1}.
struct Example2Spec {
    double q;
};
struct ConstantSpec {
    double c;
};

/// A subharmonic function u given by one of the closed descriptions above.
/// eval() is pure; instances are immutable after construction and safe to
/// share across threads.
class SubharmonicSpec {
  public:
    static SubharmonicSpec blaschke(ZeroSequence zeros);
    static SubharmonicSpec canonical(DiscMeasure mu, int s);
    static SubharmonicSpec representation(CompleteMeasure lambda, double C);
    static SubharmonicSpec example2(double q);
    static SubharmonicSpec constant(double c);

    double eval(const DiscPoint& z) const;

    /// eval with every log-ratio clamped at the singular pseudo-distance, so
    /// the result is always finite.  This realizes the quadrature contract
    /// that the sliver {pseudo_distance < 1e-8} around each atom is excluded
    /// rather than sampled; the substitution changes circle integrals by
    /// O(1e-7) of the local singular mass.
    double eval_floored(const DiscPoint& z) const;

    /// Angles where u can be singular (or sharply peaked) on the circle of
    /// radius r: args of atoms with ||a|-r| < 1-r, boundary-atom angles and
    /// density breakpoints.  Sorted, deduplicated, wrapped to (-pi, pi].
    std::vector<double> singular_args(double r) const;

    using Variant = std::variant<ConstantSpec, BlaschkeLogModSpec, CanonicalIntegralSpec,
                                 RepresentationSpec, Example2Spec>;
    const Variant& spec() const { return spec_; }

  private:
    explicit SubharmonicSpec(Variant v);
    Variant spec_;
};

}  // namespace discgrowth
