#include "discgrowth/evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace discgrowth {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

template <class T, class GetPoint>
void sort_by_modulus_then_arg(std::vector<T>& items, GetPoint point) {
    std::sort(items.begin(), items.end(), [&](const T& a, const T& b) {
        const DiscPoint pa = point(a), pb = point(b);
        const double ma = pa.abs2(), mb = pb.abs2();
        if (ma != mb) return ma < mb;
        return pa.arg() < pb.arg();
    });
}

// floored == true clamps each factor at the singular pseudo-distance instead
// of returning the -infinity marker.
double log_mod_blaschke_sorted(const ZeroSequence& sorted, const DiscPoint& z,
                               bool floored = false) {
    CompensatedSum acc;
    const std::complex<double> zv = z.value();
    const double sing2 = singular_pseudo_distance * singular_pseudo_distance;
    for (const auto& zero : sorted) {
        const std::complex<double> a = zero.point.value();
        double num = std::norm(a - zv);
        const double den = std::norm(1.0 - zv * std::conj(a));
        if (num < sing2 * den) {
            if (!floored) return -inf;
            num = sing2 * den;
        }
        acc.add(zero.multiplicity * 0.5 * std::log(num / den));
    }
    return acc.value();
}

void reject_origin_atoms(const std::vector<DiscAtom>& atoms) {
    for (const auto& atom : atoms)
        if (atom.point.abs2() == 0.0)
            throw std::invalid_argument(
                "canonical integral: atom at the origin makes E(A(z,0),s) vanish "
                "identically; factor it out as an explicit z^m term");
}

double canonical_integral_sorted(const std::vector<DiscAtom>& sorted, int s, const DiscPoint& z,
                                 bool floored = false) {
    CompensatedSum acc;
    const std::complex<double> zv = z.value();
    const double sing2 = singular_pseudo_distance * singular_pseudo_distance;
    double harmonic_s = 0.0;
    for (int j = 1; j <= s; ++j) harmonic_s += 1.0 / j;
    for (const auto& atom : sorted) {
        const std::complex<double> zeta = atom.point.value();
        const std::complex<double> den = 1.0 - zv * std::conj(zeta);
        if (std::norm(zv - zeta) < sing2 * std::norm(den)) {
            if (!floored) return -inf;
            // at the clamp A ~ 1: |E(A,s)| ~ |zeta| * sing * e^{H_s}
            acc.add(atom.weight *
                    (std::log(atom.point.abs() * singular_pseudo_distance) + harmonic_s));
            continue;
        }
        const std::complex<double> a = (1.0 - atom.point.abs2()) / den;
        const double lp = log_primary_factor(a, s);
        if (!std::isfinite(lp)) return -inf;
        acc.add(atom.weight * lp);
    }
    return acc.value();
}

double representation_floored(const CompleteMeasure& lambda, double C, const DiscPoint& z) {
    const int s = lambda.s();
    const std::complex<double> zv = z.value();
    const double sing2 = singular_pseudo_distance * singular_pseudo_distance;
    double harmonic_s = 0.0;
    for (int j = 1; j <= s; ++j) harmonic_s += 1.0 / j;
    CompensatedSum acc;
    for (const auto& atom : lambda.disc_atoms()) {
        const std::complex<double> zeta = atom.point.value();
        const std::complex<double> den = 1.0 - zv * std::conj(zeta);
        const double gap = (1.0 - atom.point.abs2()) / (1.0 + atom.point.abs());
        if (std::norm(zv - zeta) < sing2 * std::norm(den)) {
            const double log_e =
                s == 0 ? std::log(singular_pseudo_distance)
                       : std::log(atom.point.abs() * singular_pseudo_distance) + harmonic_s;
            acc.add(atom.weight * log_e / std::pow(gap, s + 1));
            continue;
        }
        const double k = kernel_Ks(z, atom.point, s);
        // an atom at the origin makes the genus-s kernel +inf for every z:
        // the represented function is identically -inf
        if (!std::isfinite(k)) return -inf;
        acc.add(-atom.weight * k);
    }
    acc.add(boundary_term(lambda, z));
    acc.add(C);
    return acc.value();
}

void append_atom_args(std::vector<double>& out, const std::vector<DiscAtom>& atoms, double r) {
    for (const auto& a : atoms)
        if (std::abs(a.point.abs() - r) < 1.0 - r) out.push_back(wrap_angle(a.point.arg()));
}

std::vector<double> finalize_args(std::vector<double> args) {
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    return args;
}

}  // namespace

double log_mod_blaschke(const ZeroSequence& zeros, const DiscPoint& z) {
    if (z.on_boundary()) throw std::domain_error("log_mod_blaschke: |z| must be < 1");
    ZeroSequence sorted = zeros;
    sort_by_modulus_then_arg(sorted, [](const ZeroEntry& e) { return e.point; });
    return log_mod_blaschke_sorted(sorted, z);
}

double canonical_integral(const DiscMeasure& mu, int s, const DiscPoint& z) {
    if (z.on_boundary()) throw std::domain_error("canonical_integral: |z| must be < 1");
    if (s < 0) throw std::domain_error("canonical_integral: s must be >= 0");
    reject_origin_atoms(mu.disc_atoms());
    std::vector<DiscAtom> sorted = mu.disc_atoms();
    sort_by_modulus_then_arg(sorted, [](const DiscAtom& a) { return a.point; });
    return canonical_integral_sorted(sorted, s, z);
}

double boundary_term(const CompleteMeasure& lambda, const DiscPoint& z) {
    if (z.on_boundary()) throw std::domain_error("boundary_term: |z| must be < 1");
    const int s = lambda.s();
    const std::complex<double> zv = z.value();
    CompensatedSum acc;
    for (const auto& a : lambda.boundary_atoms())
        acc.add(-a.mass * representation_boundary_kernel(zv, a.theta, s));
    for (const auto& d : lambda.boundary_density()) {
        // The kernel is smooth in theta but peaks near arg z at width 1-|z|;
        // a composite Simpson refinement against that scale is plenty for a
        // piecewise-constant density.
        const double width = d.theta_end - d.theta_start;
        const double scale = std::max(1.0 - z.abs(), 1e-6);
        int n = static_cast<int>(std::ceil(width / scale * 8)) + 16;
        n = std::min(n, 1 << 20);
        if (n % 2 == 1) ++n;
        const double h = width / n;
        CompensatedSum simpson;
        for (int i = 0; i <= n; ++i) {
            const double t = d.theta_start + i * h;
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            simpson.add(w * representation_boundary_kernel(zv, t, s));
        }
        acc.add(-d.value * simpson.value() * h / 3.0);
    }
    return acc.value();
}

double eval_representation(const CompleteMeasure& lambda, double C, const DiscPoint& z) {
    if (z.on_boundary()) throw std::domain_error("eval_representation: |z| must be < 1");
    const int s = lambda.s();
    CompensatedSum acc;
    std::vector<DiscAtom> sorted = lambda.disc_atoms();
    sort_by_modulus_then_arg(sorted, [](const DiscAtom& a) { return a.point; });
    for (const auto& a : sorted) {
        const double k = kernel_Ks(z, a.point, s);
        if (!std::isfinite(k)) return -inf;
        acc.add(-a.weight * k);
    }
    acc.add(boundary_term(lambda, z));
    acc.add(C);
    return acc.value();
}

SubharmonicSpec::SubharmonicSpec(Variant v) : spec_(std::move(v)) {}

SubharmonicSpec SubharmonicSpec::blaschke(ZeroSequence zeros) {
    sort_by_modulus_then_arg(zeros, [](const ZeroEntry& e) { return e.point; });
    return SubharmonicSpec(BlaschkeLogModSpec{std::move(zeros)});
}

SubharmonicSpec SubharmonicSpec::canonical(DiscMeasure mu, int s) {
    if (s < 0) throw std::domain_error("SubharmonicSpec: s must be >= 0");
    reject_origin_atoms(mu.disc_atoms());
    std::vector<DiscAtom> atoms = mu.disc_atoms();
    sort_by_modulus_then_arg(atoms, [](const DiscAtom& a) { return a.point; });
    return SubharmonicSpec(
        CanonicalIntegralSpec{DiscMeasure(std::move(atoms), {}, {}), s});
}

SubharmonicSpec SubharmonicSpec::representation(CompleteMeasure lambda, double C) {
    return SubharmonicSpec(RepresentationSpec{std::move(lambda), C});
}

SubharmonicSpec SubharmonicSpec::example2(double q) {
    if (!(q > -1.0)) throw std::domain_error("SubharmonicSpec: q must be > -1");
    return SubharmonicSpec(Example2Spec{q});
}

SubharmonicSpec SubharmonicSpec::constant(double c) {
    return SubharmonicSpec(ConstantSpec{c});
}

double SubharmonicSpec::eval(const DiscPoint& z) const {
    return std::visit(
        [&](const auto& u) -> double {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, ConstantSpec>) {
                return u.c;
            } else if constexpr (std::is_same_v<T, BlaschkeLogModSpec>) {
                return log_mod_blaschke_sorted(u.zeros, z);
            } else if constexpr (std::is_same_v<T, CanonicalIntegralSpec>) {
                return canonical_integral_sorted(u.mu.disc_atoms(), u.s, z);
            } else if constexpr (std::is_same_v<T, RepresentationSpec>) {
                return eval_representation(u.lambda, u.C, z);
            } else {
                static_assert(std::is_same_v<T, Example2Spec>);
                const std::complex<double> w = 1.0 - z.value();
                return std::pow(w, -(u.q + 1.0)).real();
            }
        },
        spec_);
}

double SubharmonicSpec::eval_floored(const DiscPoint& z) const {
    return std::visit(
        [&](const auto& u) -> double {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, BlaschkeLogModSpec>) {
                return log_mod_blaschke_sorted(u.zeros, z, /*floored=*/true);
            } else if constexpr (std::is_same_v<T, CanonicalIntegralSpec>) {
                return canonical_integral_sorted(u.mu.disc_atoms(), u.s, z, /*floored=*/true);
            } else if constexpr (std::is_same_v<T, RepresentationSpec>) {
                return representation_floored(u.lambda, u.C, z);
            } else {
                return eval(z);
            }
        },
        spec_);
}

std::vector<double> SubharmonicSpec::singular_args(double r) const {
    std::vector<double> args;
    std::visit(
        [&](const auto& u) {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, BlaschkeLogModSpec>) {
                for (const auto& zero : u.zeros)
                    if (std::abs(zero.point.abs() - r) < 1.0 - r)
                        args.push_back(wrap_angle(zero.point.arg()));
            } else if constexpr (std::is_same_v<T, CanonicalIntegralSpec>) {
                append_atom_args(args, u.mu.disc_atoms(), r);
            } else if constexpr (std::is_same_v<T, RepresentationSpec>) {
                append_atom_args(args, u.lambda.disc_atoms(), r);
                for (const auto& a : u.lambda.boundary_atoms()) args.push_back(a.theta);
                for (const auto& d : u.lambda.boundary_density()) {
                    args.push_back(wrap_angle(d.theta_start));
                    args.push_back(wrap_angle(d.theta_end));
                }
            } else if constexpr (std::is_same_v<T, Example2Spec>) {
                args.push_back(0.0);
            }
        },
        spec_);
    return finalize_args(std::move(args));
}

}  // namespace discgrowth
