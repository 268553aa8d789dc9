#include "discgrowth/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discgrowth {

namespace {

double one_minus_abs(const DiscPoint& p) {
    // 1 - |p| without the cancellation of forming |p| first.
    return (1.0 - p.abs2()) / (1.0 + p.abs());
}

void validate_density(const std::vector<DensityPiece>& pieces) {
    for (const auto& d : pieces) {
        if (!(d.theta_end > d.theta_start))
            throw std::invalid_argument("density piece: theta_start < theta_end required");
        if (!(d.theta_end - d.theta_start <= two_pi + 1e-12))
            throw std::invalid_argument("density piece wider than 2*pi");
    }
    // Pieces must not overlap after reduction mod 2*pi.
    std::vector<std::pair<double, double>> spans;
    for (const auto& d : pieces) {
        double lo = std::fmod(d.theta_start, two_pi);
        if (lo < 0.0) lo += two_pi;
        spans.emplace_back(lo, lo + (d.theta_end - d.theta_start));
    }
    std::sort(spans.begin(), spans.end());
    for (size_t i = 0; i + 1 < spans.size(); ++i) {
        if (spans[i].second > spans[i + 1].first + 1e-12)
            throw std::invalid_argument("overlapping density pieces");
    }
    if (spans.size() >= 2) {
        if (spans.back().second - two_pi > spans.front().first + 1e-12)
            throw std::invalid_argument("overlapping density pieces (wrap)");
    }
}

// Length of {t mod 2pi : t in [a,b)} intersected with {t mod 2pi : t in [lo,hi]}.
// Both intervals must have length <= 2*pi.
double circular_overlap(double a, double b, double lo, double hi) {
    const double la = b - a, lb = hi - lo;
    if (la <= 0.0 || lb <= 0.0) return 0.0;
    if (la >= two_pi) return std::min(lb, two_pi);
    if (lb >= two_pi) return la;
    double a0 = std::fmod(a, two_pi);
    if (a0 < 0.0) a0 += two_pi;
    double l0 = std::fmod(lo, two_pi);
    if (l0 < 0.0) l0 += two_pi;
    double total = 0.0;
    for (int k = -1; k <= 1; ++k) {
        const double s = std::max(a0, l0 + k * two_pi);
        const double e = std::min(a0 + la, l0 + k * two_pi + lb);
        if (e > s) total += e - s;
    }
    return total;
}

struct ArcAtom {
    double center;     // wrapped to (-pi, pi]
    double halfwidth;  // in (0, pi]
    double mass;
};

// Step function on the circle: value on [breakpoints[i], breakpoints[i+1]).
struct StepFunction {
    std::vector<double> breakpoints;  // sorted, within (-pi, pi]
    std::vector<double> values;       // values[i] on segment starting at -pi (i=0) then at breakpoints[i-1]

    double integral_pow(double p) const {
        CompensatedSum acc;
        double prev = -pi;
        for (size_t i = 0; i < breakpoints.size(); ++i) {
            const double len = breakpoints[i] - prev;
            if (len > 0.0) acc.add(std::pow(values[i], p) * len);
            prev = breakpoints[i];
        }
        if (pi - prev > 0.0) acc.add(std::pow(values.back(), p) * (pi - prev));
        return acc.value();
    }

    double eval(double phi) const {
        // phi in [-pi, pi)
        const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), phi);
        return values[static_cast<size_t>(it - breakpoints.begin())];
    }
};

// Builds phi -> sum of masses of atoms whose arc [center-hw, center+hw]
// contains phi, by a circular sweep.  For non-negative masses the running
// sum is clamped at zero: the true function is >= 0 and the clamp removes
// the cancellation residue that would otherwise make pow(v, p) NaN.
StepFunction sweep_arcs(const std::vector<ArcAtom>& arcs) {
    double baseline = 0.0;
    bool all_nonneg = true;
    std::vector<std::pair<double, double>> events;  // (position, delta)
    double start_value = 0.0;
    for (const auto& a : arcs) {
        if (a.mass < 0.0) all_nonneg = false;
        if (a.halfwidth >= pi) {
            baseline += a.mass;
            continue;
        }
        const double lo = wrap_angle(a.center - a.halfwidth);
        const double hi = wrap_angle(a.center + a.halfwidth);
        events.emplace_back(lo, a.mass);
        events.emplace_back(hi, -a.mass);
        if (std::abs(wrap_angle(a.center - (-pi))) <= a.halfwidth) start_value += a.mass;
    }
    std::sort(events.begin(), events.end());
    StepFunction f;
    auto emit = [&](double v) { f.values.push_back(all_nonneg ? std::max(0.0, v) : v); };
    emit(baseline + start_value);
    double running = start_value;
    size_t i = 0;
    while (i < events.size()) {
        const double pos = events[i].first;
        double delta = 0.0;
        while (i < events.size() && events[i].first == pos) delta += events[i++].second;
        running += delta;
        f.breakpoints.push_back(pos);
        emit(baseline + running);
    }
    return f;
}

}  // namespace

DiscMeasure::DiscMeasure(std::vector<DiscAtom> disc_atoms, std::vector<BoundaryAtom> boundary_atoms,
                         std::vector<DensityPiece> boundary_density)
    : disc_atoms_(std::move(disc_atoms)),
      boundary_atoms_(std::move(boundary_atoms)),
      boundary_density_(std::move(boundary_density)) {
    for (const auto& a : disc_atoms_) {
        if (!(a.weight > 0.0)) throw std::invalid_argument("disc atom weight must be positive");
        if (a.point.on_boundary())
            throw std::invalid_argument("disc atoms must be interior points");
    }
    for (auto& a : boundary_atoms_) a.theta = wrap_angle(a.theta);
    validate_density(boundary_density_);
}

DiscMeasure DiscMeasure::from_zeros(const ZeroSequence& zeros) {
    std::vector<DiscAtom> atoms;
    atoms.reserve(zeros.size());
    for (const auto& z : zeros) {
        if (!(z.multiplicity > 0.0))
            throw std::invalid_argument("zero multiplicity must be positive");
        atoms.push_back({z.point, z.multiplicity});
    }
    return DiscMeasure(std::move(atoms), {}, {});
}

double DiscMeasure::total_variation() const {
    CompensatedSum acc;
    for (const auto& a : disc_atoms_) acc.add(a.weight);
    for (const auto& a : boundary_atoms_) acc.add(std::abs(a.mass));
    for (const auto& d : boundary_density_)
        acc.add(std::abs(d.value) * (d.theta_end - d.theta_start));
    return acc.value();
}

CompleteMeasure::CompleteMeasure(int s, std::vector<DiscAtom> disc_atoms,
                                 std::vector<BoundaryAtom> boundary_atoms,
                                 std::vector<DensityPiece> boundary_density)
    : s_(s),
      disc_atoms_(std::move(disc_atoms)),
      boundary_atoms_(std::move(boundary_atoms)),
      boundary_density_(std::move(boundary_density)) {
    if (s < 0) throw std::invalid_argument("genus level s must be >= 0");
    for (const auto& a : disc_atoms_) {
        if (!(a.weight > 0.0))
            throw std::invalid_argument("complete-measure disc atom mass must be positive");
    }
    for (auto& a : boundary_atoms_) a.theta = wrap_angle(a.theta);
    validate_density(boundary_density_);
}

bool CompleteMeasure::has_signed_part() const {
    for (const auto& a : boundary_atoms_)
        if (a.mass < 0.0) return true;
    for (const auto& d : boundary_density_)
        if (d.value < 0.0) return true;
    return false;
}

double CompleteMeasure::total() const {
    CompensatedSum acc;
    for (const auto& a : disc_atoms_) acc.add(a.weight);
    for (const auto& a : boundary_atoms_) acc.add(a.mass);
    for (const auto& d : boundary_density_) acc.add(d.value * (d.theta_end - d.theta_start));
    return acc.value();
}

double CompleteMeasure::total_variation() const {
    CompensatedSum acc;
    for (const auto& a : disc_atoms_) acc.add(a.weight);
    for (const auto& a : boundary_atoms_) acc.add(std::abs(a.mass));
    for (const auto& d : boundary_density_)
        acc.add(std::abs(d.value) * (d.theta_end - d.theta_start));
    return acc.value();
}

CompleteMeasure build_complete_measure(const DiscMeasure& mu, int s) {
    if (s < 0) throw std::invalid_argument("genus level s must be >= 0");
    std::vector<DiscAtom> atoms;
    atoms.reserve(mu.disc_atoms().size());
    for (const auto& a : mu.disc_atoms()) {
        const double mass = a.weight * std::pow(one_minus_abs(a.point), s + 1);
        atoms.push_back({a.point, mass});
    }
    const double scale = std::tgamma(s + 2.0) / (std::ldexp(1.0, s) * two_pi);
    std::vector<BoundaryAtom> batoms;
    batoms.reserve(mu.boundary_atoms().size());
    for (const auto& a : mu.boundary_atoms()) batoms.push_back({a.theta, scale * a.mass});
    std::vector<DensityPiece> density;
    density.reserve(mu.boundary_density().size());
    for (const auto& d : mu.boundary_density())
        density.push_back({d.theta_start, d.theta_end, scale * d.value});
    return CompleteMeasure(s, std::move(atoms), std::move(batoms), std::move(density));
}

BoxMass box_mass(const CompleteMeasure& lambda, const RegionSpec& region) {
    CompensatedSum val, tv;
    for (const auto& a : lambda.disc_atoms()) {
        if (region_contains(region, a.point)) {
            val.add(a.weight);
            tv.add(std::abs(a.weight));
        }
    }
    for (const auto& a : lambda.boundary_atoms()) {
        const DiscPoint p(std::cos(a.theta), std::sin(a.theta));
        if (region_contains(region, p)) {
            val.add(a.mass);
            tv.add(std::abs(a.mass));
        }
    }
    if (!lambda.boundary_density().empty()) {
        if (auto arc = boundary_arc(region)) {
            for (const auto& d : lambda.boundary_density()) {
                const double len =
                    circular_overlap(d.theta_start, d.theta_end, arc->first, arc->second);
                val.add(d.value * len);
                tv.add(std::abs(d.value) * len);
            }
        }
    }
    return {val.value(), tv.value()};
}

double box_mass_integral(const CompleteMeasure& lambda, double delta, double p,
                         BoxIntegralMode mode, int n_phi, bool total_variation) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("box_mass_integral: delta must be in (0,1]");
    if (!(p >= 1.0)) throw std::domain_error("box_mass_integral: p must be >= 1");
    if (mode == BoxIntegralMode::exact_breakpoints && !lambda.purely_atomic())
        throw std::invalid_argument(
            "box_mass_integral: exact mode requires a purely atomic measure");

    const double hw = pi * delta;
    const double inner = 1.0 - delta;
    std::vector<ArcAtom> arcs;
    arcs.reserve(lambda.disc_atoms().size() + lambda.boundary_atoms().size());
    for (const auto& a : lambda.disc_atoms()) {
        if (a.point.abs2() < inner * inner) continue;
        arcs.push_back({a.point.arg(), hw, total_variation ? std::abs(a.weight) : a.weight});
    }
    for (const auto& a : lambda.boundary_atoms())
        arcs.push_back({a.theta, hw, total_variation ? std::abs(a.mass) : a.mass});

    const StepFunction f = sweep_arcs(arcs);

    if (mode == BoxIntegralMode::exact_breakpoints)
        return std::pow(f.integral_pow(p), 1.0 / p);

    const size_t n_atoms = lambda.disc_atoms().size() + lambda.boundary_atoms().size();
    const int n = n_phi > 0 ? n_phi : static_cast<int>(std::max<size_t>(4096, 64 * n_atoms));
    CompensatedSum acc;
    const double step = two_pi / n;
    for (int i = 0; i < n; ++i) {
        const double phi = -pi + (i + 0.5) * step;
        double v = f.eval(phi);
        for (const auto& d : lambda.boundary_density()) {
            const double len =
                circular_overlap(d.theta_start, d.theta_end, phi - hw, phi + hw);
            v += (total_variation ? std::abs(d.value) : d.value) * len;
        }
        acc.add(std::pow(v, p));
    }
    return std::pow(acc.value() * step, 1.0 / p);
}

double counting_n(const DiscMeasure& mu, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("counting_n: r must be in [0,1)");
    CompensatedSum acc;
    for (const auto& a : mu.disc_atoms())
        if (a.point.abs2() <= r * r) acc.add(a.weight);
    return acc.value();
}

double counting_nu(const DiscMeasure& mu, double r, double phi) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("counting_nu: r must be in [0,1)");
    const AnnulusSector sector(r, phi, 0.5 * (1.0 - r));
    CompensatedSum acc;
    for (const auto& a : mu.disc_atoms())
        if (region_contains(sector, a.point)) acc.add(a.weight);
    return acc.value();
}

PeriodicMeasure::PeriodicMeasure(std::vector<BoundaryAtom> atoms, std::vector<DensityPiece> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
    for (auto& a : atoms_) {
        if (!(a.mass > 0.0)) throw std::invalid_argument("periodic measure atoms must be positive");
        a.theta = wrap_angle(a.theta);
    }
    for (const auto& d : density_)
        if (d.value < 0.0)
            throw std::invalid_argument("periodic measure density must be non-negative");
    validate_density(density_);
}

double PeriodicMeasure::total() const {
    CompensatedSum acc;
    for (const auto& a : atoms_) acc.add(a.mass);
    for (const auto& d : density_) acc.add(d.value * (d.theta_end - d.theta_start));
    return acc.value();
}

double PeriodicMeasure::open_interval_mass(double center, double delta) const {
    if (delta >= pi) return total();
    CompensatedSum acc;
    for (const auto& a : atoms_)
        if (std::abs(wrap_angle(a.theta - center)) < delta) acc.add(a.mass);
    for (const auto& d : density_)
        acc.add(d.value *
                circular_overlap(d.theta_start, d.theta_end, center - delta, center + delta));
    return acc.value();
}

Lemma1Result lemma1_check(const PeriodicMeasure& nu, double p, double delta) {
    if (!(p >= 1.0)) throw std::domain_error("lemma1_check: p must be >= 1");
    if (!(delta > 0.0 && delta < pi)) throw std::domain_error("lemma1_check: delta out of (0,pi)");

    const bool atomic = nu.density().empty();
    const int n_grid =
        static_cast<int>(std::max<size_t>(8192, 64 * nu.atoms().size()));

    CompensatedSum lhs;
    for (const auto& a : nu.atoms())
        lhs.add(a.mass * std::pow(nu.open_interval_mass(a.theta, delta), p - 1.0));
    if (!atomic) {
        const double step = two_pi / n_grid;
        for (int i = 0; i < n_grid; ++i) {
            const double t = -pi + (i + 0.5) * step;
            double g = 0.0;
            for (const auto& d : nu.density()) {
                double shifted = t + two_pi * std::ceil((d.theta_start - t) / two_pi);
                if (shifted < d.theta_end) g += d.value;
            }
            if (g != 0.0)
                lhs.add(g * std::pow(nu.open_interval_mass(t, delta), p - 1.0) * step);
        }
    }

    double integral = 0.0;
    if (atomic) {
        std::vector<ArcAtom> arcs;
        arcs.reserve(nu.atoms().size());
        for (const auto& a : nu.atoms()) arcs.push_back({a.theta, delta, a.mass});
        integral = sweep_arcs(arcs).integral_pow(p);
    } else {
        CompensatedSum acc;
        const double step = two_pi / n_grid;
        for (int i = 0; i < n_grid; ++i) {
            const double t = -pi + (i + 0.5) * step;
            acc.add(std::pow(nu.open_interval_mass(t, delta), p));
        }
        integral = acc.value() * step;
    }
    const double rhs = std::pow(2.0, p + 1.0) / delta * integral;
    return {lhs.value(), rhs, lhs.value() <= rhs * (1.0 + 1e-9)};
}

}  // namespace discgrowth
