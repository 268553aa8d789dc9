#include "discgrowth/disc_geometry.hpp"

namespace discgrowth {

std::complex<double> mobius_A(const DiscPoint& z, const DiscPoint& zeta) {
    if (z.on_boundary()) throw std::domain_error("mobius_A: |z| must be < 1");
    const std::complex<double> denom = 1.0 - z.value() * std::conj(zeta.value());
    return (1.0 - zeta.abs2()) / denom;
}

double pseudo_distance(const DiscPoint& z, const DiscPoint& w) {
    if (z.on_boundary() || w.on_boundary())
        throw std::domain_error("pseudo_distance: arguments must be interior");
    const std::complex<double> num = z.value() - w.value();
    const std::complex<double> den = 1.0 - z.value() * std::conj(w.value());
    return std::abs(num / den);
}

namespace {

bool angle_within(double theta, double center, double halfwidth) {
    if (halfwidth >= pi) return true;
    return std::abs(wrap_angle(theta - center)) <= halfwidth;
}

}  // namespace

bool region_contains(const RegionSpec& region, const DiscPoint& zeta) {
    return std::visit(
        [&](const auto& reg) -> bool {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, CarlesonBox>) {
                const double inner = 1.0 - reg.delta;
                if (zeta.abs2() < inner * inner) return false;
                return angle_within(zeta.arg(), reg.phi, pi * reg.delta);
            } else if constexpr (std::is_same_v<T, AnnulusSector>) {
                const double rho = zeta.abs();
                if (rho < reg.r || rho > 0.5 * (1.0 + reg.r)) return false;
                return angle_within(zeta.arg(), reg.phi, reg.sigma);
            } else if constexpr (std::is_same_v<T, SquareBox>) {
                if (std::abs(zeta.abs() - reg.center.abs()) > reg.sigma) return false;
                return angle_within(zeta.arg(), reg.center.arg(), reg.sigma);
            } else if constexpr (std::is_same_v<T, PseudoDisc>) {
                const std::complex<double> c = reg.center.value();
                const std::complex<double> num = c - zeta.value();
                const std::complex<double> den = 1.0 - std::conj(c) * zeta.value();
                return std::norm(num) <= reg.sigma * reg.sigma * std::norm(den);
            } else {
                static_assert(std::is_same_v<T, ClosedDisc>);
                return zeta.abs2() <= reg.radius * reg.radius;
            }
        },
        region);
}

std::optional<std::pair<double, double>> boundary_arc(const RegionSpec& region) {
    constexpr std::pair<double, double> full{-pi, pi};
    return std::visit(
        [&](const auto& reg) -> std::optional<std::pair<double, double>> {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, CarlesonBox>) {
                const double hw = pi * reg.delta;
                if (hw >= pi) return full;
                const double lo = wrap_angle(reg.phi - hw);
                return std::pair{lo, lo + 2.0 * hw};
            } else if constexpr (std::is_same_v<T, AnnulusSector>) {
                // 1 <= (1+r)/2 only when r = 1; the sector then degenerates
                // to the boundary arc itself.
                if (reg.r < 1.0) return std::nullopt;
                const double hw = std::min(reg.sigma, pi);
                if (hw >= pi) return full;
                const double lo = wrap_angle(reg.phi - hw);
                return std::pair{lo, lo + 2.0 * hw};
            } else if constexpr (std::is_same_v<T, SquareBox>) {
                if (std::abs(1.0 - reg.center.abs()) > reg.sigma) return std::nullopt;
                const double hw = std::min(reg.sigma, pi);
                if (hw >= pi) return full;
                const double lo = wrap_angle(reg.center.arg() - hw);
                return std::pair{lo, lo + 2.0 * hw};
            } else if constexpr (std::is_same_v<T, PseudoDisc>) {
                // pseudo_distance to the boundary is identically 1.
                if (reg.sigma >= 1.0) return full;
                return std::nullopt;
            } else {
                static_assert(std::is_same_v<T, ClosedDisc>);
                if (reg.radius >= 1.0) return full;
                return std::nullopt;
            }
        },
        region);
}

}  // namespace discgrowth
