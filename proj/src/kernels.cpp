#include "discgrowth/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace discgrowth {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double one_minus_abs(const DiscPoint& p) { return (1.0 - p.abs2()) / (1.0 + p.abs()); }

// Re sum_{j>=s+1} w^j / j, the tail of -log(1-w); requires |w| < 1 and
// converges geometrically.  This is -log|E(w,s)| without the cancellation of
// forming log|1-w| and the partial sum separately.
double primary_tail(std::complex<double> w, int s) {
    std::complex<double> wp = std::pow(w, s + 1);
    CompensatedSum acc;
    for (int j = s + 1; j < 4096; ++j) {
        const double term = wp.real() / j;
        acc.add(term);
        wp *= w;
        if (std::abs(wp) < 1e-18 * (std::abs(acc.value()) + 1e-300) * j) break;
    }
    return acc.value();
}

std::complex<double> int_pow(std::complex<double> w, int n) {
    std::complex<double> r = 1.0;
    while (n-- > 0) r *= w;
    return r;
}

}  // namespace

double log_primary_factor(std::complex<double> w, int s) {
    if (s < 0) throw std::domain_error("log_primary_factor: s must be >= 0");
    if (w == std::complex<double>(1.0, 0.0)) return -inf;
    if (std::abs(w) < 0.5) return -primary_tail(w, s);
    double result = 0.5 * std::log(std::norm(1.0 - w));
    std::complex<double> wp = 1.0;
    for (int j = 1; j <= s; ++j) {
        wp *= w;
        result += wp.real() / j;
    }
    return result;
}

double kernel_K(const DiscPoint& z, const DiscPoint& zeta) {
    if (z.on_boundary()) throw std::domain_error("kernel_K: |z| must be < 1");
    if (zeta.on_boundary()) return poisson_kernel(z.value(), zeta.arg());
    const std::complex<double> diff = z.value() - zeta.value();
    const double d2 = std::norm(diff);
    if (d2 == 0.0) return inf;
    const std::complex<double> den = 1.0 - z.value() * std::conj(zeta.value());
    if (d2 < singular_pseudo_distance * singular_pseudo_distance * std::norm(den)) return inf;
    // K = log(1 + (1-|z|^2)(1-|zeta|^2)/|z-zeta|^2) / (2(1-|zeta|)); the
    // log1p form stays accurate as |zeta| -> 1.
    const double num = (1.0 - z.abs2()) * (1.0 - zeta.abs2());
    return std::log1p(num / d2) / (2.0 * one_minus_abs(zeta));
}

double kernel_Ks(const DiscPoint& z, const DiscPoint& zeta, int s) {
    if (s < 0) throw std::domain_error("kernel_Ks: s must be >= 0");
    if (z.on_boundary()) throw std::domain_error("kernel_Ks: |z| must be < 1");
    if (s == 0) {
        if (!zeta.on_boundary()) {
            // the conventional diagonal marker for K_s is -infinity
            const std::complex<double> diff = z.value() - zeta.value();
            const std::complex<double> den = 1.0 - z.value() * std::conj(zeta.value());
            if (std::norm(diff) <
                singular_pseudo_distance * singular_pseudo_distance * std::norm(den))
                return -inf;
        }
        return kernel_K(z, zeta);
    }
    if (zeta.on_boundary()) {
        const std::complex<double> w =
            1.0 - z.value() * std::polar(1.0, -zeta.arg());
        const double re_inv = (1.0 / int_pow(w, s + 1)).real();
        return std::ldexp(1.0, s + 1) / (s + 1) * re_inv;
    }
    const std::complex<double> diff = z.value() - zeta.value();
    const std::complex<double> den = 1.0 - z.value() * std::conj(zeta.value());
    if (std::norm(diff) < singular_pseudo_distance * singular_pseudo_distance * std::norm(den))
        return -inf;
    const std::complex<double> a = (1.0 - zeta.abs2()) / den;
    return -log_primary_factor(a, s) / std::pow(one_minus_abs(zeta), s + 1);
}

SchwarzPoisson kernel_PqSq(const DiscPoint& z, double q) {
    if (!(q > -1.0)) throw std::domain_error("kernel_PqSq: q must be > -1");
    if (z.on_boundary()) throw std::domain_error("kernel_PqSq: |z| must be < 1");
    const double gamma = std::tgamma(1.0 + q);
    const std::complex<double> S =
        gamma * (2.0 * std::pow(1.0 - z.value(), -(q + 1.0)) - 1.0);
    return {S, S.real()};
}

double poisson_kernel(std::complex<double> z, double theta) {
    const std::complex<double> zeta = std::polar(1.0, theta);
    return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

double representation_boundary_kernel(std::complex<double> z, double theta, int s) {
    const std::complex<double> w = 1.0 - z * std::polar(1.0, -theta);
    const double re_inv = (1.0 / int_pow(w, s + 1)).real();
    return std::ldexp(1.0, s) * (2.0 * re_inv - 1.0) / (s + 1);
}

}  // namespace discgrowth
