#include "discgrowth/classical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>

namespace discgrowth {

namespace {

bool is_power_of_two(size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

void require_boundary(const DiscPoint& zeta, const char* who) {
    if (!zeta.on_boundary()) throw std::domain_error(std::string(who) + ": |zeta| must be 1");
}

}  // namespace

double i_mean(const ZeroSequence& zeros, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("i_mean: r must be in [0,1)");
    for (const auto& z : zeros) {
        if (z.point.abs() == r) {
            std::clog << "i_mean: r collides with a zero modulus, perturbing by 1e-14\n";
            r = std::min(r + 1e-14, 1.0 - 1e-16);
            break;
        }
    }
    const double m2 = circle_mean_mp(SubharmonicSpec::blaschke(zeros), r, 2.0);
    return m2 * m2;
}

double j_sum(const ZeroSequence& zeros, double r, double tol) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("j_sum: r must be in (0,1)");
    if (!(tol > 0.0)) throw std::domain_error("j_sum: tol must be positive");

    // Inner sums rewritten with bases of modulus <= 1 so r^{-k} never
    // overflows: (r^k - r^{-k}) conj(a)^k = (r conj(a))^k - (conj(a)/r)^k and
    // r^k (conj(a)^k - a^{-k}) = (r conj(a))^k - (r/a)^k.
    struct Track {
        std::complex<double> base1, base2;  // (r conj(a)), and conj(a)/r or r/a
        std::complex<double> pow1, pow2;
        double mult;
    };
    std::vector<Track> tracks;
    bool tie_note = false;
    for (const auto& z : zeros) {
        const std::complex<double> a = z.point.value();
        if (a == std::complex<double>(0.0, 0.0))
            throw std::domain_error("j_sum: zeros at the origin are not admissible (a^-k)");
        const double mod = z.point.abs();
        if (mod == r) tie_note = true;
        Track t;
        t.base1 = r * std::conj(a);
        t.base2 = (mod <= r) ? std::conj(a) / r : r / a;
        t.pow1 = t.pow2 = 1.0;
        t.mult = z.multiplicity;
        tracks.push_back(t);
    }
    if (tie_note)
        std::clog << "j_sum: zeros with |a| = r assigned to the |a| <= r group\n";

    CompensatedSum sum;
    int consecutive_small = 0;
    const long k_cap = 1000000;
    for (long k = 1; k <= k_cap; ++k) {
        std::complex<double> inner = 0.0;
        for (auto& t : tracks) {
            t.pow1 *= t.base1;
            t.pow2 *= t.base2;
            inner += t.mult * (t.pow1 - t.pow2);
        }
        const double term = std::norm(inner) / (static_cast<double>(k) * k);
        sum.add(term);
        if (term < tol * (sum.value() + 1.0))
            ++consecutive_small;
        else
            consecutive_small = 0;
        if (consecutive_small >= 10 && k >= 50) break;
        if ((k & 255) == 0) {
            // drop zeros whose power terms can no longer matter
            std::erase_if(tracks, [&](const Track& t) {
                return std::norm(t.pow1) < 1e-60 && std::norm(t.pow2) < 1e-60;
            });
            if (tracks.empty()) break;
        }
    }
    return sum.value();
}

double psi_r(const ZeroSequence& zeros, const DiscPoint& zeta, double r) {
    require_boundary(zeta, "psi_r");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("psi_r: r must be in [0,1)");
    CompensatedSum acc;
    for (const auto& z : zeros) {
        const double mod = z.point.abs();
        if (mod < r || mod >= 1.0) continue;
        const double gap = 1.0 - mod;
        acc.add(z.multiplicity * gap * gap / std::norm(zeta.value() - z.point.value()));
    }
    return acc.value();
}

double stolz_count_Phi(const ZeroSequence& zeros, const DiscPoint& zeta) {
    require_boundary(zeta, "stolz_count_Phi");
    CompensatedSum acc;
    for (const auto& z : zeros) {
        const double lhs = std::abs(1.0 - z.point.value() * std::conj(zeta.value()));
        if (lhs < 2.0 * (1.0 - z.point.abs())) acc.add(z.multiplicity);
    }
    return acc.value();
}

double vm_smoothed_condition(const ZeroSequence& zeros, double r, double p, int n_grid) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("vm_smoothed_condition: r must be in [0,1)");
    if (n_grid < 4) throw std::domain_error("vm_smoothed_condition: n_grid too small");
    const double step = two_pi / n_grid;
    std::vector<double> psi(n_grid), cs(n_grid), sn(n_grid);
    for (int i = 0; i < n_grid; ++i) {
        const double theta = i * step;
        cs[i] = std::cos(theta);
        sn[i] = std::sin(theta);
        psi[i] = psi_r(zeros, DiscPoint(cs[i], sn[i]), r);
    }
    const double one_minus_r2 = 1.0 - r * r;
    CompensatedSum outer;
    for (int j = 0; j < n_grid; ++j) {
        CompensatedSum inner;
        for (int i = 0; i < n_grid; ++i) {
            // |re^{i theta} - e^{i phi}|^2 = 1 - 2r cos(theta-phi) + r^2
            const double cos_diff = cs[i] * cs[j] + sn[i] * sn[j];
            inner.add(one_minus_r2 / (1.0 - 2.0 * r * cos_diff + r * r) * psi[i]);
        }
        outer.add(std::pow(inner.value() * step, p));
    }
    return outer.value() * step;
}

double linden_region_count(const ZeroSequence& zeros, double r, double phi, double kappa,
                           double gamma) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("linden_region_count: r must be in (0,1)");
    if (!(kappa > 0.0) || !(gamma >= 0.0))
        throw std::domain_error("linden_region_count: need kappa > 0, gamma >= 0");
    const AnnulusSector sector(r, phi, kappa * std::pow(1.0 - r, gamma));
    CompensatedSum acc;
    for (const auto& z : zeros)
        if (region_contains(sector, z.point)) acc.add(z.multiplicity);
    return acc.value();
}

BoundaryFunctionSample::BoundaryFunctionSample(std::vector<double> v) : values(std::move(v)) {
    if (!is_power_of_two(values.size()) || values.size() < 256)
        throw std::invalid_argument(
            "BoundaryFunctionSample: grid size must be a power of two >= 256");
}

double boundary_lp_norm(const BoundaryFunctionSample& sample, double p, bool xlogx) {
    const int n = sample.size();
    CompensatedSum acc;
    if (xlogx) {
        for (double v : sample.values)
            if (v > 1.0) acc.add(v * std::log(v));
        return acc.value() / n;
    }
    if (!(p >= 1.0)) throw std::domain_error("boundary_lp_norm: p must be >= 1");
    for (double v : sample.values) acc.add(std::pow(std::abs(v), p));
    return std::pow(acc.value() / n, 1.0 / p);
}

BoundaryFunctionSample sample_psi_r(const ZeroSequence& zeros, double r, int n) {
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
        const double theta = two_pi * i / n;
        values[i] = psi_r(zeros, DiscPoint(std::cos(theta), std::sin(theta)), r);
    }
    return BoundaryFunctionSample(std::move(values));
}

BoundaryFunctionSample sample_Phi(const ZeroSequence& zeros, int n) {
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
        const double theta = two_pi * i / n;
        values[i] = stolz_count_Phi(zeros, DiscPoint(std::cos(theta), std::sin(theta)));
    }
    return BoundaryFunctionSample(std::move(values));
}

}  // namespace discgrowth
