#include <doctest.h>

#include <cmath>
#include <random>

#include "discgrowth/measure_io.hpp"
#include "discgrowth/measures.hpp"

using namespace discgrowth;

namespace {

CompleteMeasure from_zeros_at_level(const ZeroSequence& zeros, int s) {
    return build_complete_measure(DiscMeasure::from_zeros(zeros), s);
}

PeriodicMeasure random_periodic(std::mt19937_64& rng, bool with_density) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> n_atoms(1, 50);
    std::vector<BoundaryAtom> atoms;
    const int n = n_atoms(rng);
    for (int i = 0; i < n; ++i)
        atoms.push_back({two_pi * unit(rng) - pi, std::exp(3.0 * unit(rng) - 1.5)});
    std::vector<DensityPiece> density;
    if (with_density) {
        // up to three disjoint pieces cut from sorted angles
        double cuts[6];
        for (double& c : cuts) c = two_pi * unit(rng) - pi;
        std::sort(std::begin(cuts), std::end(cuts));
        for (int i = 0; i + 1 < 6; i += 2)
            if (cuts[i + 1] > cuts[i] + 1e-3)
                density.push_back({cuts[i], cuts[i + 1], 2.0 * unit(rng)});
    }
    return PeriodicMeasure(std::move(atoms), std::move(density));
}

}  // namespace

TEST_CASE("build_complete_measure disc atom masses") {
    const CompleteMeasure l0 = from_zeros_at_level({{DiscPoint(0.9, 0.0), 1.0}}, 0);
    REQUIRE(l0.disc_atoms().size() == 1);
    CHECK(l0.disc_atoms()[0].weight == doctest::Approx(0.1).epsilon(1e-12));

    const CompleteMeasure l1 = from_zeros_at_level({{DiscPoint(0.9, 0.0), 2.0}}, 1);
    CHECK(l1.disc_atoms()[0].weight == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("build_complete_measure boundary normalization") {
    const double m0 = 3.7;
    const DiscMeasure mu({}, {{0.0, m0}}, {});
    const CompleteMeasure lambda = build_complete_measure(mu, 0);
    REQUIRE(lambda.boundary_atoms().size() == 1);
    CHECK(lambda.boundary_atoms()[0].mass == doctest::Approx(m0 / two_pi).epsilon(1e-14));
    // level s scale is (s+1)!/(2^s 2pi)
    const CompleteMeasure l2 = build_complete_measure(mu, 2);
    CHECK(l2.boundary_atoms()[0].mass ==
          doctest::Approx(m0 * 6.0 / (4.0 * two_pi)).epsilon(1e-14));
    // Blaschke-type budget: lambda(closed disc) = sum m_n (1-|a_n|) at s=0
    const CompleteMeasure lb =
        from_zeros_at_level({{DiscPoint(0.5, 0.0), 1.0}, {DiscPoint(0.0, 0.9), 3.0}}, 0);
    CHECK(lb.total() == doctest::Approx(0.5 + 3.0 * 0.1).epsilon(1e-12));
}

TEST_CASE("box_mass examples") {
    const CompleteMeasure lambda = from_zeros_at_level({{DiscPoint(0.9, 0.0), 1.0}}, 0);
    CHECK(box_mass(lambda, CarlesonBox(0.0, 0.2)).value == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(box_mass(lambda, CarlesonBox(pi, 0.05)).value == 0.0);

    const ZeroSequence two = {{DiscPoint(0.9, 0.0), 1.0},
                              {DiscPoint(0.99 * std::cos(0.1), 0.99 * std::sin(0.1)), 1.0}};
    const CompleteMeasure l2 = from_zeros_at_level(two, 0);
    // brute-force membership per atom
    const CarlesonBox box(0.05, 0.3);
    double expected = 0.0;
    for (const auto& a : l2.disc_atoms())
        if (region_contains(box, a.point)) expected += a.weight;
    CHECK(expected > 0.0);
    CHECK(box_mass(l2, box).value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("box_mass handles boundary density and signed parts") {
    // uniform density 1/(2pi) over the circle: box mass = arc fraction
    const CompleteMeasure lambda(0, {}, {}, {{-pi, pi, 1.0 / two_pi}});
    const auto bm = box_mass(lambda, CarlesonBox(0.3, 0.25));
    CHECK(bm.value == doctest::Approx(0.25).epsilon(1e-12));
    const CompleteMeasure signed_lambda(0, {}, {{0.0, -2.0}}, {});
    const auto sm = box_mass(signed_lambda, CarlesonBox(0.0, 0.1));
    CHECK(sm.value == doctest::Approx(-2.0));
    CHECK(sm.total_variation == doctest::Approx(2.0));
    CHECK(signed_lambda.has_signed_part());
}

TEST_CASE("box_mass is monotone under region growth") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        ZeroSequence zeros;
        const int n = 1 + static_cast<int>(unit(rng) * 20);
        for (int i = 0; i < n; ++i) {
            const double r = 0.999 * std::sqrt(unit(rng));
            const double t = two_pi * unit(rng) - pi;
            zeros.push_back({DiscPoint(r * std::cos(t), r * std::sin(t)), 1.0});
        }
        const CompleteMeasure lambda = from_zeros_at_level(zeros, 0);
        const double phi = two_pi * unit(rng) - pi;
        const double d1 = 0.01 + 0.4 * unit(rng);
        const double d2 = d1 + 0.4 * unit(rng);
        CHECK(box_mass(lambda, CarlesonBox(phi, d1)).value <=
              box_mass(lambda, CarlesonBox(phi, d2)).value + 1e-12);
    }
}

TEST_CASE("box_mass_integral boundary atom closed form") {
    // stored mass 1 at theta = 0: L(delta) = (2 pi delta)^{1/p}
    const CompleteMeasure lambda(0, {}, {{0.0, 1.0}}, {});
    CHECK(box_mass_integral(lambda, 0.1, 2.0) ==
          doctest::Approx(std::sqrt(two_pi * 0.1)).epsilon(1e-12));
    CHECK(std::sqrt(two_pi * 0.1) == doctest::Approx(0.79266).epsilon(1e-4));
    CHECK(box_mass_integral(CompleteMeasure(0, {}, {}, {}), 0.37, 2.0) == 0.0);
}

TEST_CASE("box_mass_integral exact mode matches the grid oracle") {
    const ZeroSequence two = {{DiscPoint(0.9, 0.0), 1.0},
                              {DiscPoint(0.99 * std::cos(0.1), 0.99 * std::sin(0.1)), 1.0}};
    const CompleteMeasure l2 = from_zeros_at_level(two, 0);
    const double exact = box_mass_integral(l2, 0.3, 2.0, BoxIntegralMode::exact_breakpoints);
    const double grid = box_mass_integral(l2, 0.3, 2.0, BoxIntegralMode::grid, 1 << 16);
    CHECK(grid == doctest::Approx(exact).epsilon(1e-4));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        ZeroSequence zeros;
        const int n = 1 + static_cast<int>(unit(rng) * 30);
        for (int i = 0; i < n; ++i) {
            const double r = 0.5 + 0.499 * unit(rng);
            const double t = two_pi * unit(rng) - pi;
            zeros.push_back({DiscPoint(r * std::cos(t), r * std::sin(t)), 1.0 + unit(rng)});
        }
        const CompleteMeasure lambda = from_zeros_at_level(zeros, 0);
        const double delta = 0.05 + 0.9 * unit(rng);
        const double p = 1.0 + 2.0 * unit(rng);
        const double e = box_mass_integral(lambda, delta, p, BoxIntegralMode::exact_breakpoints);
        const double g = box_mass_integral(lambda, delta, p, BoxIntegralMode::grid, 1 << 16);
        if (e > 0.0) CHECK(g == doctest::Approx(e).epsilon(2e-3));
    }
}

TEST_CASE("box_mass_integral rejects bad modes") {
    const CompleteMeasure with_density(0, {}, {}, {{0.0, 1.0, 1.0}});
    CHECK_THROWS_AS(box_mass_integral(with_density, 0.1, 2.0, BoxIntegralMode::exact_breakpoints),
                    std::invalid_argument);
    CHECK_NOTHROW(box_mass_integral(with_density, 0.1, 2.0, BoxIntegralMode::grid, 4096));
    const CompleteMeasure empty;
    CHECK_THROWS_AS(box_mass_integral(empty, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(box_mass_integral(empty, 1.5, 2.0), std::domain_error);
}

TEST_CASE("counting_n") {
    const DiscMeasure mu = DiscMeasure::from_zeros(
        {{DiscPoint(0.5, 0.0), 1.0}, {DiscPoint(0.9, 0.0), 1.0}});
    CHECK(counting_n(mu, 0.7) == 1.0);
    CHECK(counting_n(mu, 0.9) == 2.0);  // closed disc
    const DiscMeasure triple = DiscMeasure::from_zeros({{DiscPoint(0.5, 0.0), 3.0}});
    CHECK(counting_n(triple, 0.6) == 3.0);
}

TEST_CASE("counting_nu") {
    const DiscMeasure a = DiscMeasure::from_zeros({{DiscPoint(0.85, 0.0), 1.0}});
    CHECK(counting_nu(a, 0.8, 0.0) == 1.0);
    const DiscMeasure b = DiscMeasure::from_zeros({{DiscPoint(0.95, 0.0), 1.0}});
    CHECK(counting_nu(b, 0.8, 0.0) == 0.0);
    const DiscMeasure c = DiscMeasure::from_zeros(
        {{DiscPoint(0.85 * std::cos(0.05), 0.85 * std::sin(0.05)), 1.0}});
    CHECK(counting_nu(c, 0.8, 0.0) == 1.0);
}

TEST_CASE("counting_n monotone and nu bounded by annulus increment") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ZeroSequence zeros;
    for (int i = 0; i < 60; ++i) {
        const double r = 0.999 * std::sqrt(unit(rng));
        const double t = two_pi * unit(rng) - pi;
        zeros.push_back({DiscPoint(r * std::cos(t), r * std::sin(t)), 1.0});
    }
    const DiscMeasure mu = DiscMeasure::from_zeros(zeros);
    double prev = 0.0;
    for (double r = 0.05; r < 1.0; r += 0.05) {
        const double n = counting_n(mu, r);
        CHECK(n >= prev);
        prev = n;
    }
    for (int i = 0; i < 50; ++i) {
        const double r = 0.3 + 0.6 * unit(rng);
        const double phi = two_pi * unit(rng) - pi;
        // generic r: no atom sits exactly on |zeta| = r, so the sector count
        // is dominated by the annulus increment of n
        CHECK(counting_nu(mu, r, phi) <=
              counting_n(mu, 0.5 * (1 + r)) - counting_n(mu, r) + 1e-12);
    }
}

TEST_CASE("lemma1_check worked values") {
    // single atom: lhs = 1, rhs = (2^3/0.1) * 0.2 = 16
    const PeriodicMeasure one({{0.0, 1.0}}, {});
    auto r1 = lemma1_check(one, 2.0, 0.1);
    CHECK(r1.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.rhs == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(r1.holds);

    // uniform density 1, p = 1: lhs = 2pi, rhs = (4/0.1) * 0.2 * 2pi = 16pi
    const PeriodicMeasure uniform({}, {{-pi, pi, 1.0}});
    auto r2 = lemma1_check(uniform, 1.0, 0.1);
    CHECK(r2.lhs == doctest::Approx(two_pi).epsilon(1e-6));
    CHECK(r2.rhs == doctest::Approx(16.0 * pi).epsilon(1e-3));
    CHECK(r2.holds);

    // two antipodal atoms: each window sees only its own atom
    const PeriodicMeasure both({{0.0, 1.0}, {pi, 1.0}}, {});
    auto r3 = lemma1_check(both, 2.0, 0.1);
    CHECK(r3.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r3.rhs == doctest::Approx(32.0).epsilon(1e-12));
    CHECK(r3.holds);
}

TEST_CASE("lemma1_check interval endpoints are open") {
    // atoms exactly delta apart never see each other
    const double delta = 0.25;
    const PeriodicMeasure tie({{0.0, 1.0}, {delta, 1.0}}, {});
    auto r = lemma1_check(tie, 2.0, delta);
    CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-12));  // nu(window) = own mass only
    CHECK(r.holds);
    CHECK(tie.open_interval_mass(0.0, delta) == doctest::Approx(1.0));
    CHECK(tie.open_interval_mass(0.0, delta + 1e-9) == doctest::Approx(2.0));
}

TEST_CASE("lemma1 inequality holds on randomized measures") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const PeriodicMeasure nu = random_periodic(rng, trial % 4 == 0);
        const double p = 1.0 + 3.0 * unit(rng);
        const double delta = 0.01 + 0.99 * unit(rng);
        const auto res = lemma1_check(nu, p, delta);
        CHECK(res.holds);
    }
}

TEST_CASE("boundary-only measures obey the periodic box bound") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BoundaryAtom> atoms;
        const int n = 1 + static_cast<int>(unit(rng) * 20);
        for (int i = 0; i < n; ++i)
            atoms.push_back({two_pi * unit(rng) - pi, 0.1 + unit(rng)});
        const CompleteMeasure lambda(0, {}, std::move(atoms), {});
        const double C = lambda.total();
        const double p = 1.0 + 2.0 * unit(rng);
        const double K = std::pow(3.0 * std::pow(2.0 * C, p) * two_pi, 1.0 / p);
        for (int j = 1; j <= 10; ++j) {
            const double delta = std::ldexp(1.0, -j);
            CHECK(box_mass_integral(lambda, delta, p) <= K * std::pow(delta, 1.0 / p) * (1 + 1e-9));
        }
    }
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(DiscMeasure({{DiscPoint(0.5, 0.0), 0.0}}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DiscMeasure({{DiscPoint(1.0, 0.0), 1.0}}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DiscMeasure({}, {}, {{0.5, 0.4, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscMeasure({}, {}, {{0.0, 1.0, 1.0}, {0.5, 1.5, 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PeriodicMeasure({{0.0, -1.0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicMeasure({}, {{0.0, 1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(build_complete_measure(DiscMeasure(), -1), std::invalid_argument);
}

TEST_CASE("JSON schemas use the exact field names and round-trip doubles") {
    const ZeroSequence zeros = {{DiscPoint(0.7071067811865476, 0.1 / 3.0), 7.0}};
    const nlohmann::json zj = zeros_to_json(zeros);
    REQUIRE(zj.contains("zeros"));
    for (const char* key : {"re", "im", "multiplicity"}) CHECK(zj["zeros"][0].contains(key));
    const ZeroSequence back = zeros_from_json(nlohmann::json::parse(zj.dump()));
    CHECK(back[0].point.re() == zeros[0].point.re());  // bit-exact through text
    CHECK(back[0].point.im() == zeros[0].point.im());
    CHECK(back[0].multiplicity == 7.0);

    const DiscMeasure mu({{DiscPoint(0.3, 0.4), 1.25}}, {{0.7, -2.0}}, {{0.0, 1.0, 0.5}});
    const nlohmann::json mj = measure_to_json(mu, 2);
    for (const char* key : {"s", "disc_atoms", "boundary_atoms", "boundary_density"})
        CHECK(mj.contains(key));
    CHECK(mj["disc_atoms"][0].contains("weight"));
    CHECK(mj["boundary_atoms"][0].contains("theta"));
    CHECK(mj["boundary_atoms"][0].contains("mass"));
    for (const char* key : {"theta_start", "theta_end", "value"})
        CHECK(mj["boundary_density"][0].contains(key));
    const MeasureFile round = measure_from_json(nlohmann::json::parse(mj.dump()));
    CHECK(round.s == 2);
    CHECK(round.mu.disc_atoms()[0].weight == 1.25);
    CHECK(round.mu.boundary_atoms()[0].mass == -2.0);
    CHECK_THROWS_AS(measure_from_json(nlohmann::json{{"disc_atoms", nlohmann::json::array()}}),
                    std::invalid_argument);
}
