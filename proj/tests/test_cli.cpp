#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "discgrowth/measure_io.hpp"

namespace fs = std::filesystem;
namespace dg = discgrowth;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "discgrowth_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("example2 subcommand") {
    const auto r = run_cli("example2 --q 0 --z 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
    // complex pow keeps the last ulp open, so compare numerically
    CHECK(std::stod(run_cli("example2 --q 1 --z 0.5i").out) ==
          doctest::Approx(0.48).epsilon(1e-14));
}

TEST_CASE("gen-example1 writes a loadable file and prints s") {
    const fs::path file = temp_dir() / "zeros_b0.json";
    const auto r = run_cli("gen-example1 --alpha 1 --beta 0 --kmax 3 --out " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    const auto zeros = dg::zeros_from_json(dg::load_json_file(file.string()));
    REQUIRE(zeros.size() == 3);
    CHECK(zeros[1].point.re() == 0.75);
    CHECK(zeros[2].multiplicity == 8.0);

    // round-trip: the generated file reproduces the in-process sequence bit
    // for bit
    const auto direct = dg::gen_example1(1.0, 0.0, 3);
    for (size_t i = 0; i < zeros.size(); ++i) {
        CHECK(zeros[i].point.re() == direct.zeros[i].point.re());
        CHECK(zeros[i].point.im() == direct.zeros[i].point.im());
        CHECK(zeros[i].multiplicity == direct.zeros[i].multiplicity);
    }
}

TEST_CASE("eval subcommand") {
    const fs::path file = temp_dir() / "zeros_half.json";
    dg::save_json_file(file.string(), dg::zeros_to_json({{dg::DiscPoint(0.5, 0.0), 1.0}}));
    const auto r = run_cli("eval --input " + file.string() + " --z 0");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(run_cli("eval --input " + file.string() + " --z 0.5").out == "-inf\n");
}

TEST_CASE("means emits deterministic CSV") {
    const fs::path file = temp_dir() / "zeros_m.json";
    dg::save_json_file(file.string(), dg::zeros_to_json({{dg::DiscPoint(0.5, 0.0), 1.0},
                                                         {dg::DiscPoint(0.0, 0.8), 2.0}}));
    const std::string args = "means --input " + file.string() + " --p 2 --r-dyadic 3:6";
    const auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out.substr(0, 6) == "r,m_p\n");
    CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 5);  // header + 4 rows
    const auto second = run_cli(args);
    CHECK(first.out == second.out);  // byte identical
}

TEST_CASE("boxmass matches the boundary-atom closed form") {
    const fs::path file = temp_dir() / "measure_atom.json";
    // psi*-mass 2pi at theta = 0 stores unit lambda-mass at s = 0
    dg::save_json_file(file.string(),
                       dg::measure_to_json(dg::DiscMeasure({}, {{0.0, dg::two_pi}}, {}), 0));
    const auto r = run_cli("boxmass --input " + file.string() + " --p 2 --delta-dyadic 2:5");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "delta,L");
    for (int j = 2; j <= 5; ++j) {
        REQUIRE(std::getline(lines, line));
        const auto comma = line.find(',');
        const double delta = std::stod(line.substr(0, comma));
        const double L = std::stod(line.substr(comma + 1));
        CHECK(delta == std::ldexp(1.0, -j));
        CHECK(L == doctest::Approx(std::sqrt(dg::two_pi * delta)).epsilon(1e-12));
    }
}

TEST_CASE("fit subcommand reads the boxmass table") {
    const fs::path measure = temp_dir() / "measure_atom2.json";
    dg::save_json_file(measure.string(),
                       dg::measure_to_json(dg::DiscMeasure({}, {{0.0, dg::two_pi}}, {}), 0));
    const fs::path csv = temp_dir() / "table.csv";
    {
        const auto r = run_cli("boxmass --input " + measure.string() + " --p 2 --delta-dyadic 2:7");
        std::ofstream out(csv);
        out << r.out;
    }
    const auto fit = run_cli("fit --input " + csv.string() + " --x-col delta --y-col L");
    CHECK(fit.exit_code == 0);
    const auto j = nlohmann::json::parse(fit.out);
    CHECK(j["exponent"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j["r_squared"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classical subcommand emits both tables") {
    const fs::path file = temp_dir() / "zeros_c.json";
    dg::save_json_file(file.string(), dg::zeros_to_json({{dg::DiscPoint(0.9, 0.0), 1.0}}));
    const auto table = run_cli("classical --input " + file.string() + " --r-dyadic 2:5");
    CHECK(table.exit_code == 0);
    CHECK(table.out.substr(0, 6) == "r,I,J\n");
    CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 5);

    const auto boundary =
        run_cli("classical --input " + file.string() + " --r 0 --theta-grid 256");
    CHECK(boundary.exit_code == 0);
    CHECK(boundary.out.substr(0, 15) == "theta,psi0,Phi\n");
    CHECK(std::count(boundary.out.begin(), boundary.out.end(), '\n') == 257);
}

TEST_CASE("verify subcommand exit codes") {
    // consistent: boundary-atom measure, representation means
    const fs::path good = temp_dir() / "measure_ex2.json";
    dg::save_json_file(good.string(),
                       dg::measure_to_json(dg::DiscMeasure({}, {{0.0, -dg::pi}}, {}), 0));
    const auto ok = run_cli("verify --theorem box --input " + good.string() +
                            " --p 2 --tolerance 0.1 --delta-dyadic 4:9 --r-dyadic 4:9");
    CHECK(ok.exit_code == 0);
    const auto report = nlohmann::json::parse(ok.out);
    CHECK(report["consistent"].get<bool>());
    CHECK(report["direction"] == "sufficiency");

    // growth harness whose counting hypothesis fails -> exit 1
    const fs::path lattice = temp_dir() / "zeros_lat.json";
    run_cli("gen-example1 --alpha 1 --beta 0.5 --kmax 10 --out " + lattice.string());
    const auto bad = run_cli("verify --theorem growth --input " + lattice.string() +
                             " --s 2 --alpha 0.05 --p 2 --tolerance 0.1 --r-dyadic 3:7");
    CHECK(bad.exit_code == 1);

    // malformed input -> exit 2
    const fs::path broken = temp_dir() / "broken.json";
    std::ofstream(broken) << "{ not json";
    CHECK(run_cli("verify --theorem box --input " + broken.string()).exit_code == 2);
    CHECK(run_cli("eval --input " + broken.string() + " --z 0").exit_code == 2);
    CHECK(run_cli("means --no-such-flag").exit_code == 2);
}
