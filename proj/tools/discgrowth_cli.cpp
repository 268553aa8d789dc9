// Command-line front door: ingest JSON zero-sequence / measure specs, run the
// library computations, emit CSV tables and JSON reports.
//
// Exit codes: 0 success (and consistent verification), 1 inconsistent
// verification, 2 malformed input, 3 numerical non-convergence.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discgrowth/measure_io.hpp"

namespace dg = discgrowth;

namespace {

std::complex<double> parse_complex(const std::string& text) {
    const std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    auto parse_num = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad number: " + t);
        return v;
    };
    // split at the last '+'/'-' that is not a leading sign or exponent sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    if (s.back() == 'i') {
        if (split == std::string::npos)
            return {0.0, parse_num(s.substr(0, s.size() - 1))};
        return {parse_num(s.substr(0, split)),
                parse_num(s.substr(split, s.size() - 1 - split))};
    }
    if (split != std::string::npos)
        throw std::invalid_argument("complex literal must end in 'i': " + s);
    return {parse_num(s), 0.0};
}

dg::DyadicGrid parse_dyadic(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("dyadic grid must be J0:J1, got " + text);
    const int j0 = std::stoi(text.substr(0, colon));
    const int j1 = std::stoi(text.substr(colon + 1));
    if (j1 < j0) throw std::invalid_argument("dyadic grid needs J0 <= J1");
    return {j0, j1};
}

struct LoadedInput {
    bool is_zeros = false;
    dg::ZeroSequence zeros;
    dg::DiscMeasure mu;
    int s = 0;
};

LoadedInput load_input(const std::string& path) {
    const nlohmann::json j = dg::load_json_file(path);
    LoadedInput in;
    if (dg::looks_like_zero_sequence(j)) {
        in.is_zeros = true;
        in.zeros = dg::zeros_from_json(j);
        in.mu = dg::DiscMeasure::from_zeros(in.zeros);
    } else {
        auto mf = dg::measure_from_json(j);
        in.mu = std::move(mf.mu);
        in.s = mf.s;
    }
    return in;
}

void emit_csv_row(std::ostream& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out << ",";
        out << dg::format_double(v);
        first = false;
    }
    out << "\n";
}

// every run echoes its resolved configuration to stderr
void echo_config(const std::string& name, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cerr << name << ":";
    for (const auto& [k, v] : kv) std::cerr << " " << k << "=" << v;
    std::cerr << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"growth diagnostics for analytic and subharmonic functions on the unit disc"};
    app.require_subcommand(1);

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "print log|B(z)| for a zero-sequence file");
    std::string eval_input, eval_z;
    eval_cmd->add_option("--input", eval_input, "zeros JSON file")->required();
    eval_cmd->add_option("--z", eval_z, "evaluation point, a+bi")->required();

    // --- means ---
    auto* means_cmd = app.add_subcommand("means", "CSV of m_p(r,u) on a dyadic r-grid");
    std::string means_input, means_grid;
    double means_p = 2.0, means_tol = 1e-6;
    int means_genus = -1;
    means_cmd->add_option("--input", means_input, "zeros or measure JSON file")->required();
    means_cmd->add_option("--p", means_p, "mean order p >= 1")->required();
    means_cmd->add_option("--r-dyadic", means_grid, "J0:J1 meaning r = 1-2^-j")->required();
    means_cmd->add_option("--tol", means_tol, "quadrature relative tolerance");
    means_cmd->add_option("--genus", means_genus,
                          "evaluate the genus-s canonical integral of the atoms");

    // --- boxmass ---
    auto* box_cmd = app.add_subcommand("boxmass", "CSV of L(delta,p) on a dyadic delta-grid");
    std::string box_input, box_grid;
    double box_p = 2.0;
    bool box_exact = false, box_tv = false;
    int box_genus = -1, box_nphi = 0;
    box_cmd->add_option("--input", box_input, "zeros or measure JSON file")->required();
    box_cmd->add_option("--p", box_p, "exponent p")->required();
    box_cmd->add_option("--delta-dyadic", box_grid, "J0:J1 meaning delta = 2^-j")->required();
    box_cmd->add_flag("--exact", box_exact, "force exact breakpoint mode (atomic only)");
    box_cmd->add_flag("--tv", box_tv, "use total-variation box masses");
    box_cmd->add_option("--grid-n", box_nphi, "grid-mode phi resolution (0 = default)");
    box_cmd->add_option("--genus", box_genus, "build the complete measure at this level");

    // --- fit ---
    auto* fit_cmd = app.add_subcommand("fit", "power-law fit of a CSV table, prints fit JSON");
    std::string fit_input, fit_xcol, fit_ycol;
    fit_cmd->add_option("--input", fit_input, "CSV file with a header row")->required();
    fit_cmd->add_option("--x-col", fit_xcol, "x column (name or 0-based index)")->required();
    fit_cmd->add_option("--y-col", fit_ycol, "y column (name or 0-based index)")->required();

    // --- classical ---
    auto* cls_cmd = app.add_subcommand(
        "classical", "CSV \"r,I,J\" on a dyadic grid, or \"theta,psi0,Phi\" at --r");
    std::string cls_input, cls_grid;
    double cls_r = -1.0, cls_jtol = 1e-10;
    int cls_theta_grid = 4096;
    cls_cmd->add_option("--input", cls_input, "zeros JSON file")->required();
    cls_cmd->add_option("--r-dyadic", cls_grid, "J0:J1 for the r,I,J table");
    cls_cmd->add_option("--r", cls_r, "emit theta,psi0,Phi sampled at this r");
    cls_cmd->add_option("--theta-grid", cls_theta_grid, "boundary grid size (power of two)");
    cls_cmd->add_option("--jtol", cls_jtol, "J(r) partial-sum tolerance");

    // --- gen-example1 ---
    auto* gen_cmd = app.add_subcommand("gen-example1",
                                       "write the (alpha,beta) test zero sequence, print s");
    double gen_alpha = 1.0, gen_beta = 0.0;
    int gen_kmax = 8;
    std::string gen_out;
    gen_cmd->add_option("--alpha", gen_alpha, "alpha >= 1")->required();
    gen_cmd->add_option("--beta", gen_beta, "beta in [0,1]")->required();
    gen_cmd->add_option("--kmax", gen_kmax, "levels (<= 40)")->required();
    gen_cmd->add_option("--out", gen_out, "output zeros JSON file")->required();

    // --- example2 ---
    auto* ex2_cmd = app.add_subcommand("example2", "print Re (1/(1-z))^{q+1}");
    double ex2_q = 0.0;
    std::string ex2_z;
    ex2_cmd->add_option("--q", ex2_q, "q > -1")->required();
    ex2_cmd->add_option("--z", ex2_z, "evaluation point, a+bi")->required();

    // --- verify ---
    auto* ver_cmd = app.add_subcommand("verify", "run a growth-relation check, print report JSON");
    std::string ver_theorem, ver_input, ver_dgrid = "4:9", ver_rgrid;
    double ver_p = 2.0, ver_tolerance = 0.2, ver_alpha = 0.0;
    int ver_s = -1;
    ver_cmd->add_option("--theorem", ver_theorem, "box | stolz | growth")
        ->required()
        ->check(CLI::IsMember({"box", "stolz", "growth"}));
    ver_cmd->add_option("--input", ver_input, "zeros or measure JSON file")->required();
    ver_cmd->add_option("--p", ver_p, "exponent p > 1");
    ver_cmd->add_option("--tolerance", ver_tolerance, "fit tolerance");
    ver_cmd->add_option("--delta-dyadic", ver_dgrid, "box-size grid (box theorem)");
    ver_cmd->add_option("--r-dyadic", ver_rgrid, "radius grid");
    ver_cmd->add_option("--s", ver_s, "genus level (growth theorem with zeros input)");
    ver_cmd->add_option("--alpha", ver_alpha, "growth-theorem alpha");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    if (*eval_cmd) {
        echo_config("eval", {{"input", eval_input}, {"z", eval_z}});
        const auto in = load_input(eval_input);
        if (!in.is_zeros) throw std::invalid_argument("eval expects a zero-sequence file");
        const double v = dg::log_mod_blaschke(in.zeros, dg::DiscPoint(parse_complex(eval_z)));
        std::cout << dg::format_double(v) << "\n";
        return 0;
    }

    if (*means_cmd) {
        echo_config("means", {{"input", means_input},
                              {"p", dg::format_double(means_p)},
                              {"r-dyadic", means_grid},
                              {"tol", dg::format_double(means_tol)},
                              {"genus", std::to_string(means_genus)}});
        const auto in = load_input(means_input);
        dg::SubharmonicSpec u = [&] {
            if (means_genus >= 0) return dg::SubharmonicSpec::canonical(in.mu, means_genus);
            if (in.is_zeros) return dg::SubharmonicSpec::blaschke(in.zeros);
            return dg::SubharmonicSpec::representation(dg::build_complete_measure(in.mu, in.s),
                                                       0.0);
        }();
        const auto grid = parse_dyadic(means_grid);
        std::cout << "r,m_p\n";
        for (double r : grid.radii())
            emit_csv_row(std::cout, {r, dg::circle_mean_mp(u, r, means_p, means_tol)});
        return 0;
    }

    if (*box_cmd) {
        echo_config("boxmass", {{"input", box_input},
                                {"p", dg::format_double(box_p)},
                                {"delta-dyadic", box_grid},
                                {"exact", box_exact ? "1" : "0"},
                                {"tv", box_tv ? "1" : "0"},
                                {"genus", std::to_string(box_genus)}});
        const auto in = load_input(box_input);
        const int level = box_genus >= 0 ? box_genus : in.s;
        const auto lambda = dg::build_complete_measure(in.mu, level);
        const auto mode = (box_exact || lambda.purely_atomic())
                              ? dg::BoxIntegralMode::exact_breakpoints
                              : dg::BoxIntegralMode::grid;
        const auto grid = parse_dyadic(box_grid);
        std::cout << "delta,L\n";
        for (double delta : grid.deltas())
            emit_csv_row(std::cout,
                         {delta, dg::box_mass_integral(lambda, delta, box_p, mode, box_nphi,
                                                       box_tv)});
        return 0;
    }

    if (*fit_cmd) {
        echo_config("fit", {{"input", fit_input}, {"x-col", fit_xcol}, {"y-col", fit_ycol}});
        std::ifstream csv(fit_input);
        if (!csv) throw std::invalid_argument("cannot open " + fit_input);
        std::string header;
        if (!std::getline(csv, header)) throw std::invalid_argument("empty CSV");
        std::vector<std::string> names;
        {
            std::stringstream ss(header);
            std::string cell;
            while (std::getline(ss, cell, ',')) names.push_back(cell);
        }
        auto col_index = [&](const std::string& key) -> size_t {
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == key) return i;
            try {
                const size_t idx = static_cast<size_t>(std::stoul(key));
                if (idx < names.size()) return idx;
            } catch (...) {
            }
            throw std::invalid_argument("no CSV column " + key);
        };
        const size_t xi = col_index(fit_xcol), yi = col_index(fit_ycol);
        std::vector<std::pair<double, double>> samples;
        std::string line;
        while (std::getline(csv, line)) {
            if (line.empty()) continue;
            std::stringstream ss(line);
            std::string cell;
            std::vector<double> row;
            while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
            if (xi >= row.size() || yi >= row.size())
                throw std::invalid_argument("short CSV row: " + line);
            samples.emplace_back(row[xi], row[yi]);
        }
        std::cout << dg::fit_to_json(dg::fit_exponent(samples)).dump() << "\n";
        return 0;
    }

    if (*cls_cmd) {
        echo_config("classical", {{"input", cls_input},
                                  {"r-dyadic", cls_grid.empty() ? "-" : cls_grid},
                                  {"r", dg::format_double(cls_r)},
                                  {"theta-grid", std::to_string(cls_theta_grid)}});
        const auto in = load_input(cls_input);
        if (!in.is_zeros) throw std::invalid_argument("classical expects a zero-sequence file");
        if (!cls_grid.empty()) {
            const auto grid = parse_dyadic(cls_grid);
            std::cout << "r,I,J\n";
            for (double r : grid.radii())
                emit_csv_row(std::cout,
                             {r, dg::i_mean(in.zeros, r), dg::j_sum(in.zeros, r, cls_jtol)});
            return 0;
        }
        if (cls_r < 0.0)
            throw std::invalid_argument("classical needs --r-dyadic or --r");
        const auto psi = dg::sample_psi_r(in.zeros, cls_r, cls_theta_grid);
        const auto phi = dg::sample_Phi(in.zeros, cls_theta_grid);
        std::cout << "theta,psi0,Phi\n";
        for (int i = 0; i < psi.size(); ++i)
            emit_csv_row(std::cout, {psi.theta(i), psi.values[i], phi.values[i]});
        return 0;
    }

    if (*gen_cmd) {
        echo_config("gen-example1", {{"alpha", dg::format_double(gen_alpha)},
                                     {"beta", dg::format_double(gen_beta)},
                                     {"kmax", std::to_string(gen_kmax)},
                                     {"out", gen_out}});
        const auto ex = dg::gen_example1(gen_alpha, gen_beta, gen_kmax);
        dg::save_json_file(gen_out, dg::zeros_to_json(ex.zeros));
        std::cout << ex.s << "\n";
        return 0;
    }

    if (*ex2_cmd) {
        echo_config("example2", {{"q", dg::format_double(ex2_q)}, {"z", ex2_z}});
        const double v = dg::example2_logmod(ex2_q, dg::DiscPoint(parse_complex(ex2_z)));
        std::cout << dg::format_double(v) << "\n";
        return 0;
    }

    if (*ver_cmd) {
        echo_config("verify", {{"theorem", ver_theorem},
                               {"input", ver_input},
                               {"p", dg::format_double(ver_p)},
                               {"tolerance", dg::format_double(ver_tolerance)},
                               {"delta-dyadic", ver_dgrid},
                               {"r-dyadic", ver_rgrid.empty() ? "-" : ver_rgrid},
                               {"s", std::to_string(ver_s)},
                               {"alpha", dg::format_double(ver_alpha)}});
        const auto in = load_input(ver_input);
        dg::VerificationReport report;
        if (ver_theorem == "box") {
            const auto rgrid = parse_dyadic(ver_rgrid.empty() ? "4:9" : ver_rgrid);
            const auto dgrid = parse_dyadic(ver_dgrid);
            const int level = ver_s >= 0 ? ver_s : in.s;
            const auto lambda = dg::build_complete_measure(in.mu, level);
            dg::SubharmonicSpec u = [&] {
                if (ver_s > 0 || (!in.is_zeros && !in.mu.disc_only()))
                    return dg::SubharmonicSpec::representation(lambda, 0.0);
                if (in.is_zeros && level == 0) return dg::SubharmonicSpec::blaschke(in.zeros);
                return dg::SubharmonicSpec::canonical(in.mu, level);
            }();
            report = dg::verify_box_vs_means(lambda, u, ver_p, dgrid, rgrid, ver_tolerance);
        } else if (ver_theorem == "stolz") {
            if (!in.is_zeros) throw std::invalid_argument("stolz verification needs zeros");
            const auto rgrid = parse_dyadic(ver_rgrid.empty() ? "4:11" : ver_rgrid);
            report = dg::verify_stolz(in.zeros, ver_p, ver_tolerance, rgrid);
        } else {
            const auto rgrid = parse_dyadic(ver_rgrid.empty() ? "4:11" : ver_rgrid);
            const int level = ver_s >= 0 ? ver_s : in.s;
            report = dg::verify_growth_sufficiency(in.mu, level, ver_p, ver_alpha,
                                                   ver_tolerance, rgrid);
        }
        std::cout << dg::report_to_json(report).dump(2) << "\n";
        return report.consistent ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dg::QuadratureError& e) {
        std::cerr << "error: " << e.what()
                  << " (achieved estimate " << dg::format_double(e.achieved) << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
