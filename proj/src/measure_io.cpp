#include "discgrowth/measure_io.hpp"

#include <cmath>
#include <fstream>

namespace discgrowth {

namespace {

// Integral weights (multiplicities, Example-1 style counts) serialize as
// integers per the schema; anything else as a double.
nlohmann::json number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.007199254740992e15)
        return static_cast<std::int64_t>(v);
    return v;
}

}  // namespace

nlohmann::json zeros_to_json(const ZeroSequence& zeros) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : zeros)
        arr.push_back({{"re", z.point.re()},
                       {"im", z.point.im()},
                       {"multiplicity", number(z.multiplicity)}});
    return {{"zeros", arr}};
}

ZeroSequence zeros_from_json(const nlohmann::json& j) {
    if (!j.contains("zeros") || !j["zeros"].is_array())
        throw std::invalid_argument("zero-sequence JSON: missing \"zeros\" array");
    ZeroSequence zeros;
    for (const auto& e : j["zeros"]) {
        zeros.push_back({DiscPoint(e.at("re").get<double>(), e.at("im").get<double>()),
                         e.at("multiplicity").get<double>()});
        if (!(zeros.back().multiplicity > 0.0))
            throw std::invalid_argument("zero-sequence JSON: multiplicity must be positive");
    }
    return zeros;
}

nlohmann::json measure_to_json(const DiscMeasure& mu, int s) {
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& a : mu.disc_atoms())
        disc.push_back({{"re", a.point.re()}, {"im", a.point.im()}, {"weight", number(a.weight)}});
    nlohmann::json batoms = nlohmann::json::array();
    for (const auto& a : mu.boundary_atoms())
        batoms.push_back({{"theta", a.theta}, {"mass", a.mass}});
    nlohmann::json density = nlohmann::json::array();
    for (const auto& d : mu.boundary_density())
        density.push_back(
            {{"theta_start", d.theta_start}, {"theta_end", d.theta_end}, {"value", d.value}});
    return {{"s", s},
            {"disc_atoms", disc},
            {"boundary_atoms", batoms},
            {"boundary_density", density}};
}

MeasureFile measure_from_json(const nlohmann::json& j) {
    if (!j.contains("s")) throw std::invalid_argument("measure JSON: missing \"s\"");
    MeasureFile out;
    out.s = j.at("s").get<int>();
    if (out.s < 0) throw std::invalid_argument("measure JSON: s must be >= 0");
    std::vector<DiscAtom> disc;
    for (const auto& e : j.value("disc_atoms", nlohmann::json::array()))
        disc.push_back({DiscPoint(e.at("re").get<double>(), e.at("im").get<double>()),
                        e.at("weight").get<double>()});
    std::vector<BoundaryAtom> batoms;
    for (const auto& e : j.value("boundary_atoms", nlohmann::json::array()))
        batoms.push_back({e.at("theta").get<double>(), e.at("mass").get<double>()});
    std::vector<DensityPiece> density;
    for (const auto& e : j.value("boundary_density", nlohmann::json::array()))
        density.push_back({e.at("theta_start").get<double>(), e.at("theta_end").get<double>(),
                           e.at("value").get<double>()});
    out.mu = DiscMeasure(std::move(disc), std::move(batoms), std::move(density));
    return out;
}

bool looks_like_zero_sequence(const nlohmann::json& j) { return j.contains("zeros"); }

nlohmann::json fit_to_json(const GrowthFit& fit) {
    return {{"exponent", fit.exponent},
            {"amplitude", fit.amplitude},
            {"r_squared", fit.r_squared}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
    return {{"relation_checked", report.relation_checked},
            {"gamma_box", fit_to_json(report.gamma_box)},
            {"gamma_means", fit_to_json(report.gamma_means)},
            {"consistent", report.consistent},
            {"tolerance", report.tolerance},
            {"direction", report.direction}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace discgrowth
