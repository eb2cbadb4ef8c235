#include "polar/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace polar {

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void to_json(json& j, const Configuration& c) {
    j = json{{"dim", c.dim()}, {"vectors", c.rows()}};
}

void from_json(const json& j, Configuration& c) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
        throw std::invalid_argument("configuration JSON needs \"dim\" and \"vectors\"");
    const int dim = j.at("dim").get<int>();
    c = Configuration::from_rows(dim, j.at("vectors").get<std::vector<std::vector<double>>>());
}

void to_json(json& j, const MaxCertificate& c) {
    j = json{{"lower", c.lower},
             {"upper", c.upper},
             {"witness", c.witness},
             {"modulus", c.modulus},
             {"net_delta", c.net_delta},
             {"construction", c.construction},
             {"certified", c.certified},
             {"underdetermined", c.underdetermined},
             {"cells", c.cells}};
}

void to_json(json& j, const BoundsReport& r) {
    j = json{{"n", r.n},
             {"d", r.d},
             {"p", r.p},
             {"lower", r.lower},
             {"upper", r.upper},
             {"copies", r.copies},
             {"last_copy", r.last_copy},
             {"truncation", r.truncation},
             {"c_bound", r.c_bound},
             {"normalized_upper", r.normalized_upper},
             {"construction", r.construction}};
}

void to_json(json& j, const FrameOperator& a) {
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < a.dim; ++r) {
        rows.emplace_back();
        for (int c = 0; c < a.dim; ++c) rows.back().push_back(a(r, c));
    }
    j = json{{"dim", a.dim}, {"entries", rows}, {"trace", a.trace()}};
}

void to_json(json& j, const IsotropyReport& r) {
    j = json{{"residual", r.residual},
             {"tolerance", r.tolerance},
             {"is_isotropic", r.is_isotropic},
             {"moments_isotropic", r.moments_isotropic}};
    if (r.planar_moment) j["planar_moment"] = complex_json(*r.planar_moment);
    if (r.disc_moments)
        j["disc_moments"] = {{"radial", r.disc_moments->radial},
                             {"square", complex_json(r.disc_moments->square)},
                             {"lifted", complex_json(r.disc_moments->lifted)}};
}

void to_json(json& j, const UntfResult& r) {
    j = json{{"residual", r.residual},
             {"frame_potential", r.potential},
             {"restarts", r.restarts},
             {"steps", r.steps},
             {"configuration", r.frame}};
}

void to_json(json& j, const SignSumResult& r) {
    j = json{{"signs", r.signs}, {"norm", r.norm}, {"status", to_string(r.status)}, {"bang_margin", r.bang_margin}};
}

void to_json(json& j, const Prop3Check& r) {
    j = json{{"sign_norm", r.sign_norm}, {"enclosure", r.enclosure}, {"consistent", r.consistent}};
}

void to_json(json& j, const ConjectureReport& r) {
    json cons = json::array();
    for (const auto& c : r.constructions) cons.push_back({{"h", c.h}, {"norm", c.norm}, {"attains", c.attains}});
    j = json{{"d", r.d},
             {"trials", r.trials},
             {"seed", r.seed},
             {"min_over_trials", r.min_over_trials},
             {"violations", r.violations},
             {"sharp_value", r.sharp_value},
             {"constructions", cons},
             {"simplex_attains", r.simplex_attains}};
}

void to_json(json& j, const PlanarEnergyReport& r) {
    j = json{{"n", r.n},
             {"p", r.p},
             {"direct", r.direct},
             {"closed", r.closed ? json(*r.closed) : json(nullptr)},
             {"stolarsky_max", r.stolarsky_max},
             {"branch", r.branch}};
}

void to_json(json& j, const ScanItem& r) {
    j = json{{"p", r.p}, {"excluded", r.excluded}, {"equidistributed", r.equidistributed}};
    if (!r.excluded) {
        j["best"] = r.best;
        j["gap"] = r.gap;
        j["residual"] = r.residual;
        j["consistent"] = r.consistent;
        j["best_lines"] = r.best_angles;
    }
}

void to_json(json& j, const ScanReport& r) {
    j = json{{"n", r.n}, {"restarts", r.restarts}, {"seed", r.seed}, {"items", r.items}, {"excluded", r.excluded},
             {"heuristic", true}};
}

void to_json(json& j, const SearchResult& r) {
    json starts = json::array();
    for (const auto& s : r.starts)
        starts.push_back({{"label", s.label}, {"initial_upper", s.initial_upper}, {"final_upper", s.final_upper}});
    j = json{{"best", r.best},
             {"certificate", r.certificate},
             {"lower_bound", r.lower_bound},
             {"gap", r.gap},
             {"provenance", {{"start", r.start}, {"step", r.step}}},
             {"converged", r.converged},
             {"beta", r.beta},
             {"surrogate_size", r.surrogate_size},
             {"starts", starts},
             {"heuristic", true}};
}

Configuration read_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open configuration file " + path);
    return json::parse(in).get<Configuration>();
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace polar
