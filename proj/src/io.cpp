#include "gweyl/io.hpp"

#include <cstdio>

namespace gweyl {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t n = j.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            m(i, k) = Complex(j[i][k][0].get<double>(), j[i][k][1].get<double>());
        }
    }
    return m;
}

nlohmann::json wave_operator_to_json(const WaveOperator& op) {
    return {
        {"representation", representation_name(op.representation)},
        {"energy", op.momentum.energy},
        {"momentum", {op.momentum.p[0], op.momentum.p[1], op.momentum.p[2]}},
        {"seed_mass", op.masses.seed_mass()},
        {"physical_mass", op.masses.physical_mass()},
        {"seed_chirality",
         op.masses.chirality() == SeedChirality::RightSeeded ? "right" : "left"},
        {"matrix", matrix_to_json(op.matrix)},
    };
}

std::string trace_to_csv(const OscillationTrace& trace) {
    std::string out = "t,prob_up,prob_down,norm\n";
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        out += format_double(trace.times[k]);
        out += ',';
        out += format_double(trace.prob_up[k]);
        out += ',';
        out += format_double(trace.prob_down[k]);
        out += ',';
        out += format_double(trace.norm[k]);
        out += '\n';
    }
    return out;
}

nlohmann::json trace_summary_json(const OscillationTrace& trace) {
    return {
        {"amplitude_frequency", trace.amplitude_frequency},
        {"probability_frequency", trace.probability_frequency},
        {"fitted_frequency", trace.fitted_frequency},
        {"norm_drift_max", trace.norm_drift_max},
        {"dft_bin_width", trace.dft_bin_width},
        {"samples", trace.times.size()},
    };
}

}  // namespace gweyl
