#pragma once

#include <string>

#include <json.hpp>

#include "gweyl/helicity.hpp"

namespace gweyl {

/// "%.17g" rendering: enough digits to round-trip a double, byte-stable for
/// identical inputs.
std::string format_double(double value);

/// Row-major [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json wave_operator_to_json(const WaveOperator& op);

/// RFC-4180-style CSV body (header row, \n line endings) with columns
/// t, prob_up, prob_down, norm.
std::string trace_to_csv(const OscillationTrace& trace);

nlohmann::json trace_summary_json(const OscillationTrace& trace);

}  // namespace gweyl
