#include <doctest.h>

#include "gweyl/io.hpp"
#include "support/random_gen.hpp"

using namespace gweyl;

TEST_CASE("matrix json round trip is lossless") {
    gweyl_test::Rng rng(61);
    for (std::size_t dim : {std::size_t{2}, std::size_t{4}}) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.complex_unit_box() * 7.3;
        const nlohmann::json j = matrix_to_json(m);
        const ComplexMatrix back = matrix_from_json(j);
        CHECK((back - m).max_abs() == 0.0);

        // Strict re-parse of the serialized text loses nothing either.
        const std::string text = j.dump();
        const nlohmann::json reparsed = nlohmann::json::parse(text);
        CHECK((matrix_from_json(reparsed) - m).max_abs() == 0.0);
        CHECK(reparsed.dump() == text);
    }
}

TEST_CASE("wave operator serialization carries the defining fields") {
    const GammaBasis basis = build_basis(Representation::Standard);
    const WaveOperator op = generalized_operator(
        FourMomentum{1.5, {0.1, 0.2, 0.3}},
        MassParameters(1.0, 0.5, SeedChirality::RightSeeded), basis);
    const nlohmann::json j = wave_operator_to_json(op);
    CHECK(j["representation"] == "standard");
    CHECK(j["seed_mass"] == 1.0);
    CHECK(j["physical_mass"] == 0.5);
    CHECK(j["seed_chirality"] == "right");
    CHECK((matrix_from_json(j["matrix"]) - op.matrix).max_abs() == 0.0);
}

TEST_CASE("trace csv is stable and carries the fixed columns") {
    OscillationTrace trace;
    trace.times = {0.0, 0.5};
    trace.prob_up = {1.0, 0.75};
    trace.prob_down = {0.0, 0.25};
    trace.norm = {1.0, 1.1};
    const std::string csv = trace_to_csv(trace);
    CHECK(csv == "t,prob_up,prob_down,norm\n0,1,0,1\n0.5,0.75,0.25,1.1000000000000001\n");
}

TEST_CASE("format_double renders 17 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    // 17 significant digits round-trip every double exactly.
    gweyl_test::Rng rng(62);
    for (int k = 0; k < 200; ++k) {
        const double x = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-12, 12));
        CHECK(std::stod(format_double(x)) == x);
    }
}
