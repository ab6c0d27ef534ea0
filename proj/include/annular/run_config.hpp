// Run configuration: JSON schema parsing and validation for the command-line
// front end.
#pragma once

#include <optional>
#include <string>

#include "annular/gas_model.hpp"

namespace annular {

enum class Problem {
    OutwardSmooth,   // "I":   data at the inner circle, u1 > 0
    InwardSmooth,    // "II":  data at the outer circle, u1 < 0
    OutwardShock,    // "III": supersonic inflow at the inner circle, exit pressure at r_outer
    InwardShock,     // "IV":  supersonic inflow at the outer circle, exit pressure at r_inner
    Circulatory      // "circulatory": u1 = 0, pure rotation
};

const char* to_string(Problem p);
Problem problem_from_string(const std::string& s);  // throws ConfigError

struct OutputSpec {
    std::string format = "csv";  // "csv" or "json"
    std::string path;            // empty means standard output for report commands
};

struct RunConfig {
    GasModel gas;  // gamma plus optional tolerance overrides
    Problem problem = Problem::OutwardSmooth;
    double r_inner = 0.0;
    double r_outer = 0.0;
    BoundaryState boundary;
    std::optional<double> exit_pressure;  // required exactly for the shock problems
    int samples = 512;
    OutputSpec output;
};

// Parses the JSON text of a configuration file. Throws ConfigError with a
// single-line message on malformed JSON, unknown keys, missing fields or
// invariant violations (boundary radius must sit on the inlet circle of the
// chosen problem, exit_pressure present iff the problem prescribes one,
// samples >= 2, 0 < r_inner < r_outer).
RunConfig parse_config(const std::string& text);

// Reads and parses the file at `path`.
RunConfig load_config(const std::string& path);

void validate(const RunConfig& cfg);  // throws ConfigError

}  // namespace annular
