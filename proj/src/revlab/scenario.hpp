#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bc.hpp"
#include "diagnostics.hpp"
#include "piecewise.hpp"
#include "revival.hpp"
#include "solver.hpp"

namespace revlab {

// One requested time: rational (revival-capable) or plain float.
struct TimePoint {
    std::optional<RationalTime> rational;
    double value = 0.0;
    std::string tag; // filename component: "p_over_q" or fixed 6-decimal
};

struct Scenario {
    BoundaryConditions bc;
    PiecewisePoly datum;
    std::string datum_desc;
    std::vector<TimePoint> times;
    int nterms = 20001;
    int grid = 1000;
    std::vector<std::string> outputs; // subset of {series, residue, revival,
                                      //  energy, spectrum, dimension, breakpoints}
    std::string out_dir;

    static Scenario load(const std::string& path);
    static Scenario from_json_text(const std::string& text, const std::string& base_dir);
};

// Runs every requested output at every requested time, writing
//   <outDir>/<output>_<timeTag>.csv          (field outputs; energy as t,energy)
//   <outDir>/spectrum.json                   (spectrum output)
//   <outDir>/dimension_<timeTag>.json etc.   (report outputs)
//   <outDir>/meta.json
// CSV header is exactly `x,re_u,im_u,abs_u`, rows carry 17 significant digits.
// Reruns over identical inputs are byte-identical.
void run_scenario(const Scenario& sc);

// Convenience wrapper used by the CLI: load + run, mapping errors to a
// machine-readable JSON string. Returns the process exit code.
int run_scenario_file(const std::string& path, std::string* error_json);

// CSV field I/O (the compare subcommand's format).
void write_field_csv(const std::string& path, const FieldSample& field);
FieldSample read_field_csv(const std::string& path);

// JSON form: {"grid":[...],"values":[{"re","im"},...],"meta":{...}}.
std::string field_to_json(const FieldSample& field);
FieldSample field_from_json(const std::string& text);

std::string comparison_to_json(const ComparisonReport& rep);
std::string spectrum_to_json(const Spectrum& spec);

} // namespace revlab
