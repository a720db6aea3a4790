#pragma once

#include <complex>
#include <string>

#include <json.hpp>

namespace revlab {

using cplx = std::complex<double>;

// Parses the compact complex grammar used in configs: optional sign, decimal
// real part, optional `±<decimal>i`; no whitespace. `i` alone means 1i,
// `-i` means -1i, a pure imaginary like `2i` is accepted too.
cplx parse_complex(const std::string& text);

// 17-significant-digit decimal rendering, shortest-round-trip not required.
std::string format_double(double v);

nlohmann::json complex_to_json(cplx z);       // {"re": ..., "im": ...}
cplx complex_from_json(const nlohmann::json& j);

} // namespace revlab
