#include "error.hpp"

namespace revlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "ok";
        case Errc::bad_arg: return "bad_arg";
        case Errc::bad_spec: return "bad_spec";
        case Errc::out_of_domain: return "out_of_domain";
        case Errc::ill_posed: return "ill_posed";
        case Errc::degenerate_spectrum: return "degenerate_spectrum";
        case Errc::degenerate_constants: return "degenerate_constants";
        case Errc::inconsistent_root: return "inconsistent_root";
        case Errc::root_derivative_too_small: return "root_derivative_too_small";
        case Errc::quadrature_failure: return "quadrature_failure";
        case Errc::grid_mismatch: return "grid_mismatch";
        case Errc::insufficient_resolution: return "insufficient_resolution";
        case Errc::not_rational: return "not_rational";
        case Errc::parse_error: return "parse_error";
        case Errc::io_error: return "io_error";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace revlab
