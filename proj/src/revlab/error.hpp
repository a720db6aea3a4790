#pragma once

#include <stdexcept>
#include <string>

namespace revlab {

enum class Errc {
    ok = 0,
    bad_arg,
    bad_spec,
    out_of_domain,
    ill_posed,
    degenerate_spectrum,
    degenerate_constants,
    inconsistent_root,
    root_derivative_too_small,
    quadrature_failure,
    grid_mismatch,
    insufficient_resolution,
    not_rational,
    parse_error,
    io_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace revlab
