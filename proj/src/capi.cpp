// C API shim over the revlab C++ core: opaque handles, status codes, and a
// thread-local last-error message. Exceptions never cross this boundary.

#include "revlab.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "revlab/bc.hpp"
#include "revlab/complexio.hpp"
#include "revlab/diagnostics.hpp"
#include "revlab/error.hpp"
#include "revlab/piecewise.hpp"
#include "revlab/revival.hpp"
#include "revlab/scenario.hpp"
#include "revlab/solver.hpp"
#include "revlab/spectrum.hpp"

using namespace revlab;

struct revlab_bc {
    BoundaryConditions bc;
};
struct revlab_datum {
    PiecewisePoly pw;
};
struct revlab_spectrum {
    Spectrum spec;
};
struct revlab_field {
    FieldSample field;
};

namespace {

thread_local std::string g_last_error;

revlab_status to_status(Errc c) {
    switch (c) {
        case Errc::ok: return REVLAB_OK;
        case Errc::bad_arg: return REVLAB_ERR_BAD_ARG;
        case Errc::bad_spec: return REVLAB_ERR_BAD_SPEC;
        case Errc::out_of_domain: return REVLAB_ERR_OUT_OF_DOMAIN;
        case Errc::ill_posed: return REVLAB_ERR_ILL_POSED;
        case Errc::degenerate_spectrum: return REVLAB_ERR_DEGENERATE_SPECTRUM;
        case Errc::degenerate_constants: return REVLAB_ERR_DEGENERATE_CONSTANTS;
        case Errc::inconsistent_root: return REVLAB_ERR_INCONSISTENT_ROOT;
        case Errc::root_derivative_too_small: return REVLAB_ERR_ROOT_DERIVATIVE_TOO_SMALL;
        case Errc::quadrature_failure: return REVLAB_ERR_QUADRATURE;
        case Errc::grid_mismatch: return REVLAB_ERR_GRID_MISMATCH;
        case Errc::insufficient_resolution: return REVLAB_ERR_INSUFFICIENT_RESOLUTION;
        case Errc::not_rational: return REVLAB_ERR_NOT_RATIONAL;
        case Errc::parse_error: return REVLAB_ERR_PARSE;
        case Errc::io_error: return REVLAB_ERR_IO;
        case Errc::internal: return REVLAB_ERR_INTERNAL;
    }
    return REVLAB_ERR_INTERNAL;
}

template <typename Fn>
revlab_status guarded(Fn&& fn) {
    try {
        fn();
        return REVLAB_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return REVLAB_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return REVLAB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return REVLAB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<double> copy_grid(const double* grid, size_t n) {
    if (!grid || n == 0) fail(Errc::bad_arg, "null or empty grid");
    return std::vector<double>(grid, grid + n);
}

} // namespace

extern "C" {

const char* revlab_last_error(void) { return g_last_error.c_str(); }

void revlab_string_free(char* s) { delete[] s; }

revlab_status revlab_bc_pseudoperiodic(double b0r, double b0i, double b1r, double b1i,
                                       double L, revlab_bc** out) {
    return guarded([&] {
        if (!out) fail(Errc::bad_arg, "null output pointer");
        *out = new revlab_bc{BoundaryConditions::pseudoperiodic({b0r, b0i}, {b1r, b1i}, L)};
    });
}

revlab_status revlab_bc_general(const double c[14], double L, revlab_bc** out) {
    return guarded([&] {
        if (!out || !c) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_bc{BoundaryConditions::general(
            {c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]},
            {c[8], c[9]}, {c[10], c[11]}, {c[12], c[13]}, L)};
    });
}

int revlab_bc_energy_conserving(const revlab_bc* bc) {
    return bc && bc->bc.energy_conserving() ? 1 : 0;
}

void revlab_bc_free(revlab_bc* bc) { delete bc; }

revlab_status revlab_datum_box(const revlab_bc* bc, double a, double b,
                               double hr, double hi, revlab_datum** out) {
    return guarded([&] {
        if (!bc || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_datum{make_datum(bc->bc.L, BoxSpec{a, b, {hr, hi}})};
    });
}

revlab_status revlab_datum_ramp(const revlab_bc* bc, double center, double halfwidth,
                                double sr, double si, double offr, double offi,
                                revlab_datum** out) {
    return guarded([&] {
        if (!bc || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_datum{
            make_datum(bc->bc.L, RampSpec{center, halfwidth, {sr, si}, {offr, offi}})};
    });
}

revlab_status revlab_datum_polybump(const revlab_bc* bc, double a, double b,
                                    revlab_datum** out) {
    return guarded([&] {
        if (!bc || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_datum{make_datum(bc->bc.L, PolyBumpSpec{a, b})};
    });
}

revlab_status revlab_datum_segments_json(const revlab_bc* bc, const char* segments_json,
                                         revlab_datum** out) {
    return guarded([&] {
        if (!bc || !out || !segments_json) fail(Errc::bad_arg, "null pointer");
        auto j = nlohmann::json::parse(segments_json, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            fail(Errc::parse_error, "segments JSON must be an array");
        RawSegments raw;
        for (const auto& sj : j) {
            Segment seg;
            seg.lo = sj.value("lo", 0.0);
            seg.hi = sj.value("hi", 0.0);
            for (const auto& cj : sj.at("coeffs")) seg.coeffs.push_back(complex_from_json(cj));
            raw.segments.push_back(std::move(seg));
        }
        *out = new revlab_datum{make_datum(bc->bc.L, raw)};
    });
}

revlab_status revlab_datum_eval(const revlab_datum* d, double x, double* re, double* im) {
    return guarded([&] {
        if (!d || !re || !im) fail(Errc::bad_arg, "null pointer");
        const cplx v = d->pw.eval(x);
        *re = v.real();
        *im = v.imag();
    });
}

void revlab_datum_free(revlab_datum* d) { delete d; }

revlab_status revlab_spectrum_compute(const revlab_bc* bc, int pair_count,
                                      revlab_spectrum** out) {
    return guarded([&] {
        if (!bc || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_spectrum{compute_spectrum(bc->bc, pair_count)};
    });
}

size_t revlab_spectrum_root_count(const revlab_spectrum* s) {
    return s ? s->spec.roots.size() : 0;
}

revlab_status revlab_spectrum_root(const revlab_spectrum* s, size_t i,
                                   int* pair_index, int* mirrored,
                                   double* kre, double* kim,
                                   double* dre, double* dim_,
                                   const char** class_name) {
    return guarded([&] {
        if (!s) fail(Errc::bad_arg, "null spectrum");
        if (i >= s->spec.roots.size()) fail(Errc::bad_arg, "root index out of range");
        const Root& r = s->spec.roots[i];
        if (pair_index) *pair_index = r.pair_index;
        if (mirrored) *mirrored = r.mirrored ? 1 : 0;
        if (kre) *kre = r.kappa.real();
        if (kim) *kim = r.kappa.imag();
        if (dre) *dre = r.ddelta.real();
        if (dim_) *dim_ = r.ddelta.imag();
        if (class_name) *class_name = root_class_name(r.cls);
    });
}

revlab_status revlab_spectrum_to_json(const revlab_spectrum* s, char** json_out) {
    return guarded([&] {
        if (!s || !json_out) fail(Errc::bad_arg, "null pointer");
        *json_out = dup_string(spectrum_to_json(s->spec));
    });
}

revlab_status revlab_discriminant(const revlab_bc* bc, double kre, double kim,
                                  double* out_re, double* out_im) {
    return guarded([&] {
        if (!bc || !out_re || !out_im) fail(Errc::bad_arg, "null pointer");
        const cplx v = discriminant(bc->bc, {kre, kim});
        *out_re = v.real();
        *out_im = v.imag();
    });
}

void revlab_spectrum_free(revlab_spectrum* s) { delete s; }

revlab_status revlab_eval_series(const revlab_bc* bc, const revlab_datum* d, double t,
                                 const double* grid, size_t n_grid, int nterms,
                                 revlab_field** out) {
    return guarded([&] {
        if (!bc || !d || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_field{evaluate_series(bc->bc, d->pw, t, copy_grid(grid, n_grid),
                                                TruncationPlan{nterms})};
    });
}

revlab_status revlab_eval_residue(const revlab_bc* bc, const revlab_datum* d, double t,
                                  const double* grid, size_t n_grid, int nterms,
                                  revlab_field** out) {
    return guarded([&] {
        if (!bc || !d || !out) fail(Errc::bad_arg, "null pointer");
        *out = new revlab_field{evaluate_residue(bc->bc, d->pw, t, copy_grid(grid, n_grid),
                                                 TruncationPlan{nterms})};
    });
}

revlab_status revlab_eval_revival(const revlab_bc* bc, const revlab_datum* d,
                                  long long p, long long q,
                                  const double* grid, size_t n_grid,
                                  revlab_field** out) {
    return guarded([&] {
        if (!bc || !d || !out) fail(Errc::bad_arg, "null pointer");
        const RationalTime rt(p, q, bc->bc.L);
        *out = new revlab_field{evaluate_revival(bc->bc, d->pw, rt, copy_grid(grid, n_grid))};
    });
}

size_t revlab_field_size(const revlab_field* f) { return f ? f->field.grid.size() : 0; }

revlab_status revlab_field_get(const revlab_field* f, size_t i,
                               double* x, double* re, double* im) {
    return guarded([&] {
        if (!f) fail(Errc::bad_arg, "null field");
        if (i >= f->field.grid.size()) fail(Errc::bad_arg, "sample index out of range");
        if (x) *x = f->field.grid[i];
        if (re) *re = f->field.values[i].real();
        if (im) *im = f->field.values[i].imag();
    });
}

revlab_status revlab_field_write_csv(const revlab_field* f, const char* path) {
    return guarded([&] {
        if (!f || !path) fail(Errc::bad_arg, "null pointer");
        write_field_csv(path, f->field);
    });
}

void revlab_field_free(revlab_field* f) { delete f; }

revlab_status revlab_field_energy(const revlab_field* f, double* out) {
    return guarded([&] {
        if (!f || !out) fail(Errc::bad_arg, "null pointer");
        *out = energy(f->field);
    });
}

revlab_status revlab_field_compare(const revlab_field* a, const revlab_field* b,
                                   double* l2, double* sup) {
    return guarded([&] {
        if (!a || !b) fail(Errc::bad_arg, "null field");
        const ComparisonReport rep = compare(a->field, b->field);
        if (l2) *l2 = rep.l2;
        if (sup) *sup = rep.sup;
    });
}

revlab_status revlab_field_box_dimension(const revlab_field* f,
                                         double* dimension, double* r_squared) {
    return guarded([&] {
        if (!f) fail(Errc::bad_arg, "null field");
        const RoughnessReport rep = box_dimension(f->field);
        if (dimension) *dimension = rep.dimension;
        if (r_squared) *r_squared = rep.r_squared;
    });
}

revlab_status revlab_field_breakpoints(const revlab_field* f, double tol,
                                       double* xs, size_t cap, size_t* count) {
    return guarded([&] {
        if (!f || !count) fail(Errc::bad_arg, "null pointer");
        const auto bps = linearity_breakpoints(f->field, tol);
        *count = bps.size();
        if (xs)
            for (size_t i = 0; i < bps.size() && i < cap; ++i) xs[i] = bps[i];
    });
}

int revlab_run_scenario(const char* path, char** error_json) {
    if (!path) {
        if (error_json) *error_json = dup_string(
            "{\"error\":{\"code\":\"bad_arg\",\"message\":\"null path\"}}");
        return 1;
    }
    std::string err;
    const int rc = run_scenario_file(path, &err);
    if (rc != 0 && error_json) *error_json = dup_string(err);
    return rc;
}

revlab_status revlab_compare_csv(const char* path_a, const char* path_b,
                                 char** report_json) {
    return guarded([&] {
        if (!path_a || !path_b || !report_json) fail(Errc::bad_arg, "null pointer");
        const FieldSample a = read_field_csv(path_a);
        const FieldSample b = read_field_csv(path_b);
        *report_json = dup_string(comparison_to_json(compare(a, b)));
    });
}

revlab_status revlab_spectrum_json_for_bc_file(const char* bc_json_path, int pair_count,
                                               char** json_out) {
    return guarded([&] {
        if (!bc_json_path || !json_out) fail(Errc::bad_arg, "null pointer");
        std::ifstream in(bc_json_path);
        if (!in) fail(Errc::io_error, std::string("cannot open '") + bc_json_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        auto j = nlohmann::json::parse(ss.str(), nullptr, false);
        if (j.is_discarded()) fail(Errc::parse_error, "invalid JSON boundary-condition file");
        const auto& pj = j.contains("problem") ? j.at("problem") : j;
        // reuse the scenario parser for the problem block
        nlohmann::json wrapper;
        wrapper["problem"] = pj;
        wrapper["initial"] = {{"kind", "box"}, {"a", 0.0}, {"b", pj.value("L", 1.0)}};
        wrapper["outputs"] = nlohmann::json::array();
        const Scenario sc = Scenario::from_json_text(wrapper.dump(), "");
        *json_out = dup_string(spectrum_to_json(compute_spectrum(sc.bc, pair_count)));
    });
}

} // extern "C"
