#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "complexio.hpp"
#include "error.hpp"

namespace revlab {

namespace {

using nlohmann::json;

cplx get_complex(const json& j, const std::string& key) {
    if (!j.contains(key)) fail(Errc::parse_error, "missing field '" + key + "'");
    return complex_from_json(j.at(key));
}

BoundaryConditions parse_problem(const json& j) {
    if (!j.contains("variant")) fail(Errc::parse_error, "problem.variant missing");
    const std::string variant = j.at("variant").get<std::string>();
    const double L = j.value("L", 1.0);
    if (variant == "pseudoperiodic")
        return BoundaryConditions::pseudoperiodic(get_complex(j, "beta0"),
                                                  get_complex(j, "beta1"), L);
    if (variant == "general") {
        auto opt = [&](const char* key) {
            return j.contains(key) ? complex_from_json(j.at(key)) : cplx{};
        };
        return BoundaryConditions::general(opt("beta11"), opt("beta12"), opt("beta13"),
                                           opt("beta14"), opt("beta22"), opt("beta23"),
                                           opt("beta24"), L);
    }
    fail(Errc::parse_error, "problem.variant must be 'pseudoperiodic' or 'general'");
}

std::pair<PiecewisePoly, std::string> parse_initial(const json& j, double L) {
    if (!j.contains("kind")) fail(Errc::parse_error, "initial.kind missing");
    const std::string kind = j.at("kind").get<std::string>();
    std::ostringstream desc;
    if (kind == "box") {
        BoxSpec s{j.value("a", 0.0), j.value("b", 0.0),
                  j.contains("height") ? complex_from_json(j.at("height")) : cplx{1.0, 0.0}};
        desc << "box[" << s.a << "," << s.b << "]";
        return {make_datum(L, s), desc.str()};
    }
    if (kind == "ramp") {
        RampSpec s{j.value("center", 0.0), j.value("halfwidth", 0.0),
                   j.contains("slope") ? complex_from_json(j.at("slope")) : cplx{},
                   j.contains("offset") ? complex_from_json(j.at("offset")) : cplx{}};
        desc << "ramp[c=" << s.center << ",w=" << s.halfwidth << "]";
        return {make_datum(L, s), desc.str()};
    }
    if (kind == "polybump") {
        PolyBumpSpec s{j.value("a", 0.0), j.value("b", 0.0)};
        desc << "polybump[" << s.a << "," << s.b << "]";
        return {make_datum(L, s), desc.str()};
    }
    if (kind == "segments") {
        RawSegments raw;
        if (!j.contains("segments") || !j.at("segments").is_array())
            fail(Errc::parse_error, "initial.segments must be an array");
        for (const auto& sj : j.at("segments")) {
            Segment seg;
            seg.lo = sj.value("lo", 0.0);
            seg.hi = sj.value("hi", 0.0);
            if (!sj.contains("coeffs") || !sj.at("coeffs").is_array())
                fail(Errc::parse_error, "segment.coeffs must be an array");
            for (const auto& cj : sj.at("coeffs")) seg.coeffs.push_back(complex_from_json(cj));
            raw.segments.push_back(std::move(seg));
        }
        desc << "segments[" << raw.segments.size() << "]";
        return {make_datum(L, raw), desc.str()};
    }
    fail(Errc::parse_error, "initial.kind must be box|ramp|polybump|segments");
}

TimePoint parse_time(const json& j, double L) {
    TimePoint tp;
    if (j.is_object() && j.contains("rational")) {
        tp.rational = RationalTime::parse(j.at("rational").get<std::string>(), L);
        tp.value = tp.rational->t();
        tp.tag = tp.rational->tag();
        return tp;
    }
    if (j.is_object() && j.contains("float")) {
        tp.value = j.at("float").get<double>();
    } else if (j.is_number()) {
        tp.value = j.get<double>();
    } else {
        fail(Errc::parse_error, "time entries must be {\"rational\":\"p/q\"} or {\"float\":t}");
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", tp.value);
    tp.tag = buf;
    return tp;
}

const std::vector<std::string> kKnownOutputs = {
    "series", "residue", "revival", "energy", "spectrum", "dimension", "breakpoints"};

} // namespace

Scenario Scenario::from_json_text(const std::string& text, const std::string& base_dir) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "invalid scenario JSON");
    Scenario sc{BoundaryConditions{}, PiecewisePoly{}, "", {}, 20001, 1000, {}, ""};
    if (!j.contains("problem")) fail(Errc::parse_error, "scenario.problem missing");
    sc.bc = parse_problem(j.at("problem"));
    if (!j.contains("initial")) fail(Errc::parse_error, "scenario.initial missing");
    std::tie(sc.datum, sc.datum_desc) = parse_initial(j.at("initial"), sc.bc.L);
    if (j.contains("time")) {
        if (j.at("time").is_array())
            for (const auto& tj : j.at("time")) sc.times.push_back(parse_time(tj, sc.bc.L));
        else
            sc.times.push_back(parse_time(j.at("time"), sc.bc.L));
    }
    sc.nterms = j.value("nterms", 20001);
    sc.grid = j.value("grid", 1000);
    if (j.contains("outputs")) {
        for (const auto& o : j.at("outputs")) {
            const std::string name = o.get<std::string>();
            bool known = false;
            for (const auto& k : kKnownOutputs) known = known || k == name;
            if (!known) fail(Errc::parse_error, "unknown output '" + name + "'");
            sc.outputs.push_back(name);
        }
    }
    std::string out = j.value("outDir", std::string("out"));
    std::filesystem::path p(out);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    sc.out_dir = p.string();

    // cross-field validation
    const bool wants_revival =
        std::find(sc.outputs.begin(), sc.outputs.end(), "revival") != sc.outputs.end();
    if (wants_revival) {
        if (!sc.bc.is_pseudoperiodic())
            fail(Errc::bad_spec, "revival output requires the pseudoperiodic variant");
        for (const auto& tp : sc.times)
            if (!tp.rational)
                fail(Errc::not_rational, "revival output requires rational times");
    }
    return sc;
}

Scenario Scenario::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open scenario '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), std::filesystem::path(path).parent_path().string());
}

void write_field_csv(const std::string& path, const FieldSample& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
    out << "x,re_u,im_u,abs_u\n";
    for (std::size_t i = 0; i < field.grid.size(); ++i) {
        out << format_double(field.grid[i]) << ','
            << format_double(field.values[i].real()) << ','
            << format_double(field.values[i].imag()) << ','
            << format_double(std::abs(field.values[i])) << '\n';
    }
}

FieldSample read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,re_u,im_u,abs_u", 0) != 0)
        fail(Errc::parse_error, "bad CSV header in '" + path + "'");
    FieldSample f;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3)
            fail(Errc::parse_error, "bad CSV row in '" + path + "'");
        f.grid.push_back(x);
        f.values.emplace_back(re, im);
    }
    if (f.grid.empty()) fail(Errc::parse_error, "no data rows in '" + path + "'");
    return f;
}

std::string field_to_json(const FieldSample& field) {
    json j;
    j["grid"] = field.grid;
    j["values"] = json::array();
    for (const cplx& v : field.values) j["values"].push_back(complex_to_json(v));
    j["meta"] = {{"method", method_name(field.meta.method)},
                 {"t", field.meta.t},
                 {"nterms", field.meta.nterms},
                 {"bc", field.meta.bc_desc},
                 {"datum", field.meta.datum_desc}};
    return j.dump();
}

FieldSample field_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("grid") || !j.contains("values"))
        fail(Errc::parse_error, "invalid field JSON");
    FieldSample f;
    for (const auto& x : j.at("grid")) f.grid.push_back(x.get<double>());
    for (const auto& v : j.at("values")) f.values.push_back(complex_from_json(v));
    if (f.grid.size() != f.values.size())
        fail(Errc::parse_error, "field JSON grid/value size mismatch");
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        f.meta.t = m.value("t", 0.0);
        f.meta.nterms = m.value("nterms", 0);
        f.meta.bc_desc = m.value("bc", std::string{});
        f.meta.datum_desc = m.value("datum", std::string{});
        const std::string method = m.value("method", std::string{"series"});
        f.meta.method = method == "revival" ? Method::Revival
                       : method == "residue" ? Method::Residue
                                             : Method::Series;
    }
    return f;
}

std::string comparison_to_json(const ComparisonReport& rep) {
    json j;
    j["l2"] = rep.l2;
    j["sup"] = rep.sup;
    j["gridSize"] = rep.grid_size;
    return j.dump();
}

std::string spectrum_to_json(const Spectrum& spec) {
    json j;
    if (spec.kappa0) j["kappa0"] = complex_to_json(*spec.kappa0);
    j["roots"] = json::array();
    for (const Root& r : spec.roots) {
        json rj;
        rj["index"] = r.pair_index;
        rj["mirrored"] = r.mirrored;
        rj["kappa"] = complex_to_json(r.kappa);
        rj["ddelta"] = complex_to_json(r.ddelta);
        rj["class"] = root_class_name(r.cls);
        j["roots"].push_back(rj);
    }
    const ModeReport modes = classify_modes(spec);
    j["modes"] = {{"growing", modes.growing},
                  {"decaying", modes.decaying},
                  {"neutral", modes.neutral},
                  {"wellPosed", modes.well_posed},
                  {"energyConserving", modes.energy_conserving}};
    return j.dump(2);
}

void run_scenario(const Scenario& sc) {
    namespace fs = std::filesystem;
    fs::create_directories(sc.out_dir);

    json meta;
    meta["problem"] = sc.bc.describe();
    meta["initial"] = sc.datum_desc;
    meta["nterms"] = sc.nterms;
    meta["grid"] = sc.grid;
    meta["outputs"] = sc.outputs;
    meta["times"] = json::array();
    for (const auto& tp : sc.times) meta["times"].push_back({{"t", tp.value}, {"tag", tp.tag}});
    meta["artifacts"] = json::array();
    auto add_artifact = [&meta](const std::string& name) { meta["artifacts"].push_back(name); };

    const bool needs_series_or_derived = [&] {
        for (const auto& o : sc.outputs)
            if (o == "series" || o == "energy" || o == "dimension" || o == "breakpoints")
                return true;
        return false;
    }();
    const bool needs_residue =
        std::find(sc.outputs.begin(), sc.outputs.end(), "residue") != sc.outputs.end();
    const bool needs_spectrum =
        std::find(sc.outputs.begin(), sc.outputs.end(), "spectrum") != sc.outputs.end();

    TruncationPlan plan{sc.nterms};
    std::optional<Spectrum> spectrum;
    if (needs_series_or_derived || needs_residue || needs_spectrum) {
        int pairs = 24; // spectrum-only runs need just the low-lying part
        if (needs_series_or_derived || needs_residue) {
            plan.validate();
            pairs = sc.bc.is_pseudoperiodic() ? plan.nterms : plan.half();
        }
        spectrum = compute_spectrum(sc.bc, pairs);
    }

    const std::vector<double> grid = uniform_grid(sc.bc.L, sc.grid);
    std::map<std::string, FieldSample> series_cache;
    auto series_at = [&](const TimePoint& tp) -> const FieldSample& {
        auto it = series_cache.find(tp.tag);
        if (it == series_cache.end()) {
            FieldSample f = evaluate_series(*spectrum, sc.datum, tp.value, grid, plan);
            it = series_cache.emplace(tp.tag, std::move(f)).first;
        }
        return it->second;
    };

    for (const auto& out : sc.outputs) {
        if (out == "spectrum") {
            const std::string path = (fs::path(sc.out_dir) / "spectrum.json").string();
            std::ofstream f(path, std::ios::binary);
            if (!f) fail(Errc::io_error, "cannot write '" + path + "'");
            f << spectrum_to_json(*spectrum) << '\n';
            add_artifact("spectrum.json");
            continue;
        }
        for (const auto& tp : sc.times) {
            const std::string stem = out + "_" + tp.tag;
            if (out == "series") {
                write_field_csv((fs::path(sc.out_dir) / (stem + ".csv")).string(), series_at(tp));
                add_artifact(stem + ".csv");
            } else if (out == "residue") {
                FieldSample f = evaluate_residue(*spectrum, sc.datum, tp.value, grid, plan);
                write_field_csv((fs::path(sc.out_dir) / (stem + ".csv")).string(), f);
                add_artifact(stem + ".csv");
            } else if (out == "revival") {
                FieldSample f = evaluate_revival(sc.bc, sc.datum, *tp.rational, grid);
                write_field_csv((fs::path(sc.out_dir) / (stem + ".csv")).string(), f);
                add_artifact(stem + ".csv");
            } else if (out == "energy") {
                const double e = energy(series_at(tp));
                const std::string path = (fs::path(sc.out_dir) / (stem + ".csv")).string();
                std::ofstream f(path, std::ios::binary);
                if (!f) fail(Errc::io_error, "cannot write '" + path + "'");
                f << "t,energy\n" << format_double(tp.value) << ',' << format_double(e) << '\n';
                add_artifact(stem + ".csv");
            } else if (out == "dimension") {
                const RoughnessReport rep = box_dimension(series_at(tp));
                json rj;
                rj["dimension"] = rep.dimension;
                rj["rSquared"] = rep.r_squared;
                rj["scalesUsed"] = rep.scales_used;
                const std::string path = (fs::path(sc.out_dir) / (stem + ".json")).string();
                std::ofstream f(path, std::ios::binary);
                if (!f) fail(Errc::io_error, "cannot write '" + path + "'");
                f << rj.dump(2) << '\n';
                add_artifact(stem + ".json");
            } else if (out == "breakpoints") {
                const auto bps = linearity_breakpoints(series_at(tp));
                json rj;
                rj["breakpoints"] = bps;
                rj["tol"] = 1e-3;
                const std::string path = (fs::path(sc.out_dir) / (stem + ".json")).string();
                std::ofstream f(path, std::ios::binary);
                if (!f) fail(Errc::io_error, "cannot write '" + path + "'");
                f << rj.dump(2) << '\n';
                add_artifact(stem + ".json");
            }
        }
    }

    const std::string meta_path = (fs::path(sc.out_dir) / "meta.json").string();
    std::ofstream mf(meta_path, std::ios::binary);
    if (!mf) fail(Errc::io_error, "cannot write '" + meta_path + "'");
    mf << meta.dump(2) << '\n';
}

int run_scenario_file(const std::string& path, std::string* error_json) {
    try {
        run_scenario(Scenario::load(path));
        return 0;
    } catch (const Error& e) {
        if (error_json) {
            json j;
            j["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
            *error_json = j.dump();
        }
        return e.code() == Errc::grid_mismatch ? 2 : 1;
    } catch (const std::exception& e) {
        if (error_json) {
            json j;
            j["error"] = {{"code", "internal"}, {"message", e.what()}};
            *error_json = j.dump();
        }
        return 1;
    }
}

} // namespace revlab
