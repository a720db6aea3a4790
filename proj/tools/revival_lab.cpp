// revival-lab: scenario-driven front end over the librevlab C API.
//
//   revival-lab run <scenario.json>
//   revival-lab compare <a.csv> <b.csv>
//   revival-lab spectrum --bc <file> --count N

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "revlab.h"

int main(int argc, char** argv) {
    CLI::App app{"linear Schrodinger revival laboratory"};
    app.require_subcommand(1);

    std::string scenario_path;
    auto* run = app.add_subcommand("run", "run a JSON scenario and emit its artifacts");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();

    std::string csv_a, csv_b;
    auto* cmp = app.add_subcommand("compare", "compare two field CSVs (l2/sup report)");
    cmp->add_option("a", csv_a, "first CSV")->required();
    cmp->add_option("b", csv_b, "second CSV")->required();

    std::string bc_path;
    int count = 16;
    auto* spec = app.add_subcommand("spectrum", "compute the discriminant spectrum");
    spec->add_option("--bc", bc_path, "JSON file with the problem block")->required();
    spec->add_option("--count", count, "number of root pairs")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*run) {
        char* err = nullptr;
        const int rc = revlab_run_scenario(scenario_path.c_str(), &err);
        if (rc != 0) {
            std::fprintf(stderr, "%s\n", err ? err : "{\"error\":{\"code\":\"internal\"}}");
            revlab_string_free(err);
        }
        return rc;
    }
    if (*cmp) {
        char* report = nullptr;
        const revlab_status st = revlab_compare_csv(csv_a.c_str(), csv_b.c_str(), &report);
        if (st == REVLAB_OK) {
            std::printf("%s\n", report);
            revlab_string_free(report);
            return 0;
        }
        std::fprintf(stderr, "{\"error\":{\"code\":%d,\"message\":\"%s\"}}\n",
                     static_cast<int>(st), revlab_last_error());
        return st == REVLAB_ERR_GRID_MISMATCH ? 2 : 1;
    }
    char* json = nullptr;
    const revlab_status st = revlab_spectrum_json_for_bc_file(bc_path.c_str(), count, &json);
    if (st == REVLAB_OK) {
        std::printf("%s\n", json);
        revlab_string_free(json);
        return 0;
    }
    std::fprintf(stderr, "{\"error\":{\"code\":%d,\"message\":\"%s\"}}\n",
                 static_cast<int>(st), revlab_last_error());
    return 1;
}
