#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revlab/complexio.hpp"
#include "revlab/error.hpp"
#include "revlab/revival.hpp"
#include "revlab/scenario.hpp"

using namespace revlab;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("revlab_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

const char* kSmallScenario = R"({
  "problem": {"variant": "pseudoperiodic", "L": 1.0, "beta0": "0.2", "beta1": "2"},
  "initial": {"kind": "box", "a": 0.375, "b": 0.625, "height": "1"},
  "time": [{"rational": "1/2"}, {"float": 0.45}],
  "nterms": 501,
  "grid": 64,
  "outputs": ["series", "energy"],
  "outDir": "OUTDIR"
})";

} // namespace

TEST_CASE("complex literal grammar") {
    CHECK(parse_complex("1") == cplx{1.0, 0.0});
    CHECK(parse_complex("-2.5") == cplx{-2.5, 0.0});
    CHECK(parse_complex("i") == cplx{0.0, 1.0});
    CHECK(parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(parse_complex("3i") == cplx{0.0, 3.0});
    CHECK(parse_complex("1+2i") == cplx{1.0, 2.0});
    CHECK(parse_complex("-0.5-0.25i") == cplx{-0.5, -0.25});
    CHECK(parse_complex("2.5e-1+1e2i") == cplx{0.25, 100.0});
    CHECK(parse_complex("1-i") == cplx{1.0, -1.0});
    CHECK_THROWS_AS((void)parse_complex("1 + 2i"), Error);
    CHECK_THROWS_AS((void)parse_complex("abc"), Error);
    CHECK_THROWS_AS((void)parse_complex("1+2"), Error);
    CHECK_THROWS_AS((void)parse_complex(""), Error);
}

TEST_CASE("scenario parsing and validation") {
    const auto dir = temp_dir("parse");
    std::string text = kSmallScenario;
    text.replace(text.find("OUTDIR"), 6, (dir / "out").string());
    const Scenario sc = Scenario::from_json_text(text, "");
    CHECK(sc.bc.is_pseudoperiodic());
    CHECK(sc.nterms == 501);
    CHECK(sc.grid == 64);
    CHECK(sc.times.size() == 2);
    CHECK(sc.times[0].tag == "1_over_2");
    CHECK(sc.times[1].tag == "0.450000");

    // revival output rejects general variants and float times
    std::string bad = text;
    bad.replace(bad.find("\"series\""), 8, "\"revival\"");
    CHECK_THROWS_AS((void)Scenario::from_json_text(bad, ""), Error);

    std::string unknown = text;
    unknown.replace(unknown.find("\"energy\""), 8, "\"bogus\"");
    CHECK_THROWS_AS((void)Scenario::from_json_text(unknown, ""), Error);
}

TEST_CASE("scenario run emits the expected artifacts and is deterministic") {
    const auto dir = temp_dir("run");
    auto run_into = [&](const std::string& sub) {
        std::string text = kSmallScenario;
        text.replace(text.find("OUTDIR"), 6, (dir / sub).string());
        run_scenario(Scenario::from_json_text(text, ""));
        return dir / sub;
    };
    const auto out1 = run_into("a");
    CHECK(fs::exists(out1 / "series_1_over_2.csv"));
    CHECK(fs::exists(out1 / "series_0.450000.csv"));
    CHECK(fs::exists(out1 / "energy_1_over_2.csv"));
    CHECK(fs::exists(out1 / "meta.json"));

    // header is bit-exact
    std::ifstream csv(out1 / "series_1_over_2.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,re_u,im_u,abs_u");

    // reruns are byte-identical
    const auto out2 = run_into("b");
    for (const char* name : {"series_1_over_2.csv", "series_0.450000.csv",
                             "energy_1_over_2.csv", "energy_0.450000.csv", "meta.json"})
        CHECK(read_file(out1 / name) == read_file(out2 / name));
    fs::remove_all(dir);
}

TEST_CASE("empty outputs produce only meta.json") {
    const auto dir = temp_dir("empty");
    nlohmann::json j = nlohmann::json::parse(kSmallScenario);
    j["outputs"] = nlohmann::json::array();
    j["outDir"] = (dir / "out").string();
    run_scenario(Scenario::from_json_text(j.dump(), ""));
    CHECK(fs::exists(dir / "out" / "meta.json"));
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir / "out")) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);
    fs::remove_all(dir);
}

TEST_CASE("field CSV round trip") {
    const auto dir = temp_dir("csv");
    FieldSample f;
    f.grid = uniform_grid(1.0, 17);
    for (double x : f.grid) f.values.push_back({std::sin(x), std::cos(3 * x)});
    const auto path = (dir / "f.csv").string();
    write_field_csv(path, f);
    const FieldSample g = read_field_csv(path);
    REQUIRE(g.grid.size() == f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        CHECK(g.grid[i] == f.grid[i]); // 17 significant digits round-trip
        CHECK(g.values[i] == f.values[i]);
    }
    fs::remove_all(dir);
}

TEST_CASE("comparison report serializes to the documented JSON") {
    ComparisonReport rep{0.25, 0.5, 64};
    const auto j = nlohmann::json::parse(comparison_to_json(rep));
    CHECK(j["l2"] == 0.25);
    CHECK(j["sup"] == 0.5);
    CHECK(j["gridSize"] == 64);
}

TEST_CASE("bundled scenario files all validate") {
    int seen = 0;
    for (const auto& e : fs::directory_iterator(fs::path(SCENARIO_DIR))) {
        if (e.path().extension() != ".json") continue;
        ++seen;
        const Scenario sc = Scenario::from_json_text(read_file(e.path()), "");
        CHECK(!sc.outputs.empty());
        CHECK(!sc.times.empty());
    }
    CHECK(seen >= 8);
}

TEST_CASE("scenario errors surface as machine-readable JSON") {
    std::string err;
    const int rc = run_scenario_file("/nonexistent/scenario.json", &err);
    CHECK(rc == 1);
    const auto j = nlohmann::json::parse(err);
    CHECK(j["error"]["code"] == "io_error");

    // ill-posed pseudoperiodic problem reported through the same channel
    const auto dir = temp_dir("illposed");
    nlohmann::json sc = nlohmann::json::parse(kSmallScenario);
    sc["problem"]["beta0"] = "2";
    sc["problem"]["beta1"] = "3";
    sc["outDir"] = (dir / "out").string();
    const auto path = (dir / "sc.json").string();
    std::ofstream(path) << sc.dump();
    const int rc2 = run_scenario_file(path, &err);
    CHECK(rc2 == 1);
    CHECK(nlohmann::json::parse(err)["error"]["code"] == "ill_posed");
    fs::remove_all(dir);
}

TEST_CASE("parser rejects malformed literals without crashing") {
    for (const char* bad : {"1+2ii", "++1", "1e", "i2", "2i+1", "1..5", "--3", "1+i2"})
        CHECK_THROWS_AS((void)parse_complex(bad), Error);
    for (const char* bad : {"99999999999999999999/3", "1/0", "a/b", "/", "3/", "1/2/3"})
        CHECK_THROWS_AS((void)RationalTime::parse(bad, 1.0), Error);
}

TEST_CASE("field JSON round trip") {
    FieldSample f;
    f.grid = uniform_grid(1.0, 9);
    for (double x : f.grid) f.values.push_back({std::cos(x), -2.0 * x});
    f.meta.method = Method::Revival;
    f.meta.t = 0.25;
    const FieldSample g = field_from_json(field_to_json(f));
    REQUIRE(g.grid.size() == f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        CHECK(g.grid[i] == f.grid[i]);
        CHECK(g.values[i] == f.values[i]);
    }
    CHECK(g.meta.method == Method::Revival);
    CHECK(g.meta.t == 0.25);
}
