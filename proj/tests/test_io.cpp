#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "sfpl/accumulator.hpp"
#include "sfpl/errors.hpp"
#include "sfpl/io.hpp"

using namespace sfpl;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "sfpl_test_io") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("doubles survive the round trip through text") {
    const double values[] = {0.1,
                             1.0 / 3.0,
                             -0.0,
                             2.0,
                             1e-300,
                             1e300,
                             5e-324,
                             1.7976931348623157e308,
                             3.141592653589793,
                             -1.0 / 7.0,
                             0.24601833};
    for (double v : values) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    // and the representation is the shortest one
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-0.25) == "-0.25");
}

TEST_CASE("diagnostics rows carry one argmax column per dimension") {
    TempDir tmp;
    SweepRecord r1;
    r1.sweep = 1;
    r1.av = 0.125;
    r1.s = 0.5;
    r1.argmax = {0.75, -0.5};
    r1.cost_at_argmax = -1.25;
    SweepRecord r2 = r1;
    r2.sweep = 2;
    r2.av = 0.0625;

    const std::string path = tmp.file("diag.csv");
    write_diagnostics_csv({r1, r2}, 2, path);
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "sweep,av,s,cost_at_argmax,argmax_1,argmax_2");
    CHECK(lines[1] == "1,0.125,0.5,-1.25,0.75,-0.5");
    CHECK(lines[2] == "2,0.0625,0.5,-1.25,0.75,-0.5");
}

TEST_CASE("density tables clamp negative density values in the file only") {
    TempDir tmp;
    // second mode strong enough to push the density negative near the center
    const SineBasis basis(2, 0.0, 1.0);
    const CdfExpansion e(basis, {0.6, -0.4});
    const std::string path = tmp.file("density.csv");
    const int clamped = write_density_table(e, path, 256);
    CHECK(clamped > 0);

    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 257);
    CHECK(lines[0] == "x,cdf,pdf");
    bool saw_zero = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double x, c, p;
        char comma;
        std::stringstream ss(lines[i]);
        ss >> x >> comma >> c >> comma >> p;
        CHECK(p >= 0.0);
        if (p == 0.0) saw_zero = true;
    }
    CHECK(saw_zero);
    // the in-memory density is untouched
    bool negative = false;
    for (int i = 0; i < 256; ++i)
        if (e.pdf(i / 255.0) < 0.0) negative = true;
    CHECK(negative);

    CHECK_THROWS_AS(write_density_table(e, path, 1), ConfigError);
}

TEST_CASE("marginals export the accumulated state") {
    const SearchSpace space({0.0, -2.0}, {1.0, 2.0});
    MarginalAccumulator acc(space, 3);
    acc.add(0, {0.9, 0.05, 0.05});
    acc.add(0, {0.7, 0.15, 0.15});
    acc.add(1, {1.0, 0.0, 0.0});

    const std::string text = marginals_to_json(acc, 0.25);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["dims"] == 2);
    CHECK(j["L"] == 3);
    CHECK(j["D"] == 0.25);
    REQUIRE(j["bounds"].size() == 2);
    CHECK(j["bounds"][1][0] == -2.0);
    CHECK(j["bounds"][1][1] == 2.0);
    REQUIRE(j["mean_coeffs"].size() == 2);
    CHECK(j["mean_coeffs"][0][0] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(j["update_count"][0] == 2);
    CHECK(j["update_count"][1] == 1);
}

TEST_CASE("two-trajectory comparison includes the absolute gap") {
    TempDir tmp;
    const std::string path = tmp.file("pair.csv");
    write_two_trajectory_csv({1.0, 1.0}, {0.5, 2.0}, path);
    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "sweep,s1,s2,abs_diff");
    CHECK(lines[1] == "1,1,0.5,0.5");
    CHECK(lines[2] == "2,1,2,1");

    CHECK_THROWS_AS(write_two_trajectory_csv({1.0}, {1.0, 2.0}, path), ConfigError);
}

TEST_CASE("text files are written verbatim") {
    TempDir tmp;
    const std::string path = tmp.file("note.txt");
    write_text_file(path, "alpha\nbeta\n");
    CHECK(slurp(path) == "alpha\nbeta\n");
}

TEST_CASE("writers refuse unwritable paths") {
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/note.txt", "x"), Error);
    CHECK_THROWS_AS(write_diagnostics_csv({}, 1, "/nonexistent-dir/diag.csv"), Error);
}
