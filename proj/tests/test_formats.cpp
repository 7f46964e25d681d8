#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "supersol/errors.hpp"
#include "supersol/figures.hpp"

using namespace supersol;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("double formatting is round-trip exact") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    for (double v : {1e-300, 3.141592653589793, -7.25e18}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("linspace endpoints and spacing") {
    auto xs = linspace(-50.0, 50.0, 501);
    REQUIRE(xs.size() == 501);
    CHECK(xs.front() == -50.0);
    CHECK(xs.back() == 50.0);
    CHECK(std::abs(xs[1] - xs[0] - 0.2) < 1e-12);
    CHECK_THROWS_AS(linspace(3.0, 7.0, 1), SchemaError);
}

TEST_CASE("separated extrema counting") {
    auto xs = linspace(0.0, 10.0, 101);
    std::vector<double> two, flat;
    for (double x : xs) {
        two.push_back(std::exp(-(x - 2) * (x - 2)) + std::exp(-(x - 8) * (x - 8)));
        flat.push_back(0.01);
    }
    CHECK(count_separated_extrema(xs, two, 1.0, 0.1) == 2);
    // peaks closer than the separation merge into one
    CHECK(count_separated_extrema(xs, two, 10.0, 0.1) == 1);
    // everything below threshold counts as zero
    CHECK(count_separated_extrema(xs, flat, 1.0, 0.1) == 0);
}

TEST_CASE("discrete derivative of a line is its slope") {
    auto xs = linspace(0.0, 1.0, 11);
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3.0 * x + 1.0);
    auto d = discrete_derivative(xs, ys);
    REQUIRE(d.size() == xs.size());
    for (double v : d) CHECK(std::abs(v - 3.0) < 1e-12);
}

TEST_CASE("figure files are deterministic and well formed") {
    FigureJob job = FigureJob::defaults(1);
    job.times = {0.0};
    job.xCount = 41;
    job.xMin = -10.0;
    job.xMax = 10.0;

    fs::path dirA = fs::temp_directory_path() / "supersol_fmt_a";
    fs::path dirB = fs::temp_directory_path() / "supersol_fmt_b";
    fs::create_directories(dirA);
    fs::create_directories(dirB);

    job.outDir = dirA.string();
    auto pathsA = run_figure(job);
    job.outDir = dirB.string();
    auto pathsB = run_figure(job);
    REQUIRE(pathsA.size() == 2);  // one csv + one svg
    REQUIRE(pathsB.size() == 2);

    std::string csv = slurp(pathsA[0]);
    CHECK(csv.rfind("x,value\n", 0) == 0);
    // header + one row per sample
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);
    CHECK(csv == slurp(pathsB[0]));

    std::string svg = slurp(pathsA[1]);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg == slurp(pathsB[1]));
}

TEST_CASE("density figure emits one grid file per component") {
    FigureJob job = FigureJob::defaults(2);
    job.xCount = 11;
    job.tCount = 5;
    job.xMin = -5.0;
    job.xMax = 5.0;
    fs::path dir = fs::temp_directory_path() / "supersol_fmt_c";
    fs::create_directories(dir);
    job.outDir = dir.string();
    auto paths = run_figure(job);
    REQUIRE(paths.size() == 6);  // 3 components x (csv + svg)
    std::string csv = slurp(paths[0]);
    CHECK(csv.rfind("x,t,value\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 11 * 5);
}
