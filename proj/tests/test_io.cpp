#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "powermin/io.hpp"

using namespace powermin;

TEST_CASE("format_double round-trips") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5) == "-2.5");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("configuration JSON") {
    const Configuration c(2, {0.1, -0.2, 1.0 / 3.0, 4.0});
    CHECK(configuration_from_json(configuration_to_json(c)) == c);
    CHECK(configuration_to_json(Configuration::line({-0.5, 0.5})) == R"({"dim":1,"points":[[-0.5],[0.5]]})");
    CHECK(configuration_from_json(R"({"dim":1,"points":[0.25,-1]})") == Configuration::line({0.25, -1.0}));

    CHECK_THROWS_AS(configuration_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(R"({"points":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(R"({"dim":0,"points":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(R"({"dim":2,"points":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(R"({"dim":1,"points":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(R"({"dim":1,"points":[["a"]]})"), std::invalid_argument);
}

TEST_CASE("MinimizeResult JSON") {
    MinimizeResult r;
    r.config = Configuration::line({-0.4, 0.4});
    r.energy = -1.0 / 3.0;
    r.grad_inf_norm = 3e-12;
    r.iterations = 17;
    r.restarts_used = 4;
    r.converged = true;
    const auto back = minimize_result_from_json(minimize_result_to_json(r, 2));
    CHECK(back.config == r.config);
    CHECK(back.energy == r.energy);
    CHECK(back.grad_inf_norm == r.grad_inf_norm);
    CHECK(back.iterations == 17);
    CHECK(back.restarts_used == 4);
    CHECK(back.converged);
    CHECK_THROWS_AS(minimize_result_from_json(R"({"energy":1})"), std::invalid_argument);
}

TEST_CASE("sweep CSV round-trips exactly") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<SweepRecord> rows;
    for (std::size_t i = 0; i < 50; ++i) {
        SweepRecord r;
        r.n = 2 + i;
        r.gamma = u(rng);
        r.alpha = r.gamma - std::abs(u(rng)) - 1e-3;
        r.dim = 1 + i % 3;
        r.seed = rng();
        r.restarts = 1 + i % 20;
        r.energy = u(rng) * 1e7;
        r.diameter = std::abs(u(rng));
        r.min_gap = r.diameter * 1e-9;
        r.grad_inf_norm = 1e-13 * std::abs(u(rng));
        r.iterations = rng() % 100000;
        r.converged = i % 3 != 0;
        r.wall_ms = std::abs(u(rng)) * 100;
        rows.push_back(r);
    }
    const auto text = sweep_csv(rows);
    CHECK(text.substr(0, kSweepCsvHeader.size()) == kSweepCsvHeader);
    CHECK(parse_sweep_csv(text) == rows);
    CHECK(sweep_csv(parse_sweep_csv(text)) == text);
}

TEST_CASE("sweep CSV errors") {
    const std::string header(kSweepCsvHeader);
    CHECK_THROWS_AS(parse_sweep_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_csv("n,gamma\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_csv(header + "\n1,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_csv(header + "\n8,-0.5,-2.5,1,42,16,1,2,0.1,0,10,yes,1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_csv(header + "\n8,-0.5,-2.5,1,42,16,1,x,0.1,0,10,true,1\n"), std::invalid_argument);
    CHECK(parse_sweep_csv(header + "\r\n").empty());
}

TEST_CASE("write_text_file replaces atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "powermin_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.json";
    write_text_file(path, "first");
    write_text_file(path, "second");
    CHECK(read_text_file(path) == "second");
    CHECK_FALSE(std::filesystem::exists(dir / "out.json.partial"));
    CHECK_THROWS_AS(read_text_file(dir / "missing"), std::runtime_error);
    CHECK_THROWS(write_text_file(dir / "no" / "such" / "dir.txt", "x"));
    std::filesystem::remove_all(dir);
}
