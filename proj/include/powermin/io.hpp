#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "powermin/configuration.hpp"
#include "powermin/optimizer.hpp"

namespace powermin {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Configuration document: {"dim": int, "points": [[x, ...], ...]}.
std::string configuration_to_json(const Configuration& c, int indent = -1);
/// Also accepts bare numbers as points when dim == 1. Throws std::invalid_argument.
Configuration configuration_from_json(std::string_view text);

// {"config": {...}, "energy", "grad_inf_norm", "iterations", "restarts_used", "converged"}
std::string minimize_result_to_json(const MinimizeResult& r, int indent = -1);
MinimizeResult minimize_result_from_json(std::string_view text);

/// One row of a diameter-vs-n sweep.
struct SweepRecord {
    std::size_t n = 0;
    double gamma = 0.0;
    double alpha = 0.0;
    std::size_t dim = 1;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    double energy = 0.0;
    double diameter = 0.0;
    double min_gap = 0.0;
    double grad_inf_norm = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    double wall_ms = 0.0;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline constexpr std::string_view kSweepCsvHeader =
    "n,gamma,alpha,dim,seed,restarts,energy,diameter,min_gap,grad_inf_norm,iterations,converged,wall_ms";

std::string sweep_csv_row(const SweepRecord& r);
std::string sweep_csv(const std::vector<SweepRecord>& rows);
/// Throws std::invalid_argument on a header mismatch or malformed row.
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace powermin
