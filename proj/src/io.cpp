#include "powermin/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace powermin {

using nlohmann::json;

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("cannot format double");
    return std::string(buf.data(), end);
}

namespace {

json configuration_json(const Configuration& c) {
    json points = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto p = c.point(i);
        points.push_back(std::vector<double>(p.begin(), p.end()));
    }
    return json{{"dim", c.dim()}, {"points", std::move(points)}};
}

Configuration configuration_of(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
        throw std::invalid_argument("configuration JSON needs \"dim\" and \"points\"");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
        throw std::invalid_argument("\"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    const auto& points = doc["points"];
    if (!points.is_array() || points.empty()) throw std::invalid_argument("\"points\" must be a non-empty array");

    std::vector<double> coords;
    coords.reserve(points.size() * dim);
    for (const auto& pt : points) {
        if (pt.is_number() && dim == 1) {
            coords.push_back(pt.get<double>());
            continue;
        }
        if (!pt.is_array() || pt.size() != dim)
            throw std::invalid_argument("every point must have exactly " + std::to_string(dim) + " coordinates");
        for (const auto& v : pt) {
            if (!v.is_number()) throw std::invalid_argument("coordinates must be numbers");
            coords.push_back(v.get<double>());
        }
    }
    return Configuration(dim, std::move(coords));
}

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string configuration_to_json(const Configuration& c, int indent) {
    return configuration_json(c).dump(indent);
}

Configuration configuration_from_json(std::string_view text) { return configuration_of(parse(text)); }

std::string minimize_result_to_json(const MinimizeResult& r, int indent) {
    json doc{{"config", configuration_json(r.config)},
             {"energy", r.energy},
             {"grad_inf_norm", r.grad_inf_norm},
             {"iterations", r.iterations},
             {"restarts_used", r.restarts_used},
             {"converged", r.converged}};
    return doc.dump(indent);
}

MinimizeResult minimize_result_from_json(std::string_view text) {
    const json doc = parse(text);
    try {
        MinimizeResult r;
        r.config = configuration_of(doc.at("config"));
        r.energy = doc.at("energy").get<double>();
        r.grad_inf_norm = doc.at("grad_inf_norm").get<double>();
        r.iterations = doc.at("iterations").get<std::size_t>();
        r.restarts_used = doc.at("restarts_used").get<std::size_t>();
        r.converged = doc.at("converged").get<bool>();
        r.termination = r.converged ? Termination::Converged : Termination::MaxIterExceeded;
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad MinimizeResult JSON: ") + e.what());
    }
}

std::string sweep_csv_row(const SweepRecord& r) {
    std::string row;
    row += std::to_string(r.n) + ',';
    row += format_double(r.gamma) + ',';
    row += format_double(r.alpha) + ',';
    row += std::to_string(r.dim) + ',';
    row += std::to_string(r.seed) + ',';
    row += std::to_string(r.restarts) + ',';
    row += format_double(r.energy) + ',';
    row += format_double(r.diameter) + ',';
    row += format_double(r.min_gap) + ',';
    row += format_double(r.grad_inf_norm) + ',';
    row += std::to_string(r.iterations) + ',';
    row += r.converged ? "true," : "false,";
    row += format_double(r.wall_ms);
    return row;
}

std::string sweep_csv(const std::vector<SweepRecord>& rows) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const auto& r : rows) out += sweep_csv_row(r) + '\n';
    return out;
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::string_view column) {
    T value{};
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size())
        throw std::invalid_argument("bad value '" + std::string(field) + "' in column " + std::string(column));
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
    std::vector<SweepRecord> rows;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != kSweepCsvHeader) throw std::invalid_argument("unexpected sweep CSV header");
            header_seen = true;
            continue;
        }
        const auto f = split(line);
        if (f.size() != 13) throw std::invalid_argument("sweep CSV row needs 13 fields");
        SweepRecord r;
        r.n = parse_field<std::size_t>(f[0], "n");
        r.gamma = parse_field<double>(f[1], "gamma");
        r.alpha = parse_field<double>(f[2], "alpha");
        r.dim = parse_field<std::size_t>(f[3], "dim");
        r.seed = parse_field<std::uint64_t>(f[4], "seed");
        r.restarts = parse_field<std::size_t>(f[5], "restarts");
        r.energy = parse_field<double>(f[6], "energy");
        r.diameter = parse_field<double>(f[7], "diameter");
        r.min_gap = parse_field<double>(f[8], "min_gap");
        r.grad_inf_norm = parse_field<double>(f[9], "grad_inf_norm");
        r.iterations = parse_field<std::size_t>(f[10], "iterations");
        if (f[11] == "true")
            r.converged = true;
        else if (f[11] == "false")
            r.converged = false;
        else
            throw std::invalid_argument("bad value in column converged");
        r.wall_ms = parse_field<double>(f[12], "wall_ms");
        rows.push_back(r);
    }
    if (!header_seen) throw std::invalid_argument("empty sweep CSV");
    return rows;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    auto tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing " + path.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace powermin
