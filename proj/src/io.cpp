#include "matspec/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace matspec {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, ErrorCode code) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(code, std::string("invalid JSON: ") + e.what());
    }
}

Complex entry_value(const json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return {e[0].get<double>(), e[1].get<double>()};
    throw Error(ErrorCode::ParseError, "matrix entries must be [re, im] pairs");
}

SquareMatrix matrix_from(const json& j) {
    if (j.is_number()) return SquareMatrix::scalar(1, j.get<double>());
    const json* entries = &j;
    std::size_t dim = 0;
    if (j.is_object()) {
        if (!j.contains("dim") || !j.contains("entries"))
            throw Error(ErrorCode::ParseError, "matrix object needs dim and entries");
        if (!j["dim"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "dim must be a positive integer");
        dim = j["dim"].get<std::size_t>();
        entries = &j["entries"];
    }
    if (!entries->is_array() || entries->empty()) throw Error(ErrorCode::ParseError, "matrix entries must be a list");
    const std::size_t count = entries->size();
    if (dim == 0) {
        dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
        if (dim * dim != count) throw Error(ErrorCode::ParseError, "entry count is not a perfect square");
    }
    if (dim == 0 || count != dim * dim)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(dim * dim) + " entries");
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < count; ++i) m(i / dim, i % dim) = entry_value((*entries)[i]);
    return m;
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::ConfigError, std::string("config key ") + key + " has the wrong type");
    }
}

}  // namespace

SquareMatrix parse_matrix(const std::string& json_text) { return matrix_from(parse_json(json_text, ErrorCode::ParseError)); }

std::vector<SquareMatrix> parse_matrix_list(const std::string& json_text) {
    const json j = parse_json(json_text, ErrorCode::ParseError);
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a list of matrices");
    std::vector<SquareMatrix> out;
    for (const json& m : j) out.push_back(matrix_from(m));
    return out;
}

std::string matrix_to_json(const SquareMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t k = 0; k < m.dim(); ++k) entries.push_back({m(i, k).real(), m(i, k).imag()});
    return entries.dump();
}

Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw Error(ErrorCode::ParseError, "cannot read a number from '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw Error(ErrorCode::ParseError, "complex values are written re,im");
    }
    std::string rest;
    if (in >> rest) throw Error(ErrorCode::ParseError, "trailing text in '" + text + "'");
    return {re, im};
}

RunConfig parse_config(const std::string& json_text) {
    const json j = parse_json(json_text, ErrorCode::ConfigError);
    if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "seeds") {
            cfg.seeds = get_as<std::vector<std::uint64_t>>(j, "seeds");
        } else if (key == "dims") {
            cfg.dims = get_as<std::vector<std::size_t>>(j, "dims");
        } else if (key == "tolerances") {
            for (const auto& [mode, tol] : get_as<std::map<std::string, double>>(j, "tolerances")) {
                if (!cfg.tolerances.count(mode)) throw Error(ErrorCode::ConfigError, "unknown tolerance class " + mode);
                cfg.tolerances[mode] = tol;
            }
        } else if (key == "truncationK") {
            cfg.truncationK = get_as<int>(j, "truncationK");
        } else if (key == "outputPath") {
            cfg.outputPath = get_as<std::string>(j, "outputPath");
        } else {
            throw Error(ErrorCode::ConfigError, "unknown config key " + key);
        }
    }
    cfg.validate();
    return cfg;
}

void apply_seed_override(RunConfig& config, const char* env_value) {
    if (env_value == nullptr) return;
    const std::string s(env_value);
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
        if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
        seed = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, "MATSPEC_SEED must be a non-negative integer");
    }
    if (used != s.size()) throw Error(ErrorCode::ConfigError, "MATSPEC_SEED must be a non-negative integer");
    if (config.seeds.empty())
        config.seeds.push_back(seed);
    else
        config.seeds.front() = seed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace matspec
