#pragma once

#include "symcoh/rational.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#ifndef SYMCOH_DATA_DIR
#define SYMCOH_DATA_DIR "data"
#endif

namespace symcoh {

/// Environment variable that overrides the path of the cited-constants file.
inline constexpr const char* kConstantsEnv = "SYMCOH_CONSTANTS";

inline std::string data_path(const std::string& file) { return std::string(SYMCOH_DATA_DIR) + "/" + file; }

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("malformed data file " + path + ": " + e.what());
    }
}

/// Rationals are stored as JSON integers or "p/q" strings; floats are rejected.
inline Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or \"p/q\" string, got " + j.dump());
}

struct CitedValue {
    Rational value;
    std::string citation;
};

/// Intersection numbers and genera taken from the literature rather than computed.
class CitedConstants {
public:
    static CitedConstants load(const std::string& path) {
        CitedConstants c;
        c.path_ = path;
        auto j = read_json(path);
        for (const auto& [key, entry] : j.at("constants").items())
            c.values_[key] = {json_rational(entry.at("value")), entry.value("citation", "")};
        return c;
    }

    /// The file named by SYMCOH_CONSTANTS, or the shipped default.
    static CitedConstants load_default() {
        const char* env = std::getenv(kConstantsEnv);
        return load(env && *env ? std::string(env) : data_path("cited_constants.json"));
    }

    const CitedValue& at(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::out_of_range("missing cited constant '" + key + "' in " + path_);
        return it->second;
    }
    Rational value(const std::string& key) const { return at(key).value; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::string, CitedValue> values_;
};

}  // namespace symcoh
