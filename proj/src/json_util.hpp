#pragma once

#include <initializer_list>
#include <string>

#include "json.hpp"
#include "qnetcap/errors.hpp"

namespace qnetcap::detail {

// Reject documents with keys outside the schema so typos never silently
// fall back to defaults.
inline void check_keys(const nlohmann::json& j,
                       std::initializer_list<const char*> allowed,
                       const std::string& where) {
    if (!j.is_object())
        throw ConfigError(where + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) { known = true; break; }
        if (!known)
            throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
}

inline double get_number(const nlohmann::json& j, const char* key,
                         const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ConfigError(where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

// Node and community labels may be written as strings or integers; the
// canonical form is the decimal string.
inline std::string canonical_id(const nlohmann::json& v,
                                const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ConfigError(where + ": ids must be strings or integers");
}

} // namespace qnetcap::detail
