#pragma once

#include "spingw/keys.hpp"
#include "spingw/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace spingw {

struct MissingRegistryEntry : std::runtime_error {
    explicit MissingRegistryEntry(std::string missing_key)
        : std::runtime_error("missing registry entry: " + missing_key),
          key(std::move(missing_key)) {}
    std::string key;
};

/// Store for invariant values the closed forms do not determine. A registry
/// file is a JSON object mapping canonical key strings to rational strings
/// ("p/q"); every key must parse as a valid InvariantKey.
class Registry {
public:
    Registry() = default;

    static Registry load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("registry: cannot open " + path);
        nlohmann::json j;
        in >> j;
        if (!j.is_object())
            throw std::runtime_error("registry: top level must be a JSON object");
        Registry reg;
        reg.source_path_ = path;
        for (const auto& [k, v] : j.items()) {
            InvariantKey key = InvariantKey::parse(k); // validates
            if (!v.is_string())
                throw std::runtime_error("registry: value of " + k + " must be a rational string");
            reg.entries_[key.canonical()] = Rational::parse(v.get<std::string>());
        }
        return reg;
    }

    void save(const std::string& path) const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : entries_)
            j[k] = v.str();
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("registry: cannot write " + path);
        out << j.dump(2) << "\n";
    }

    void set(const InvariantKey& key, const Rational& value) {
        entries_[key.canonical()] = value;
    }

    std::optional<Rational> find(const InvariantKey& key) const {
        auto it = entries_.find(key.canonical());
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    const std::map<std::string, Rational>& entries() const { return entries_; }
    const std::string& source_path() const { return source_path_; }

private:
    std::map<std::string, Rational> entries_;
    std::string source_path_;
};

} // namespace spingw
