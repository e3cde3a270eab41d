#pragma once

#include "spingw/combo.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace spingw {

struct ReductionStep {
    std::string rule;
    SymbolicCombo before;
    SymbolicCombo after;
};

/// Ordered audit log of rewriting steps; consecutive steps must chain
/// (after[i] == before[i+1]), enforced on append.
class ReductionTrace {
public:
    void append(std::string rule, SymbolicCombo before, SymbolicCombo after) {
        if (!steps_.empty() && !(steps_.back().after == before))
            throw std::logic_error("ReductionTrace: step does not chain with previous state");
        steps_.push_back({std::move(rule), std::move(before), std::move(after)});
    }

    const std::vector<ReductionStep>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    nlohmann::json to_json() const {
        auto combo_json = [](const SymbolicCombo& c) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [k, v] : c.terms())
                j[k] = v.str();
            return j;
        };
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : steps_)
            arr.push_back({{"rule", s.rule}, {"before", combo_json(s.before)}, {"after", combo_json(s.after)}});
        return arr;
    }

private:
    std::vector<ReductionStep> steps_;
};

} // namespace spingw
