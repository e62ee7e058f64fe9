#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace charvar {

/// One verified identity. `anchor` states the identity being checked in
/// formula form so a failing run names exactly what broke.
struct Check {
    std::string name;
    std::string anchor;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, std::string anchor, bool passed, std::string detail = "") {
        checks.push_back({std::move(name), std::move(anchor), passed, std::move(detail)});
    }

    void merge(Report other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.passed) ++n;
        return n;
    }
};

}  // namespace charvar
