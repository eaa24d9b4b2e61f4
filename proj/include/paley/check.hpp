#pragma once

#include <string>
#include <vector>

namespace paley {

// One named verification with an outcome. `detail` carries the first
// counterexample (or the checked parameters) so a failure names what broke.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

} // namespace paley
