#pragma once

#include <string>
#include <vector>

namespace gl2rep {

/// One named verification with outcome and optional detail text.
struct Check {
    std::string name;
    bool pass;
    std::string details;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& details = "") {
        checks.push_back({name, pass, details});
    }
    void merge(const Report& other) {
        for (auto& c : other.checks) checks.push_back(c);
    }
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace gl2rep
