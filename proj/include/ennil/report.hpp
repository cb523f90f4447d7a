#ifndef ENNIL_REPORT_HPP
#define ENNIL_REPORT_HPP

#include <string>
#include <vector>

namespace ennil {

struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::string detail;
};

// status: "pass" iff every check has equal == true; "info" for scanner
// outputs that report observations rather than assertions.
struct Report {
    std::string command;
    std::vector<Check> checks;
    bool info_only = false;
    long timing_ms = 0;

    void add(std::string name, bool equal, std::string lhs = "",
             std::string rhs = "", std::string detail = "") {
        checks.push_back({std::move(name), std::move(lhs), std::move(rhs),
                          equal, std::move(detail)});
    }

    bool passed() const {
        for (auto &c : checks)
            if (!c.equal) return false;
        return true;
    }

    std::string status() const {
        if (info_only) return "info";
        return passed() ? "pass" : "fail";
    }

    void merge(const Report &o, const std::string &prefix = "") {
        for (auto c : o.checks) {
            if (!prefix.empty()) c.name = prefix + "." + c.name;
            checks.push_back(std::move(c));
        }
    }
};

} // namespace ennil

#endif
